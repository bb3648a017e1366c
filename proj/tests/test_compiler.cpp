#include <doctest.h>

#include "support.hpp"
#include "widthforge/compiler.hpp"
#include "widthforge/corpus.hpp"
#include "widthforge/errors.hpp"
#include "widthforge/generators.hpp"

using namespace wftest;

namespace {

struct Instance {
  Graph g;
  BranchDecomposition bd;
  CompilerParams params;
};

Instance optimal(const Graph& g) {
  CutFunction f(g, CutKind::mim);
  BranchDecomposition bd = solve_branchwidth(f).witness;
  CompilerParams p = infer_parameters(g, bd).params;
  return {g, bd, p};
}

std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (const auto& e : load_corpus("compiler"))
    if (e.graph.num_vertices() >= 2) out.push_back(optimal(e.graph));
  return out;
}

}  // namespace

TEST_SUITE("decomp-compiler") {
  TEST_CASE("thresholds") {
    CHECK(f_threshold(2, 2) == 16);
    CHECK(g_threshold(2, 2, 3) == 18);
    CHECK(alpha_bound(2, 2, 2) == 6 * (8 + 2 * 8));
    CHECK(alpha_bound(60, 60, 60) == std::numeric_limits<std::uint64_t>::max());
  }

  TEST_CASE("K2 with its only decomposition") {
    const Graph g = generate(Family::complete, {2});
    const CompileResult r = compile(g, BranchDecomposition(2, {{0, 1}}, {0, 1}), {2, 2, 2});
    CHECK(validate(g, r.td).valid);
    CHECK(alpha_of(g, r.td).value == 1);
    CHECK(r.stats.steps == 1);
  }

  TEST_CASE("parameter inference") {
    const Graph c5 = generate(Family::cycle, {5});
    const InferredParams p = infer_parameters(c5, optimal(c5).bd);
    CHECK(p.params.n == 2);
    CHECK(p.params.m == 2);
    CHECK(p.params.k == p.mim_width + 1);
    CHECK_FALSE(p.fallback);
    const Graph k55 = generate(Family::biclique, {5, 5});
    CHECK(infer_parameters(k55, identity_caterpillar(10)).fallback);
  }

  TEST_CASE("incremental and recomputed frontiers produce identical runs") {
    for (const Instance& in : instances()) {
      const CompileResult a = compile(in.g, in.bd, in.params, {FrontierMode::incremental, false});
      const CompileResult b = compile(in.g, in.bd, in.params, {FrontierMode::full_recompute, false});
      CHECK(a.td == b.td);
      CHECK(a.labels == b.labels);
      CHECK(a.stats.steps == b.stats.steps);
      CHECK(a.stats.bad == b.stats.bad);
    }
  }

  TEST_CASE("step invariants: partial validity, growing bags, shrinking frontiers") {
    for (const Instance& in : instances()) {
      TreeDecompositionCompiler c(in.g, in.bd, in.params);
      const int tree_nodes = c.tree().num_nodes();
      TreeDecomposition before = c.current();
      int steps = 0;
      while (c.step()) {
        ++steps;
        const TreeDecomposition& now = c.current();
        CHECK(validate_partial(in.g, now).valid);
        for (int t = 0; t < now.num_nodes(); ++t) CHECK(before.bag(t).is_subset_of(now.bag(t)));
        const FrontierTriple& ins = *c.last_insertion();
        CHECK(ins.frontier.any());
        CHECK(now.bag(ins.b).test(ins.u));
        for (const FrontierTriple& t : c.triples())
          if (t.u == ins.u && t.a == ins.b) CHECK(t.frontier.is_subset_of(ins.frontier));
        for (const FrontierTriple& t : c.triples()) {
          CHECK(now.bag(t.a).test(t.u));
          CHECK_FALSE(now.bag(t.b).test(t.u));
        }
        before = now;
      }
      CHECK(c.done());
      CHECK(steps <= in.g.num_vertices() * tree_nodes);
      for (const FrontierTriple& t : c.triples()) CHECK(t.frontier.empty());
      CHECK(validate(in.g, c.current()).valid);
    }
  }

  TEST_CASE("bad labels are only given to rich frontiers") {
    for (const Instance& in : instances()) {
      TreeDecompositionCompiler c(in.g, in.bd, in.params);
      const int g_value = static_cast<int>(std::min<std::uint64_t>(g_threshold(in.params.m, in.params.n, in.params.k), 257));
      while (c.step()) {
        const FrontierTriple& ins = *c.last_insertion();
        const bool rich = has_independent_set(in.g, ins.frontier, g_value);
        CHECK((c.phase() == 1) == rich);
      }
    }
  }

  TEST_CASE("outputs stay below the independence bound") {
    for (const Instance& in : instances()) {
      const CompileResult r = compile(in.g, in.bd, in.params);
      REQUIRE(validate(in.g, r.td).valid);
      CHECK(static_cast<std::uint64_t>(alpha_of(in.g, r.td).value) < alpha_bound(in.params.n, in.params.m, in.params.k));
    }
  }

  TEST_CASE("check mode warns about violated hypotheses") {
    const Graph c4 = generate(Family::cycle, {4});
    const CompileResult r = compile(c4, identity_caterpillar(4), {2, 2, 1}, {FrontierMode::incremental, true});
    CHECK(r.stats.warnings.size() == 2);
    CHECK(validate(c4, r.td).valid);
    CHECK_THROWS_AS(compile(c4, identity_caterpillar(5), {2, 2, 2}), InvalidArgument);
    CHECK_THROWS_AS(compile(c4, identity_caterpillar(4), {0, 2, 2}), InvalidArgument);
  }
}

TEST_SUITE("extractors") {
  TEST_CASE("semi-matching on kP2") {
    for (int k = 1; k <= 5; ++k) {
      Graph g(2 * k);
      VertexSet u, v;
      for (int i = 0; i < k; ++i) {
        g.add_edge(i, k + i);
        u.set(i);
        v.set(k + i);
      }
      // |U| >= 2jl needs l <= k/2 here
      if (k >= 2) {
        const Matching m = extract_semi_matching(g, u, v, 1, k / 2);
        CHECK(m.size() == k / 2);
        CHECK(verify_matching(g, m));
      }
    }
  }

  TEST_CASE("semi-matching preconditions name the failed bound") {
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    const VertexSet u = set_of(0b0011), v = set_of(0b1100);
    CHECK_THROWS_WITH_AS(extract_semi_matching(g, u, v, 1, 1), doctest::Contains("neighbours in U"), InvalidArgument);
    CHECK_THROWS_WITH_AS(extract_semi_matching(g, u, v, 2, 1), doctest::Contains("below 2jl"), InvalidArgument);
    CHECK_THROWS_AS(extract_semi_matching(g, u, u, 2, 1), InvalidArgument);
  }

  TEST_CASE("kP2-or-biclique on a planted biclique") {
    // U: 2^(n+k) = 16 independent vertices complete to an independent V of size 8 = m k^n.
    Graph g(24);
    VertexSet u = set_of(0xFFFF), v;
    for (int y = 16; y < 24; ++y) v.set(y);
    for (int x = 0; x < 16; ++x)
      for (int y = 16; y < 24; ++y) g.add_edge(x, y);
    const MatchingOrBiclique r = extract_kP2_or_biclique(g, u, v, 2, 2, 2);
    REQUIRE(r.biclique.has_value());
    CHECK_FALSE(r.matching.has_value());
    CHECK(r.biclique->x.count() == 2);
    CHECK(r.biclique->y.count() == 2);
  }

  TEST_CASE("kP2-or-biclique on a planted matching") {
    // Each u has a private independent neighbourhood: no biclique with n = 2 exists.
    const int n = 2, m = 1, k = 2;
    const int size_u = 16, private_size = 4;
    Graph g(size_u + size_u * private_size);
    VertexSet u, v;
    for (int x = 0; x < size_u; ++x) {
      u.set(x);
      for (int i = 0; i < private_size; ++i) {
        const int y = size_u + x * private_size + i;
        v.set(y);
        g.add_edge(x, y);
      }
    }
    const MatchingOrBiclique r = extract_kP2_or_biclique(g, u, v, n, m, k);
    REQUIRE(r.matching.has_value());
    CHECK(r.matching->size() == k);
    CHECK(verify_matching(g, *r.matching));
  }

  TEST_CASE("kP2-or-biclique preconditions") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(extract_kP2_or_biclique(g, set_of(3), set_of(4), 1, 1, 1), InvalidArgument);
    CHECK_THROWS_WITH_AS(extract_kP2_or_biclique(g, set_of(1), set_of(6), 1, 1, 1), doctest::Contains("2^(n+k)"),
                         InvalidArgument);
  }
}
