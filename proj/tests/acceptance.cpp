// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "widthforge/compiler.hpp"
#include "widthforge/constructions.hpp"
#include "widthforge/corpus.hpp"
#include "widthforge/generators.hpp"
#include "widthforge/io.hpp"
#include "widthforge/tree_decomposition.hpp"

using namespace wftest;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int width(const Graph& g, CutKind kind) { return solve_branchwidth(CutFunction(g, kind)).value; }

std::string name_of(const Graph& g) {
  std::ostringstream out;
  out << "n" << g.num_vertices() << "{";
  for (const Edge& e : g.edges()) out << e.u + 1 << "-" << e.v + 1 << " ";
  out << "}";
  return out.str();
}

Outcome solver_ground_truth() {
  int checked = 0, wrong = 0;
  for (const Graph& g : connected_graphs(5))
    for (CutKind kind : {CutKind::mim, CutKind::sim, CutKind::mm, CutKind::rank, CutKind::eta}) {
      CutFunction f(g, kind);
      const WidthReport r = solve_branchwidth(f);
      ++checked;
      if (r.value != brute_branchwidth(f) || width_of(r.witness, f).value != r.value) ++wrong;
    }
  return {wrong == 0, std::to_string(checked) + " (graph, kind) pairs, " + std::to_string(wrong) + " mismatches"};
}

Outcome eq_chains() {
  // Every inequality exactly as stated, on every connected graph with at most six vertices.
  int graphs = 0, violations = 0, outside = 0;
  std::string examples;
  for (const Graph& g : connected_graphs(6)) {
    ++graphs;
    const int simw = width(g, CutKind::sim), mimw = width(g, CutKind::mim), rw = width(g, CutKind::rank);
    const int mmw = width(g, CutKind::mm), bw = width(g, CutKind::eta);
    const int tw = exact_treewidth(g).value, ta = exact_tree_alpha(g).value;
    const std::vector<std::pair<const char*, bool>> checks{
        {"simw<=mimw", simw <= mimw},        {"mimw<=rw", mimw <= rw},
        {"rw<=bw", rw <= bw},                {"bw-1<=tw", bw - 1 <= tw},
        {"tw<=3bw/2-1", tw <= 3 * bw / 2 - 1}, {"mmw<=bw", mmw <= bw},
        {"bw<=tw+1", bw <= tw + 1},          {"tw+1<=3mmw", tw + 1 <= 3 * mmw},
        {"simw<=tree-alpha", simw <= ta},    {"tree-alpha<=tw+1", ta <= tw + 1},
    };
    for (const auto& [label, ok] : checks) {
      if (ok) continue;
      ++violations;
      // Degenerate cases: at most one edge (bw fixed to 0) or bw < 2 for the upper bound of tw.
      if (g.num_edges() <= 1 || bw < 2) ++outside;
      if (examples.size() < 400) examples += std::string(" ") + label + "@" + name_of(g);
    }
  }
  std::string detail = std::to_string(graphs) + " graphs, " + std::to_string(violations) + " violations";
  if (violations > 0)
    detail += "; " + std::to_string(outside) + " on graphs with bw <= 1 or at most one edge (K1, K2, stars), " +
              std::to_string(violations - outside) + " elsewhere:" + examples;
  return {violations == 0, detail};
}

Outcome complete_branchwidth() {
  std::string detail;
  bool ok = true;
  for (int n = 3; n <= 7; ++n) {
    const int bw = width(generate(Family::complete, {n}), CutKind::eta);
    ok = ok && bw == (2 * n + 2) / 3;
    detail += "K" + std::to_string(n) + "=" + std::to_string(bw) + " ";
  }
  return {ok, detail};
}

Outcome grid_treewidth() {
  std::string detail;
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    const int tw = exact_treewidth(generate(Family::grid, {n, n})).value;
    ok = ok && tw == n;
    detail += std::to_string(n) + "x" + std::to_string(n) + "=" + std::to_string(tw) + " ";
  }
  return {ok, detail};
}

Outcome rook_construction() {
  const Graph rook = generate(Family::rook, {7, 7});
  const int w = width_of(rook_caterpillar_bd(7, 7), CutFunction(rook, CutKind::sim)).value;
  return {w == 3, "sim width of the 7x7 caterpillar = " + std::to_string(w)};
}

Outcome compiler_suite() {
  int graphs = 0, small = 0, violations = 0;
  for (const auto& e : load_corpus("compiler")) {
    const Graph& g = e.graph;
    if (g.num_vertices() > 12 || g.num_vertices() < 2) continue;
    ++graphs;
    const BranchDecomposition bd = solve_branchwidth(CutFunction(g, CutKind::mim)).witness;
    const CompilerParams p = infer_parameters(g, bd).params;
    const CompileResult r = compile(g, bd, p);
    if (!validate(g, r.td).valid) {
      ++violations;
      continue;
    }
    const int alpha = alpha_of(g, r.td).value;
    if (static_cast<std::uint64_t>(alpha) >= alpha_bound(p.n, p.m, p.k)) ++violations;
    if (g.num_vertices() <= 8) {
      ++small;
      if (alpha < exact_tree_alpha(g).value) ++violations;
    }
  }
  return {violations == 0 && graphs >= 50, std::to_string(graphs) + " graphs (" + std::to_string(small) +
                                               " with <= 8 vertices), " + std::to_string(violations) + " violations"};
}

Outcome odd_powers() {
  int checks = 0, violations = 0;
  for (const Graph& g : connected_graphs(6)) {
    const WidthReport opt = solve_branchwidth(CutFunction(g, CutKind::sim));
    for (int r : {3, 5}) {
      checks += 2;
      if (!odd_power_transfer(g, opt.witness, r).holds()) ++violations;
      if (width(graph_power(g, r), CutKind::sim) > opt.value) ++violations;
    }
  }
  return {violations == 0, std::to_string(checks) + " checks, " + std::to_string(violations) + " violations"};
}

Outcome line_monotonicity() {
  int contraction = 0, deletion = 0, transport = 0, violations = 0;
  for (int m = 1; m <= 9; ++m)
    for (const Graph& g : graphs_with_edges(m)) {
      const Graph lg = line_graph(g);
      if (m >= 3 && m <= 8) {
        const int base = width(lg, CutKind::sim);
        for (const Edge& e : g.edges()) {
          ++contraction;
          const Graph c = contract_edge(g, e);
          if (width(line_graph(c), CutKind::sim) > base) ++violations;
        }
        const int simw = width(g, CutKind::sim);
        for (int v = 0; v < g.num_vertices(); ++v) {
          ++deletion;
          if (width(delete_vertex(g, v), CutKind::sim) > simw) ++violations;
        }
      }
      ++transport;
      if (width(lg, CutKind::mim) > width(g, CutKind::eta)) ++violations;
    }
  return {violations == 0, std::to_string(contraction) + " contractions, " + std::to_string(deletion) +
                               " deletions, " + std::to_string(transport) + " mim/bw pairs, " +
                               std::to_string(violations) + " violations"};
}

Outcome counterexample() {
  bool ok = true;
  for (int d = 1; d <= 4; ++d) {
    const Graph g = generate(Family::degeneracy_counterexample, {d});
    ok = ok && bipartition(g).has_value() && degeneracy(g).value <= d && max_matching_size(g) == 2 * d &&
         max_induced_matching_size(g) == 1;
  }
  return {ok, "d = 1..4"};
}

Outcome degenerate_matchings() {
  int graphs = 0, violations = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const int d = degeneracy(g).value;
    const int mu = max_matching_size(g);
    const int im = max_induced_matching_size(g);
    if (d == 0 ? mu != 0 : static_cast<long long>(im) * (4 * d - 1) < mu) ++violations;
  };
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) check(g);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    check(random_graph(n, p, rng()));
  }
  return {violations == 0, std::to_string(graphs) + " graphs, " + std::to_string(violations) + " violations"};
}

bool semi_matching_instance(std::mt19937& rng, int& failures) {
  const int j = 1 + static_cast<int>(rng() % 3), l = 1 + static_cast<int>(rng() % 4);
  const int size_u = 2 * j * l + static_cast<int>(rng() % 6);
  const int size_v = (size_u + j - 1) / j + static_cast<int>(rng() % 8);
  const int n = size_u + size_v;
  Graph g(n);
  std::vector<int> load(size_v, 0);
  auto link = [&](int x, int y) {
    if (load[y] < j && !g.adjacent(x, size_u + y)) {
      g.add_edge(x, size_u + y);
      ++load[y];
      return true;
    }
    return false;
  };
  for (int x = 0; x < size_u; ++x) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) placed = link(x, static_cast<int>(rng() % size_v));
    if (!placed) return false;
  }
  for (int extra = 0; extra < size_u; ++extra) link(static_cast<int>(rng() % size_u), static_cast<int>(rng() % size_v));
  std::bernoulli_distribution noise(0.2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((a < size_u) == (b < size_u) && noise(rng)) g.add_edge(a, b);
  VertexSet u = VertexSet::prefix(size_u), v = VertexSet::prefix(n).minus(u);
  const Matching m = extract_semi_matching(g, u, v, j, l);
  // Independent check: l pairs (x, y), x in U, y in V, with x_i y_j adjacent iff i = j.
  bool ok = m.size() == l && verify_matching(g, m);
  for (int a = 0; a < m.size() && ok; ++a) {
    const int xa = u.test(m.edges[a].u) ? m.edges[a].u : m.edges[a].v;
    const int ya = xa == m.edges[a].u ? m.edges[a].v : m.edges[a].u;
    ok = u.test(xa) && v.test(ya) && g.adjacent(xa, ya);
    for (int b = 0; b < m.size() && ok; ++b) {
      if (a == b) continue;
      const int yb = u.test(m.edges[b].u) ? m.edges[b].v : m.edges[b].u;
      ok = !g.adjacent(xa, yb);
    }
  }
  if (!ok) ++failures;
  return true;
}

bool biclique_instance(std::mt19937& rng, int& failures, int& bicliques, int& matchings) {
  const int n = 1 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 2), k = 1 + static_cast<int>(rng() % 2);
  const int need = static_cast<int>(g_threshold(m, n, k));
  const int size_u = (1 << (n + k)) + static_cast<int>(rng() % 4);
  const int size_v = need + static_cast<int>(rng() % (3 * need + 4));
  Graph g(size_u + size_v);
  std::bernoulli_distribution noise(0.1);
  for (int a = size_u; a < size_u + size_v; ++a)
    for (int b = a + 1; b < size_u + size_v; ++b)
      if (noise(rng)) g.add_edge(a, b);
  const int degree = need + static_cast<int>(rng() % (size_v - need + 1));
  std::vector<int> pool(size_v);
  std::iota(pool.begin(), pool.end(), size_u);
  for (int x = 0; x < size_u; ++x) {
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = 0; i < degree + 2; ++i)
      if (i < size_v) g.add_edge(x, pool[i]);
  }
  VertexSet u = VertexSet::prefix(size_u), v = VertexSet::prefix(size_u + size_v).minus(u);
  for (int x = 0; x < size_u; ++x)
    if (independence_number_size(g, g.neighbors(x) & v) < need) return false;
  const MatchingOrBiclique r = extract_kP2_or_biclique(g, u, v, n, m, k);
  bool ok = r.matching.has_value() != r.biclique.has_value();
  if (ok && r.biclique) {
    ++bicliques;
    const Biclique& b = *r.biclique;
    ok = b.x.count() == n && b.y.count() == m && b.x.is_subset_of(u) && b.y.is_subset_of(v) &&
         is_independent(g, b.x) && is_independent(g, b.y);
    for (int x = b.x.first(); x >= 0 && ok; x = b.x.next(x)) ok = b.y.is_subset_of(g.neighbors(x));
  }
  if (ok && r.matching) {
    ++matchings;
    ok = r.matching->size() == k && verify_matching(g, *r.matching);
    for (const Edge& e : r.matching->edges) ok = ok && (u.test(e.u) != u.test(e.v));
  }
  if (!ok) ++failures;
  return true;
}

Outcome extractors() {
  std::mt19937 rng(77);
  int semi = 0, semi_fail = 0, kp2 = 0, kp2_fail = 0, bicliques = 0, matchings = 0;
  while (semi < 200)
    if (semi_matching_instance(rng, semi_fail)) ++semi;
  while (kp2 < 200)
    if (biclique_instance(rng, kp2_fail, bicliques, matchings)) ++kp2;

  int triples = 0, triple_fail = 0;
  auto extract = [&](const Graph& g, const BranchDecomposition& bd, int edge, int n) {
    ++triples;
    try {
      const TripleExtraction t = perfect_triple_extract(g, bd, edge, n);
      if (t.matching.size() < n || !verify_matching(line_graph(g), t.matching)) ++triple_fail;
    } catch (const std::exception&) {
      ++triple_fail;
    }
  };
  for (int len = 48; len <= 64; len += 2) {
    const Graph g = generate(Family::cycle, {len});
    std::vector<int> order;
    for (int i = 0; i < len; i += 2) order.push_back(i);
    for (int i = 1; i < len; i += 2) order.push_back(i);
    for (int n = 1; n <= 2; ++n)
      if (len >= 25 * n - 1) extract(g, caterpillar_bd(order), len / 2 - 2, n);
  }
  for (int trial = 0; trial < 40; ++trial) {
    const int vertices = 60 + trial;
    const Graph g = random_small_graph(rng, vertices, 2.5 / vertices);
    if (g.num_edges() < 4 || g.num_edges() > kMaxElements) continue;
    std::vector<int> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const BranchDecomposition bd = caterpillar_bd(order);
    const int edge = g.num_edges() / 2 - 2;
    const int mid = mid_set(g, bd.side(edge)).count();
    for (int n = 1; n <= 2; ++n)
      if (mid >= 25 * n - 1) extract(g, bd, edge, n);
  }
  const int failures = semi_fail + kp2_fail + triple_fail;
  return {failures == 0, std::to_string(semi) + " semi-matching, " + std::to_string(kp2) + " kP2-or-biclique (" +
                             std::to_string(bicliques) + " bicliques, " + std::to_string(matchings) +
                             " matchings), " + std::to_string(triples) + " perfect triples, " +
                             std::to_string(failures) + " failures"};
}

Outcome chordal_anchors() {
  int violations = 0;
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    const Graph g = generate(Family::random_chordal, {2 + static_cast<int>(seed % 7)}, seed);
    if (exact_tree_alpha(g).value != 1 || width(g, CutKind::sim) > 1) ++violations;
  }
  return {violations == 0, "100 graphs, " + std::to_string(violations) + " violations"};
}

Outcome round_trips() {
  int graphs = 0, bds = 0, tds = 0, mismatches = 0;
  std::vector<Graph> corpus = connected_graphs(6);
  for (int m = 1; m <= 7; ++m)
    for (Graph& g : graphs_with_edges(m)) corpus.push_back(std::move(g));
  for (auto& e : load_corpus("compiler")) corpus.push_back(std::move(e.graph));
  for (const Graph& g : corpus) {
    ++graphs;
    const std::string text = serialize_graph(g);
    const Graph back = parse_graph(text);
    if (!(back == g) || serialize_graph(back) != text) ++mismatches;
    if (g.num_vertices() <= 10) {
      const TreeDecomposition td = exact_treewidth(g).td;
      const std::string ttext = serialize_td(td, g.num_vertices());
      const ParsedTd tback = parse_td(ttext);
      ++tds;
      if (!(tback.td == td) || serialize_td(tback.td, tback.num_vertices) != ttext) ++mismatches;
    }
    if (g.num_vertices() >= 1 && g.num_vertices() <= 12) {
      const BranchDecomposition bd = solve_branchwidth(CutFunction(g, CutKind::mim)).witness;
      const std::string btext = serialize_bd(bd);
      const BranchDecomposition bback = parse_bd(btext);
      ++bds;
      if (!(bback == bd) || serialize_bd(bback) != btext) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(graphs) + " graphs, " + std::to_string(bds) + " bds, " +
                               std::to_string(tds) + " tds, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"solver ground truth", solver_ground_truth},
      {"eq-chain suite", eq_chains},
      {"bw(K_n) = ceil(2n/3)", complete_branchwidth},
      {"tw(n x n grid) = n", grid_treewidth},
      {"rook construction", rook_construction},
      {"compiler", compiler_suite},
      {"odd powers", odd_powers},
      {"line-graph monotonicity", line_monotonicity},
      {"counterexample", counterexample},
      {"degenerate induced matchings", degenerate_matchings},
      {"witness extractors", extractors},
      {"chordal anchors", chordal_anchors},
      {"format round trips", round_trips},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
