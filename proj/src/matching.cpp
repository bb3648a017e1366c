#include "widthforge/matching.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "mis.hpp"
#include "widthforge/errors.hpp"

namespace widthforge {
namespace {

int matching_size_of(int n, const std::vector<Edge>& edges) {
  if (edges.empty()) return 0;
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(n);
  for (const Edge& e : edges) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return static_cast<int>(boost::matching_size(bg, &mate[0]));
}

bool touches(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

bool joined(const Graph& g, const Edge& a, const Edge& b) {
  return g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) || g.adjacent(a.v, b.u) ||
         g.adjacent(a.v, b.v);
}

// Candidate edges for an induced matching search, oriented so that u lies
// in the cut side when a cut is given.
std::vector<Edge> candidates(const Graph& g, const std::optional<VertexSet>& cut) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!cut) {
      out.push_back(e);
      continue;
    }
    bool iu = cut->test(e.u), iv = cut->test(e.v);
    if (iu == iv) continue;
    out.push_back(iu ? e : Edge{e.v, e.u});
  }
  return out;
}

bool conflict(const Graph& g, const std::optional<VertexSet>& cut, CutMode mode, const Edge& a,
              const Edge& b) {
  if (touches(a, b)) return true;
  if (cut && mode == CutMode::bipartite_cut) return g.adjacent(a.u, b.v) || g.adjacent(b.u, a.v);
  return joined(g, a, b);
}

template <std::size_t W>
std::vector<Bits<W>> compatibility(const Graph& g, const std::optional<VertexSet>& cut, CutMode mode,
                                   const std::vector<Edge>& cand) {
  const int c = static_cast<int>(cand.size());
  std::vector<Bits<W>> compat(c);
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j)
      if (!conflict(g, cut, mode, cand[i], cand[j])) {
        compat[i].set(j);
        compat[j].set(i);
      }
  return compat;
}

void check_cut(const Graph& g, const std::optional<VertexSet>& cut) {
  if (cut && !cut->is_subset_of(g.all_vertices()))
    throw InvalidArgument("cut side contains vertices outside the graph");
}

std::vector<Bits<4>> vertex_compatibility(const Graph& g, const VertexSet& within) {
  std::vector<Bits<4>> compat(g.num_vertices());
  for (int v = within.first(); v >= 0; v = within.next(v)) {
    compat[v] = within.minus(g.neighbors(v));
    compat[v].reset(v);
  }
  return compat;
}

}  // namespace

bool verify_matching(const Graph& g, const Matching& m) {
  VertexSet used;
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices() || e.v >= g.num_vertices()) return false;
    if (!g.adjacent(e.u, e.v)) return false;
    if (used.test(e.u) || used.test(e.v)) return false;
    used.set(e.u);
    used.set(e.v);
  }
  if (m.kind == MatchingKind::plain) return true;
  if (m.kind == MatchingKind::induced) {
    for (std::size_t i = 0; i < m.edges.size(); ++i)
      for (std::size_t j = i + 1; j < m.edges.size(); ++j)
        if (joined(g, m.edges[i], m.edges[j])) return false;
    return true;
  }
  if (!m.cut) return false;
  VertexSet xs, ys;
  std::vector<Edge> oriented;
  for (const Edge& e : m.edges) {
    bool iu = m.cut->test(e.u), iv = m.cut->test(e.v);
    if (iu == iv) return false;
    Edge o = iu ? e : Edge{e.v, e.u};
    xs.set(o.u);
    ys.set(o.v);
    oriented.push_back(o);
  }
  for (std::size_t i = 0; i < oriented.size(); ++i)
    for (std::size_t j = 0; j < oriented.size(); ++j)
      if (i != j && g.adjacent(oriented[i].u, oriented[j].v)) return false;
  if (m.kind == MatchingKind::crossing_induced)
    return is_independent(g, xs) && is_independent(g, ys);
  return true;
}

int max_matching_size(const Graph& g) { return matching_size_of(g.num_vertices(), g.edges()); }

Matching max_matching(const Graph& g) {
  Matching out;
  int need = max_matching_size(g);
  std::vector<Edge> avail = g.edges();
  std::size_t pos = 0;
  while (need > 0 && pos < avail.size()) {
    Edge e = avail[pos];
    std::vector<Edge> rest;
    for (std::size_t j = pos + 1; j < avail.size(); ++j)
      if (!touches(avail[j], e)) rest.push_back(avail[j]);
    if (1 + matching_size_of(g.num_vertices(), rest) >= need) {
      out.edges.push_back(e);
      --need;
      avail = std::move(rest);
      pos = 0;
    } else {
      ++pos;
    }
  }
  return out;
}

int max_cut_matching_size(const Graph& g, const VertexSet& side) {
  const VertexSet other = g.all_vertices().minus(side);
  std::vector<int> match_of(g.num_vertices(), -1);  // y -> x
  int size = 0;
  for (int x = side.first(); x >= 0 && x < g.num_vertices(); x = side.next(x)) {
    VertexSet visited;
    // Kuhn's augmenting path search.
    auto augment = [&](auto&& self, int from) -> bool {
      VertexSet nb = g.neighbors(from) & other;
      for (int y = nb.first(); y >= 0; y = nb.next(y)) {
        if (visited.test(y)) continue;
        visited.set(y);
        if (match_of[y] < 0 || self(self, match_of[y])) {
          match_of[y] = from;
          return true;
        }
      }
      return false;
    };
    if (augment(augment, x)) ++size;
  }
  return size;
}

int max_induced_matching_size(const Graph& g, const std::optional<VertexSet>& cut, CutMode mode) {
  check_cut(g, cut);
  std::vector<Edge> cand = candidates(g, cut);
  if (cand.empty()) return 0;
  const int c = static_cast<int>(cand.size());
  if (c > detail::kMaxCandidates) throw CapExceeded("induced matching candidates", c, detail::kMaxCandidates);
  return detail::dispatch_words(c, [&]<std::size_t W>() {
    auto compat = compatibility<W>(g, cut, mode, cand);
    detail::IndependentSetSearch<W> search(compat);
    return search.solve(Bits<W>::prefix(c));
  });
}

Matching max_induced_matching(const Graph& g, const std::optional<VertexSet>& cut, CutMode mode) {
  check_cut(g, cut);
  Matching out;
  out.cut = cut;
  out.kind = !cut ? MatchingKind::induced
                  : (mode == CutMode::bipartite_cut ? MatchingKind::cut_induced
                                                    : MatchingKind::crossing_induced);
  std::vector<Edge> cand = candidates(g, cut);
  if (cand.empty()) return out;
  const int c = static_cast<int>(cand.size());
  if (c > detail::kMaxCandidates) throw CapExceeded("induced matching candidates", c, detail::kMaxCandidates);
  std::vector<int> chosen = detail::dispatch_words(c, [&]<std::size_t W>() {
    auto compat = compatibility<W>(g, cut, mode, cand);
    detail::IndependentSetSearch<W> search(compat);
    auto all = Bits<W>::prefix(c);
    int best = search.solve(all);
    return detail::lex_smallest_independent_set<W>(compat, all, best).to_vector();
  });
  for (int i : chosen) {
    Edge e = cand[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    out.edges.push_back(e);
  }
  return out;
}

IndependentSet independence_number(const Graph& g, const std::optional<VertexSet>& within) {
  VertexSet w = within ? *within : g.all_vertices();
  if (!w.is_subset_of(g.all_vertices()))
    throw InvalidArgument("independence_number: subset has vertices outside the graph");
  auto compat = vertex_compatibility(g, w);
  detail::IndependentSetSearch<4> search(compat);
  IndependentSet out;
  out.size = search.solve(w);
  out.witness = detail::lex_smallest_independent_set<4>(compat, w, out.size);
  return out;
}

int independence_number_size(const Graph& g, const VertexSet& within) {
  auto compat = vertex_compatibility(g, within);
  detail::IndependentSetSearch<4> search(compat);
  return search.solve(within);
}

bool has_independent_set(const Graph& g, const VertexSet& within, int k, VertexSet* witness) {
  if (k <= 0) {
    if (witness) witness->clear();
    return true;
  }
  if (within.count() < k) return false;
  auto compat = vertex_compatibility(g, within);
  detail::IndependentSetSearch<4> search(compat);
  VertexSet found;
  if (search.solve(within, k, &found) < k) return false;
  if (witness) {
    // trim to exactly k vertices
    witness->clear();
    int taken = 0;
    for (int v = found.first(); v >= 0 && taken < k; v = found.next(v), ++taken) witness->set(v);
  }
  return true;
}

Degeneracy degeneracy(const Graph& g) {
  Degeneracy out;
  VertexSet alive = g.all_vertices();
  while (alive.any()) {
    int pick = -1, pick_deg = 0;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      int d = (g.neighbors(v) & alive).count();
      if (pick < 0 || d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    out.value = std::max(out.value, pick_deg);
    out.order.push_back(pick);
    alive.reset(pick);
  }
  return out;
}

namespace {

// Lexicographically first independent set of exactly k vertices in `within`.
std::optional<VertexSet> lex_first_independent_set(const Graph& g, const VertexSet& within, int k) {
  if (!has_independent_set(g, within, k)) return std::nullopt;
  VertexSet chosen, avail = within;
  int need = k;
  for (int v = within.first(); v >= 0 && need > 0; v = within.next(v)) {
    if (!avail.test(v)) continue;
    avail.reset(v);
    VertexSet rest = avail.minus(g.neighbors(v));
    if (has_independent_set(g, rest, need - 1)) {
      chosen.set(v);
      --need;
      avail = rest;
    }
  }
  return chosen;
}

bool extend_biclique(const Graph& g, int n, int m, int start, VertexSet& x, const VertexSet& common,
                     std::optional<Biclique>& out) {
  if (x.count() == n) {
    if (auto y = lex_first_independent_set(g, common, m)) {
      out = Biclique{x, *y};
      return true;
    }
    return false;
  }
  for (int v = start; v < g.num_vertices(); ++v) {
    if (g.neighbors(v).intersects(x)) continue;
    VertexSet next = common & g.neighbors(v);
    if (next.count() < m) continue;
    x.set(v);
    if (extend_biclique(g, n, m, v + 1, x, next, out)) return true;
    x.reset(v);
  }
  return false;
}

}  // namespace

std::optional<Biclique> find_induced_biclique(const Graph& g, int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("find_induced_biclique: sizes must be positive");
  std::optional<Biclique> out;
  VertexSet x;
  extend_biclique(g, n, m, 0, x, g.all_vertices(), out);
  return out;
}

}  // namespace widthforge
