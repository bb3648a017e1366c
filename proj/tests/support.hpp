#pragma once

// Brute-force oracles and small builders shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "widthforge/branch_decomposition.hpp"
#include "widthforge/cut_functions.hpp"
#include "widthforge/graph.hpp"

namespace wftest {

using namespace widthforge;

// Caterpillar with leaves in the given order: spine c_1..c_{s-2}, first and
// last two leaves sharing the end spine nodes.
inline BranchDecomposition caterpillar_bd(const std::vector<int>& order) {
  const int s = static_cast<int>(order.size());
  std::vector<int> leaf_of(s);
  if (s <= 1) {
    if (s == 1) leaf_of[order[0]] = 0;
    return BranchDecomposition(s, {}, leaf_of);
  }
  if (s == 2) {
    leaf_of[order[0]] = 0;
    leaf_of[order[1]] = 1;
    return BranchDecomposition(2, {{0, 1}}, leaf_of);
  }
  const int spine = s - 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i) leaf_of[order[i]] = i;
  auto spine_node = [&](int i) { return s + i; };
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({spine_node(i), spine_node(i + 1)});
  edges.push_back({0, spine_node(0)});
  for (int i = 1; i < s - 1; ++i) edges.push_back({i, spine_node(i - 1)});
  edges.push_back({s - 1, spine_node(spine - 1)});
  return BranchDecomposition(s + spine, edges, leaf_of);
}

inline BranchDecomposition identity_caterpillar(int s) {
  std::vector<int> order(s);
  std::iota(order.begin(), order.end(), 0);
  return caterpillar_bd(order);
}

inline std::vector<int> subset(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1U) out.push_back(i);
  return out;
}

inline VertexSet set_of(std::uint32_t mask) { return VertexSet::from_indices(subset(mask)); }

// Largest set of pairwise "compatible" edges among `edges`, by exhaustion.
inline int brute_edge_packing(const std::vector<Edge>& edges, const std::function<bool(Edge, Edge)>& compatible) {
  const int m = static_cast<int>(edges.size());
  int best = 0;
  std::function<void(int, std::vector<Edge>&)> rec = [&](int i, std::vector<Edge>& chosen) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (i == m || static_cast<int>(chosen.size()) + (m - i) <= best) return;
    bool ok = true;
    for (const Edge& c : chosen)
      if (!compatible(c, edges[i])) ok = false;
    if (ok) {
      chosen.push_back(edges[i]);
      rec(i + 1, chosen);
      chosen.pop_back();
    }
    rec(i + 1, chosen);
  };
  std::vector<Edge> chosen;
  rec(0, chosen);
  return best;
}

inline bool share(Edge a, Edge b) { return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v; }

inline std::vector<Edge> crossing(const Graph& g, const VertexSet& side) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (side.test(e.u) != side.test(e.v)) out.push_back(e);
  return out;
}

inline int brute_matching(const Graph& g) {
  return brute_edge_packing(g.edges(), [](Edge a, Edge b) { return !share(a, b); });
}

inline int brute_cut_matching(const Graph& g, const VertexSet& side) {
  return brute_edge_packing(crossing(g, side), [](Edge a, Edge b) { return !share(a, b); });
}

inline int brute_induced_matching(const Graph& g) {
  return brute_edge_packing(g.edges(), [&](Edge a, Edge b) {
    return !share(a, b) && !g.adjacent(a.u, b.u) && !g.adjacent(a.u, b.v) && !g.adjacent(a.v, b.u) &&
           !g.adjacent(a.v, b.v);
  });
}

// Induced matching of the bipartite graph G[X, X-bar]: only crossing pairs count.
inline int brute_mim(const Graph& g, const VertexSet& side) {
  return brute_edge_packing(crossing(g, side), [&](Edge a, Edge b) {
    if (share(a, b)) return false;
    for (int x : {a.u, a.v})
      for (int y : {b.u, b.v})
        if (side.test(x) != side.test(y) && g.adjacent(x, y)) return false;
    return true;
  });
}

// Crossing edges forming an induced matching of G itself.
inline int brute_sim(const Graph& g, const VertexSet& side) {
  return brute_edge_packing(crossing(g, side), [&](Edge a, Edge b) {
    return !share(a, b) && !g.adjacent(a.u, b.u) && !g.adjacent(a.u, b.v) && !g.adjacent(a.v, b.u) &&
           !g.adjacent(a.v, b.v);
  });
}

// GF(2) rank through the size of the row span.
inline int brute_rank(const Graph& g, const VertexSet& side) {
  const int n = g.num_vertices();
  std::vector<std::uint32_t> rows;
  for (int v = 0; v < n; ++v)
    if (side.test(v)) {
      std::uint32_t r = 0;
      for (int w = 0; w < n; ++w)
        if (!side.test(w) && g.adjacent(v, w)) r |= 1U << w;
      rows.push_back(r);
    }
  std::vector<std::uint32_t> span{0};
  for (std::uint32_t r : rows) {
    if (std::find(span.begin(), span.end(), r) != span.end()) continue;
    const std::size_t size = span.size();
    for (std::size_t i = 0; i < size; ++i) span.push_back(span[i] ^ r);
  }
  int rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

inline int brute_alpha(const Graph& g, std::uint32_t within) {
  int best = 0;
  for (std::uint32_t s = within;; s = (s - 1) & within) {
    bool ok = true;
    for (int v : subset(s))
      for (int w : subset(s))
        if (v < w && g.adjacent(v, w)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
    if (s == 0) break;
  }
  return best;
}

// Minimum width over every branch decomposition, enumerated as the unrooted
// trees with all internal nodes of degree 3 and leaves 0..s-1, grown by
// inserting each new leaf onto an existing edge. Values come from f directly.
inline int brute_branchwidth(const CutFunction& f) {
  const int s = f.ground_size();
  ElementSet none;
  if (s <= 1) return f.evaluate(none);
  std::vector<int> value(std::size_t{1} << s);
  for (std::uint32_t mask = 0; mask < value.size(); ++mask)
    value[mask] = f.evaluate(ElementSet::from_indices(subset(mask)));
  // Nodes 0..s-1 are leaves; internal nodes follow.
  std::vector<std::pair<int, int>> edges{{0, 1}};
  int nodes = s;
  int best = 1 << 30;
  auto width = [&] {
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    int w = 0;
    for (auto [a, b] : edges) {
      std::uint32_t mask = 0;
      std::vector<int> stack{a};
      std::vector<char> seen(nodes, 0);
      seen[a] = seen[b] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x < s) mask |= 1U << x;
        for (int y : adj[x])
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
      w = std::max(w, value[mask]);
      if (w >= best) return w;
    }
    return w;
  };
  std::function<void(int)> grow = [&](int leaf) {
    if (leaf == s) {
      best = std::min(best, width());
      return;
    }
    const std::size_t count = edges.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto [a, b] = edges[i];
      const int mid = nodes++;
      edges[i] = {a, mid};
      edges.push_back({mid, b});
      edges.push_back({mid, leaf});
      grow(leaf + 1);
      edges.pop_back();
      edges.pop_back();
      edges[i] = {a, b};
      --nodes;
    }
  };
  grow(2);
  return best;
}

// min over all elimination orderings of max over v of cost(v, later
// neighbours of v in the fill-in graph).
inline int brute_ordering_width(const Graph& g, const std::function<int(int, std::uint32_t)>& cost) {
  const int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = 1 << 30;
  do {
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
      adj[e.u] |= 1U << e.v;
      adj[e.v] |= 1U << e.u;
    }
    std::uint32_t done = 0;
    int w = -1;
    for (int v : order) {
      const std::uint32_t later = adj[v] & ~done;
      w = std::max(w, cost(v, later));
      for (int x : subset(later)) adj[x] |= later & ~(1U << x);
      done |= 1U << v;
    }
    best = std::min(best, w);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline Graph random_small_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.num_vertices());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

}  // namespace wftest
