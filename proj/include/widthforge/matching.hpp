#pragma once

#include <optional>
#include <vector>

#include "widthforge/graph.hpp"

namespace widthforge {

enum class MatchingKind {
  plain,
  // no graph edge joins endpoints of two different matching edges
  induced,
  // every edge crosses the cut and the matching is induced in G[X, X-bar]
  // (only crossing edges count as adjacency)
  cut_induced,
  // every edge crosses the cut, the matching is induced in G, and both
  // endpoint sides are independent in G
  crossing_induced,
};

struct Matching {
  std::vector<Edge> edges;
  MatchingKind kind = MatchingKind::plain;
  // One side of the cut the matching was taken across, when any.
  std::optional<VertexSet> cut;

  int size() const { return static_cast<int>(edges.size()); }
};

// Checks every invariant of m.kind against g.
bool verify_matching(const Graph& g, const Matching& m);

enum class CutMode { bipartite_cut, full_graph };

// Maximum matching (exact), witness lexicographically smallest by edge index.
Matching max_matching(const Graph& g);
int max_matching_size(const Graph& g);

// Maximum matching among edges crossing (side, complement).
int max_cut_matching_size(const Graph& g, const VertexSet& side);

// Without a cut: maximum induced matching of g. With a cut: bipartite_cut
// gives the maximum induced matching of G[X, X-bar]; full_graph the maximum
// induced matching of G using crossing edges only. The witness is the
// lexicographically smallest optimum by edge index.
Matching max_induced_matching(const Graph& g, const std::optional<VertexSet>& cut = std::nullopt,
                              CutMode mode = CutMode::bipartite_cut);
int max_induced_matching_size(const Graph& g, const std::optional<VertexSet>& cut = std::nullopt,
                              CutMode mode = CutMode::bipartite_cut);

struct IndependentSet {
  int size = 0;
  VertexSet witness;
};

// Exact alpha of g[within] (all of g when omitted); lexicographically
// smallest witness.
IndependentSet independence_number(const Graph& g, const std::optional<VertexSet>& within = std::nullopt);
int independence_number_size(const Graph& g, const VertexSet& within);
// True iff g[within] has an independent set of size >= k; stops at the first one found.
bool has_independent_set(const Graph& g, const VertexSet& within, int k, VertexSet* witness = nullptr);

struct Degeneracy {
  int value = 0;
  // Repeated minimum-degree removal order (ties: smallest id). Every vertex
  // has at most `value` neighbours later in the order.
  std::vector<int> order;
};
Degeneracy degeneracy(const Graph& g);

struct Biclique {
  VertexSet x;
  VertexSet y;
};
// Induced K_{n,m}: independent X (|X| = n) complete to independent Y
// (|Y| = m). Exhaustive; returns the lexicographically first witness by X, then Y.
std::optional<Biclique> find_induced_biclique(const Graph& g, int n, int m);

}  // namespace widthforge
