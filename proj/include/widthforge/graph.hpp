#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthforge/bits.hpp"

namespace widthforge {

struct Edge {
  int u = 0;
  int v = 0;  // invariant: u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on dense vertex ids 0..n-1. Edges keep insertion
// order; that order defines edge indices (and line-graph vertex ids).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int add_vertex(std::string label = {});
  // Throws InvalidArgument on self-loops, duplicates, or unknown endpoints.
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  // Index of edge uv, or -1.
  int edge_index(int u, int v) const;

  VertexSet all_vertices() const { return VertexSet::prefix(num_vertices()); }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const;
  void set_label(int v, std::string label);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Vertices are edges of g (by index), labelled "u-v" with 1-based endpoints.
Graph line_graph(const Graph& g);

// Same vertex set; uv adjacent iff 1 <= dist_g(u, v) <= r.
Graph graph_power(const Graph& g, int r);

// Contracts uv into a vertex that takes the smaller id; the larger id is
// removed and later ids shift down by one. Parallel edges are merged.
Graph contract_edge(const Graph& g, Edge e);

Graph delete_vertex(const Graph& g, int v);
// Induced subgraph; kept vertices are renumbered in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// All-pairs distances by BFS; -1 for unreachable.
std::vector<std::vector<int>> distances(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
// Two-colouring, or nullopt when g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_chordal(const Graph& g);
// Maximum over induced subgraphs of 2|E|/|V|, as the fraction (2|E|, |V|).
// Exhaustive over vertex subsets; n <= 20.
std::pair<int, int> max_average_degree(const Graph& g);

// Isomorphism-invariant certificate (individualisation-refinement per
// connected component). Equal strings iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

}  // namespace widthforge
