#pragma once

#include <string>
#include <utility>
#include <vector>

#include "widthforge/graph.hpp"

namespace widthforge {

// Tree (node ids 0..t-1) with a vertex-set bag per node.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;

  int add_node(VertexSet bag = {});
  void add_edge(int a, int b);

  int num_nodes() const { return static_cast<int>(bags_.size()); }
  const VertexSet& bag(int t) const { return bags_[t]; }
  VertexSet& bag(int t) { return bags_[t]; }
  const std::vector<VertexSet>& bags() const { return bags_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<std::vector<int>> adjacency() const;

  int max_bag_size() const;
  int width() const { return max_bag_size() - 1; }

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;

 private:
  std::vector<VertexSet> bags_;
  std::vector<std::pair<int, int>> edges_;
};

enum class TdCondition { tree, t1, t2, t3 };

struct TdViolation {
  TdCondition condition = TdCondition::tree;
  int vertex = -1;  // t1, t3
  Edge edge;        // t2
  std::string message;
};

struct TdReport {
  bool valid = true;
  std::vector<TdViolation> violations;
};

// Checks the tree shape and (T1)-(T3), with a concrete witness per violation.
TdReport validate(const Graph& g, const TreeDecomposition& td);
// Only the tree shape, (T1) and (T3).
TdReport validate_partial(const Graph& g, const TreeDecomposition& td);

struct BagAlpha {
  int value = 0;
  int worst_bag = -1;
};
// Maximum independence number over the bags; throws InvalidArgument if td is invalid.
BagAlpha alpha_of(const Graph& g, const TreeDecomposition& td);

// Bag of v = v plus its later neighbours in the filled graph; the parent of
// that bag is the bag of the earliest-eliminated such neighbour.
TreeDecomposition td_from_ordering(const Graph& g, const std::vector<int>& ordering);

struct TreeWidthResult {
  int value = 0;
  std::vector<int> ordering;
  TreeDecomposition td;
};

// Largest vertex count accepted by the exact treewidth / tree-alpha solvers.
int tree_solver_cap();

// Exact, via the subset recursion over elimination prefixes. The empty graph
// has treewidth -1.
TreeWidthResult exact_treewidth(const Graph& g);
// Exact tree-independence number with the same recursion, bag cost alpha.
TreeWidthResult exact_tree_alpha(const Graph& g);

// Each bag X_t becomes the edges of g (by index) incident with X_t.
TreeDecomposition line_graph_td(const Graph& g, const TreeDecomposition& td);

}  // namespace widthforge
