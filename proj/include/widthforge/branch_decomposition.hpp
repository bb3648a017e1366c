#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "widthforge/cut_functions.hpp"

namespace widthforge {

// Subcubic tree with a bijection from elements 0..s-1 to its leaves. With a
// single element the tree is one node; with none it is empty.
class BranchDecomposition {
 public:
  BranchDecomposition() = default;
  // Throws InvalidArgument unless the input is a subcubic tree whose leaves
  // are exactly the nodes in leaf_of_element.
  BranchDecomposition(int num_nodes, std::vector<std::pair<int, int>> tree_edges,
                      std::vector<int> leaf_of_element);

  int num_nodes() const { return static_cast<int>(adj_.size()); }
  int num_elements() const { return static_cast<int>(leaf_.size()); }
  int num_tree_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& tree_edges() const { return edges_; }
  const std::vector<int>& neighbors(int node) const { return adj_[node]; }
  int degree(int node) const { return static_cast<int>(adj_[node].size()); }
  int leaf(int element) const { return leaf_[element]; }
  const std::vector<int>& leaves() const { return leaf_; }
  // Element at a leaf, -1 for internal nodes.
  int element_at(int node) const { return element_[node]; }

  // Elements on the first endpoint's side of tree edge e (the set A_e).
  ElementSet side(int e) const;
  // Elements in the component of `from` after deleting the edge {from, to}.
  ElementSet hosted(int from, int to) const;

  friend bool operator==(const BranchDecomposition&, const BranchDecomposition&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> leaf_;
  std::vector<int> element_;
};

struct WidthReport {
  CutKind kind = CutKind::mim;
  int value = 0;
  BranchDecomposition witness;
  int worst_edge = -1;  // -1 when the tree has no edges
  std::vector<int> per_edge;
};

// Maximum of f over the cuts of bd; f(empty) when there is at most one element.
WidthReport width_of(const BranchDecomposition& bd, const CutFunction& f);

// Removes the leaf of `element` and its pendant path up to the nearest node
// of degree >= 3. Later elements shift down by one.
BranchDecomposition trim_leaf(const BranchDecomposition& bd, int element);
// Minimal subtree spanning the leaves of `keep`; kept elements are renumbered
// in increasing order. Equivalent to trimming every other element.
BranchDecomposition restrict_to(const BranchDecomposition& bd, const ElementSet& keep);
// Suppresses every degree-2 node; the family of cuts is unchanged.
BranchDecomposition contract_degree2(const BranchDecomposition& bd);

enum class SolveStrategy { automatic, subset_dp, threshold };

struct SolveOptions {
  SolveStrategy strategy = SolveStrategy::automatic;
  // Skip splits whose own cut already exceeds the best value found.
  bool prune = false;
  // Overrides the per-kind cap (and WIDTHFORGE_CAP) when set.
  std::optional<int> cap;
};

// Largest ground set solve_branchwidth accepts for this kind.
int solver_cap(CutKind kind);

// Exact f-branch-width with an optimal witness. Throws CapExceeded above the cap.
WidthReport solve_branchwidth(const CutFunction& f, const SolveOptions& options = {});

}  // namespace widthforge
