#include "widthforge/branch_decomposition.hpp"

#include <algorithm>
#include <string>

#include "widthforge/errors.hpp"

namespace widthforge {

BranchDecomposition::BranchDecomposition(int num_nodes, std::vector<std::pair<int, int>> tree_edges,
                                         std::vector<int> leaf_of_element)
    : adj_(num_nodes < 0 ? 0 : num_nodes),
      edges_(std::move(tree_edges)),
      leaf_(std::move(leaf_of_element)),
      element_(adj_.size(), -1) {
  const int n = num_nodes;
  const int s = static_cast<int>(leaf_.size());
  if (n < 0) throw InvalidArgument("negative node count");
  if (s > kMaxElements) throw InvalidArgument("more than " + std::to_string(kMaxElements) + " elements");
  if (s <= 1 && n != s) throw InvalidArgument("a decomposition of " + std::to_string(s) + " element(s) has " +
                                              std::to_string(s) + " node(s)");
  if (static_cast<int>(edges_.size()) != std::max(n - 1, 0)) throw InvalidArgument("tree must have nodes-1 edges");
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("tree edge endpoint out of range");
    if (a == b) throw InvalidArgument("tree edge is a loop");
    if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end())
      throw InvalidArgument("duplicate tree edge");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (int t = 0; t < n; ++t)
    if (degree(t) > 3) throw InvalidArgument("tree node " + std::to_string(t + 1) + " has degree > 3");
  if (n > 0) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int c : adj_[t])
        if (!seen[c]) {
          seen[c] = 1;
          ++reached;
          stack.push_back(c);
        }
    }
    if (reached != n) throw InvalidArgument("tree is not connected");
  }
  for (int x = 0; x < s; ++x) {
    int t = leaf_[x];
    if (t < 0 || t >= n) throw InvalidArgument("leaf node out of range");
    if (element_[t] >= 0) throw InvalidArgument("two elements mapped to the same leaf");
    if (s >= 2 && degree(t) != 1) throw InvalidArgument("element mapped to a non-leaf node");
    element_[t] = x;
  }
  for (int t = 0; t < n; ++t)
    if (s >= 2 && degree(t) == 1 && element_[t] < 0)
      throw InvalidArgument("leaf " + std::to_string(t + 1) + " carries no element");
}

ElementSet BranchDecomposition::hosted(int from, int to) const {
  ElementSet out;
  std::vector<int> stack{from};
  std::vector<char> seen(adj_.size(), 0);
  seen[from] = 1;
  seen[to] = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (element_[t] >= 0) out.set(element_[t]);
    for (int c : adj_[t])
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
  }
  return out;
}

ElementSet BranchDecomposition::side(int e) const { return hosted(edges_[e].first, edges_[e].second); }

WidthReport width_of(const BranchDecomposition& bd, const CutFunction& f) {
  if (bd.num_elements() != f.ground_size())
    throw InvalidArgument("decomposition has " + std::to_string(bd.num_elements()) +
                          " elements but the ground set has " + std::to_string(f.ground_size()));
  WidthReport report;
  report.kind = f.kind();
  report.witness = bd;
  report.value = f.evaluate(ElementSet{});
  for (int e = 0; e < bd.num_tree_edges(); ++e) {
    int v = f.evaluate(bd.side(e));
    report.per_edge.push_back(v);
    if (report.worst_edge < 0 || v > report.value) {
      report.value = std::max(report.value, v);
      report.worst_edge = e;
    }
  }
  return report;
}

namespace {

// Rebuilds a decomposition on the nodes in `alive`, renumbered in order.
BranchDecomposition rebuild(const std::vector<std::vector<int>>& adj, const std::vector<char>& alive,
                            const std::vector<int>& leaf_of_element) {
  std::vector<int> id(adj.size(), -1);
  int n = 0;
  for (std::size_t t = 0; t < adj.size(); ++t)
    if (alive[t]) id[t] = n++;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t t = 0; t < adj.size(); ++t)
    if (alive[t])
      for (int c : adj[t])
        if (alive[c] && static_cast<int>(t) < c) edges.emplace_back(id[t], id[c]);
  std::sort(edges.begin(), edges.end());
  std::vector<int> leaves;
  for (int t : leaf_of_element) leaves.push_back(id[t]);
  return BranchDecomposition(n, std::move(edges), std::move(leaves));
}

std::vector<std::vector<int>> adjacency(const BranchDecomposition& bd) {
  std::vector<std::vector<int>> adj(bd.num_nodes());
  for (int t = 0; t < bd.num_nodes(); ++t) adj[t] = bd.neighbors(t);
  return adj;
}

}  // namespace

BranchDecomposition restrict_to(const BranchDecomposition& bd, const ElementSet& keep) {
  if (!keep.is_subset_of(ElementSet::prefix(bd.num_elements())))
    throw InvalidArgument("restrict_to: unknown element");
  std::vector<int> kept = keep.to_vector();
  if (kept.empty()) return {};
  if (kept.size() == 1) return BranchDecomposition(1, {}, {0});
  const int n = bd.num_nodes();
  auto adj = adjacency(bd);
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  std::vector<int> stack;
  for (int t = 0; t < n; ++t) {
    deg[t] = bd.degree(t);
    int x = bd.element_at(t);
    if (deg[t] <= 1 && !(x >= 0 && keep.test(x))) stack.push_back(t);
  }
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (!alive[t]) continue;
    alive[t] = 0;
    for (int c : adj[t])
      if (alive[c] && --deg[c] <= 1) {
        int x = bd.element_at(c);
        if (!(x >= 0 && keep.test(x))) stack.push_back(c);
      }
  }
  std::vector<int> leaves;
  for (int x : kept) leaves.push_back(bd.leaf(x));
  return rebuild(adj, alive, leaves);
}

BranchDecomposition trim_leaf(const BranchDecomposition& bd, int element) {
  if (element < 0 || element >= bd.num_elements()) throw InvalidArgument("trim_leaf: element is not mapped");
  bool branching = false;
  for (int t = 0; t < bd.num_nodes(); ++t) branching = branching || bd.degree(t) >= 3;
  if (!branching) throw InvalidArgument("trim_leaf: tree has no node of degree 3");
  ElementSet keep = ElementSet::prefix(bd.num_elements());
  keep.reset(element);
  return restrict_to(bd, keep);
}

BranchDecomposition contract_degree2(const BranchDecomposition& bd) {
  if (bd.num_elements() < 2) throw InvalidArgument("contract_degree2: needs at least two leaves");
  auto adj = adjacency(bd);
  std::vector<char> alive(bd.num_nodes(), 1);
  for (int t = 0; t < bd.num_nodes(); ++t) {
    if (adj[t].size() != 2) continue;
    int a = adj[t][0], b = adj[t][1];
    std::replace(adj[a].begin(), adj[a].end(), t, b);
    std::replace(adj[b].begin(), adj[b].end(), t, a);
    adj[t].clear();
    alive[t] = 0;
  }
  return rebuild(adj, alive, bd.leaves());
}

}  // namespace widthforge
