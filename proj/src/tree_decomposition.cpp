#include "widthforge/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "widthforge/errors.hpp"
#include "widthforge/matching.hpp"

namespace widthforge {

int TreeDecomposition::add_node(VertexSet bag) {
  bags_.push_back(bag);
  return num_nodes() - 1;
}

void TreeDecomposition::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= num_nodes() || b >= num_nodes() || a == b)
    throw InvalidArgument("tree decomposition edge has a bad endpoint");
  edges_.emplace_back(a, b);
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
  std::vector<std::vector<int>> adj(num_nodes());
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

int TreeDecomposition::max_bag_size() const {
  int best = 0;
  for (const auto& b : bags_) best = std::max(best, b.count());
  return best;
}

namespace {

void check(const Graph& g, const TreeDecomposition& td, bool need_t2, TdReport& report) {
  auto fail = [&](TdViolation v) {
    report.valid = false;
    report.violations.push_back(std::move(v));
  };
  const int t = td.num_nodes();
  const auto adj = td.adjacency();
  // Tree shape: t-1 edges, connected (an empty tree is allowed for the empty graph).
  if (t == 0) {
    if (g.num_vertices() > 0) fail({TdCondition::tree, -1, {}, "decomposition has no nodes"});
  } else {
    bool tree = static_cast<int>(td.edges().size()) == t - 1;
    std::vector<char> seen(t, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[a])
        if (!seen[b]) {
          seen[b] = 1;
          ++reached;
          stack.push_back(b);
        }
    }
    if (!tree || reached != t) fail({TdCondition::tree, -1, {}, "underlying graph is not a tree"});
  }
  for (int node = 0; node < t; ++node)
    if (!td.bag(node).is_subset_of(g.all_vertices()))
      fail({TdCondition::tree, -1, {}, "bag " + std::to_string(node + 1) + " has a vertex outside the graph"});
  if (!report.valid) return;

  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> nodes;
    for (int node = 0; node < t; ++node)
      if (td.bag(node).test(v)) nodes.push_back(node);
    if (nodes.empty()) {
      fail({TdCondition::t1, v, {}, "vertex " + std::to_string(v + 1) + " is in no bag"});
      continue;
    }
    std::vector<char> seen(t, 0);
    std::vector<int> stack{nodes[0]};
    seen[nodes[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[a])
        if (!seen[b] && td.bag(b).test(v)) {
          seen[b] = 1;
          ++reached;
          stack.push_back(b);
        }
    }
    if (reached != nodes.size())
      fail({TdCondition::t3, v, {}, "bags containing vertex " + std::to_string(v + 1) + " are disconnected"});
  }
  if (!need_t2) return;
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int node = 0; node < t && !covered; ++node)
      covered = td.bag(node).test(e.u) && td.bag(node).test(e.v);
    if (!covered)
      fail({TdCondition::t2, -1, e,
            "edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + " is in no bag"});
  }
}

}  // namespace

TdReport validate(const Graph& g, const TreeDecomposition& td) {
  TdReport report;
  check(g, td, true, report);
  return report;
}

TdReport validate_partial(const Graph& g, const TreeDecomposition& td) {
  TdReport report;
  check(g, td, false, report);
  return report;
}

BagAlpha alpha_of(const Graph& g, const TreeDecomposition& td) {
  TdReport report = validate(g, td);
  if (!report.valid) throw InvalidArgument("invalid tree decomposition: " + report.violations.front().message);
  BagAlpha out;
  for (int t = 0; t < td.num_nodes(); ++t) {
    int a = independence_number_size(g, td.bag(t));
    if (out.worst_bag < 0 || a > out.value) {
      out.value = a;
      out.worst_bag = t;
    }
  }
  return out;
}

TreeDecomposition td_from_ordering(const Graph& g, const std::vector<int>& ordering) {
  const int n = g.num_vertices();
  if (static_cast<int>(ordering.size()) != n) throw InvalidArgument("ordering must list every vertex once");
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = ordering[i];
    if (v < 0 || v >= n || position[v] >= 0) throw InvalidArgument("ordering must list every vertex once");
    position[v] = i;
  }
  TreeDecomposition td;
  if (n == 0) {
    td.add_node();
    return td;
  }
  std::vector<VertexSet> fill(n);
  for (int v = 0; v < n; ++v) fill[v] = g.neighbors(v);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = ordering[i];
    VertexSet later;
    for (int u = fill[v].first(); u >= 0; u = fill[v].next(u))
      if (position[u] > i) later.set(u);
    VertexSet bag = later;
    bag.set(v);
    td.add_node(bag);
    int earliest = -1;
    for (int u = later.first(); u >= 0; u = later.next(u)) {
      fill[u] |= later;
      fill[u].reset(u);
      if (earliest < 0 || position[u] < position[earliest]) earliest = u;
    }
    parent[i] = earliest < 0 ? -1 : position[earliest];
  }
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      td.add_edge(i, parent[i]);
    } else {
      // roots of different components are chained together
      if (previous_root >= 0) td.add_edge(previous_root, i);
      previous_root = i;
    }
  }
  return td;
}

int tree_solver_cap() { return std::min(size_cap(16), 24); }

namespace {

using Mask = std::uint32_t;

// |Q(s, v)|: vertices outside s + v reachable from v through s.
Mask reach_outside(const std::vector<Mask>& adj, Mask s, int v) {
  Mask seen = Mask{1} << v, frontier = seen, out = 0;
  while (frontier) {
    int x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask nb = adj[x] & ~seen;
    seen |= nb;
    out |= nb & ~s;
    frontier |= nb & s;
  }
  return out;
}

template <class Cost>
TreeWidthResult elimination_dp(const Graph& g, int empty_value, Cost&& cost) {
  const int n = g.num_vertices();
  const int cap = tree_solver_cap();
  if (n > cap) throw CapExceeded("exact tree decomposition solver", n, cap);
  TreeWidthResult out;
  if (n == 0) {
    out.value = empty_value;
    out.td.add_node();
    return out;
  }
  std::vector<Mask> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = static_cast<Mask>(g.neighbors(v).word(0));
  const Mask full = (Mask{1} << n) - 1;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> best(std::size_t{1} << n, kInf);
  best[0] = std::numeric_limits<int>::min();
  for (Mask s = 1; s <= full; ++s) {
    int value = kInf;
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      Mask before = s & ~(Mask{1} << v);
      int c = std::max(best[before], cost(v, reach_outside(adj, before, v)));
      value = std::min(value, c);
    }
    best[s] = value;
  }
  // Recover an ordering backwards, smallest vertex on ties.
  std::vector<int> reversed;
  for (Mask s = full; s;) {
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      Mask before = s & ~(Mask{1} << v);
      if (std::max(best[before], cost(v, reach_outside(adj, before, v))) == best[s]) {
        reversed.push_back(v);
        s = before;
        break;
      }
    }
  }
  out.value = best[full];
  out.ordering.assign(reversed.rbegin(), reversed.rend());
  out.td = td_from_ordering(g, out.ordering);
  return out;
}

}  // namespace

TreeWidthResult exact_treewidth(const Graph& g) {
  return elimination_dp(g, -1, [](int, Mask q) { return std::popcount(q); });
}

TreeWidthResult exact_tree_alpha(const Graph& g) {
  std::unordered_map<Mask, int> memo;
  return elimination_dp(g, 0, [&](int v, Mask q) {
    Mask bag = q | (Mask{1} << v);
    auto it = memo.find(bag);
    if (it != memo.end()) return it->second;
    VertexSet set;
    set.set_word(0, bag);
    int a = independence_number_size(g, set);
    memo.emplace(bag, a);
    return a;
  });
}

TreeDecomposition line_graph_td(const Graph& g, const TreeDecomposition& td) {
  if (g.num_edges() == 0) throw InvalidArgument("line graph undefined for edgeless input");
  TdReport report = validate(g, td);
  if (!report.valid) throw InvalidArgument("invalid tree decomposition: " + report.violations.front().message);
  TreeDecomposition out;
  for (int t = 0; t < td.num_nodes(); ++t) {
    VertexSet bag;
    for (int i = 0; i < g.num_edges(); ++i)
      if (td.bag(t).test(g.edge(i).u) || td.bag(t).test(g.edge(i).v)) bag.set(i);
    out.add_node(bag);
  }
  for (auto [a, b] : td.edges()) out.add_edge(a, b);
  return out;
}

}  // namespace widthforge
