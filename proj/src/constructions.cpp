#include "widthforge/constructions.hpp"

#include <algorithm>
#include <array>

#include "widthforge/errors.hpp"

namespace widthforge {

namespace {

struct TreeBuilder {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;

  int node() { return nodes++; }
  void edge(int a, int b) { edges.emplace_back(a, b); }

  // l-caterpillar; returns its leaves t_1..t_l in order.
  std::vector<int> caterpillar(int l) {
    std::vector<int> leaves;
    int previous = -1;
    for (int i = 0; i < l; ++i) {
      int s = node(), t = node();
      edge(s, t);
      if (previous >= 0) edge(previous, s);
      previous = s;
      leaves.push_back(t);
    }
    return leaves;
  }
};

}  // namespace

BranchDecomposition rook_caterpillar_bd(int n, int m) {
  if (n < 2 || m < 2) throw InvalidArgument("rook_caterpillar_bd: n and m must be at least 2");
  if (n * m > kMaxElements) throw InvalidArgument("rook_caterpillar_bd: board too large");
  const int a = (n + 2) / 3, b = 2 * n / 3;
  TreeBuilder tb;
  std::vector<int> leaf(n * m, -1);
  std::vector<int> row_anchor(n);  // l_i: leaf of a group caterpillar
  std::vector<int> group_roots;   // p_1, p_2, p_3 of nonempty groups
  const std::array<std::pair<int, int>, 3> groups{{{0, a}, {a, b}, {b, n}}};
  for (auto [lo, hi] : groups) {
    if (lo >= hi) continue;
    std::vector<int> leaves = tb.caterpillar(hi - lo + 1);
    group_roots.push_back(leaves[0]);
    for (int i = lo; i < hi; ++i) row_anchor[i] = leaves[i - lo + 1];
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> leaves = tb.caterpillar(m + 1);
    tb.edge(leaves[0], row_anchor[i]);
    for (int j = 0; j < m; ++j) leaf[i * m + j] = leaves[j + 1];
  }
  if (group_roots.size() == 3) {
    int hub = tb.node();
    for (int p : group_roots) tb.edge(hub, p);
  } else {
    tb.edge(group_roots[0], group_roots[1]);
  }
  return BranchDecomposition(tb.nodes, std::move(tb.edges), std::move(leaf));
}

PowerTransfer odd_power_transfer(const Graph& g, const BranchDecomposition& bd, int r) {
  if (r < 1) throw InvalidArgument("power must be at least 1");
  if (r % 2 == 0) throw InvalidArgument("theorem applies to odd powers only");
  const Graph power = graph_power(g, r);
  PowerTransfer out;
  out.on_graph = width_of(bd, CutFunction(g, CutKind::sim));
  out.on_power = width_of(bd, CutFunction(power, CutKind::sim));
  for (std::size_t e = 0; e < out.on_graph.per_edge.size(); ++e)
    if (out.on_power.per_edge[e] > out.on_graph.per_edge[e]) out.violations.push_back(static_cast<int>(e));
  if (bd.num_tree_edges() == 0 && out.on_power.value > out.on_graph.value) out.violations.push_back(-1);
  return out;
}

namespace {

// Perfect triples are represented by D alone; L and R are its images.
class TripleSearch {
 public:
  TripleSearch(const VertexSet& mid, std::vector<int> l, std::vector<int> r)
      : mid_(mid), l_(std::move(l)), r_(std::move(r)) {}

  VertexSet left(const VertexSet& d, bool mirror) const { return image(d, mirror ? r_ : l_); }
  VertexSet right(const VertexSet& d, bool mirror) const { return image(d, mirror ? l_ : r_); }

  bool valid(const VertexSet& d) const {
    VertexSet l = left(d, false), r = right(d, false);
    return !l.intersects(d) && !r.intersects(d) && !l.intersects(r);
  }

  // First m in M \ D whose addition keeps the triple perfect.
  int extension(const VertexSet& d) const {
    VertexSet rest = mid_.minus(d);
    for (int m = rest.first(); m >= 0; m = rest.next(m)) {
      VertexSet next = d;
      next.set(m);
      if (valid(next)) return m;
    }
    return -1;
  }

  // Pigeonhole swap (l(m) in D); mirror = true swaps the roles of l and r.
  std::optional<VertexSet> swap_case(const VertexSet& d, bool mirror) const {
    const auto& lf = mirror ? r_ : l_;
    const auto& rf = mirror ? l_ : r_;
    const VertexSet L = left(d, mirror), R = right(d, mirror), used = L | d | R;
    std::vector<int> cases;
    VertexSet rest = mid_.minus(used);
    for (int m = rest.first(); m >= 0; m = rest.next(m))
      if (d.test(lf[m]) && !(L | d).test(rf[m])) cases.push_back(m);
    if (static_cast<int>(cases.size()) < 3 * d.count() + 1) return std::nullopt;
    for (int x = d.first(); x >= 0; x = d.next(x)) {
      std::vector<int> ms;
      for (int m : cases)
        if (lf[m] == x && ms.size() < 4) ms.push_back(m);
      if (ms.size() < 4) continue;
      VertexSet base = d;
      base.reset(x);
      std::optional<VertexSet> best;
      for (int subset = 1; subset < 16; ++subset) {
        VertexSet next = base;
        for (int i = 0; i < 4; ++i)
          if (subset >> i & 1) next.set(ms[i]);
        if (valid(next) && (!best || next.count() > best->count())) best = next;
      }
      if (best && best->count() > d.count()) return best;
    }
    return std::nullopt;
  }

  // Weighted reselection (l(m) in R), mirror as above.
  std::optional<VertexSet> reselect_case(const VertexSet& d, bool mirror) const {
    const auto& lf = mirror ? r_ : l_;
    const auto& rf = mirror ? l_ : r_;
    const VertexSet L = left(d, mirror), R = right(d, mirror), used = L | d | R;
    std::vector<int> s;
    VertexSet rest = mid_.minus(used);
    for (int m = rest.first(); m >= 0; m = rest.next(m))
      if (R.test(lf[m]) && !(L | d).test(rf[m])) s.push_back(m);
    if (static_cast<int>(s.size()) < 6 * d.count() + 1) return std::nullopt;
    for (int c = R.first(); c >= 0; c = R.next(c)) {
      int p = 0;
      for (int x = d.first(); x >= 0; x = d.next(x)) p += rf[x] == c;
      std::vector<int> chosen;  // M''
      for (int m : s)
        if (lf[m] == c) chosen.push_back(m);
      if (static_cast<int>(chosen.size()) < 6 * p + 1) continue;
      chosen.resize(6 * p + 1);
      VertexSet star;  // M*
      for (int m : chosen) {
        int deg = 0;
        for (int x : chosen) deg += rf[x] == m;
        if (deg <= 1) star.set(m);
      }
      VertexSet q;
      for (int m = star.first(); m >= 0 && q.count() < p + 1; m = star.next(m)) {
        if (!star.test(m)) continue;
        q.set(m);
        star.reset(m);
        if (rf[m] >= 0) star.reset(rf[m]);
        for (int x : chosen)
          if (rf[x] == m) star.reset(x);
      }
      VertexSet next;
      for (int x = d.first(); x >= 0; x = d.next(x))
        if (rf[x] != c) next.set(x);
      next |= q;
      if (valid(next) && next.count() > d.count()) return next;
    }
    return std::nullopt;
  }

  // Case l(m) in R + D and r(m) in L + D: bipartite split of the l(m)r(m) multigraph.
  std::optional<VertexSet> split_case(const VertexSet& d, int n_vertices) const {
    const VertexSet L = left(d, false), R = right(d, false), used = L | d | R;
    std::vector<int> q;
    VertexSet rest = mid_.minus(used);
    for (int m = rest.first(); m >= 0; m = rest.next(m))
      if ((R | d).test(l_[m]) && (L | d).test(r_[m])) q.push_back(m);
    if (static_cast<int>(q.size()) < 4 * d.count() + 1) return std::nullopt;
    // Greedy max-cut: each vertex joins the side opposite to most of its placed neighbours.
    std::vector<int> side(n_vertices, -1);
    for (int v = 0; v < n_vertices; ++v) {
      int to0 = 0, to1 = 0;
      for (int m : q) {
        int other = l_[m] == v ? r_[m] : (r_[m] == v ? l_[m] : -1);
        if (other < 0 || side[other] < 0) continue;
        (side[other] == 0 ? to0 : to1)++;
      }
      side[v] = to0 >= to1 ? 1 : 0;
    }
    VertexSet forward, backward;
    for (int m : q) {
      if (side[l_[m]] == 0 && side[r_[m]] == 1) forward.set(m);
      if (side[l_[m]] == 1 && side[r_[m]] == 0) backward.set(m);
    }
    VertexSet next = forward.count() >= backward.count() ? forward : backward;
    if (valid(next) && next.count() > d.count()) return next;
    return std::nullopt;
  }

 private:
  static VertexSet image(const VertexSet& d, const std::vector<int>& f) {
    VertexSet out;
    for (int x = d.first(); x >= 0; x = d.next(x)) out.set(f[x]);
    return out;
  }

  VertexSet mid_;
  std::vector<int> l_, r_;
};

}  // namespace

TripleExtraction perfect_triple_extract(const Graph& g, const BranchDecomposition& bd, int tree_edge, int n) {
  if (bd.num_elements() != g.num_edges())
    throw InvalidArgument("perfect_triple_extract: decomposition must be on the edges of the graph");
  if (tree_edge < 0 || tree_edge >= bd.num_tree_edges()) throw InvalidArgument("perfect_triple_extract: bad tree edge");
  if (n < 1) throw InvalidArgument("perfect_triple_extract: n must be positive");
  const ElementSet a = bd.side(tree_edge);
  const VertexSet mid = mid_set(g, a);
  if (mid.count() < 25 * n - 1)
    throw InvalidArgument("perfect_triple_extract: |mid(A_e)| = " + std::to_string(mid.count()) +
                          " is below 25n - 1 = " + std::to_string(25 * n - 1));
  TripleExtraction out;
  PerfectTriple& t = out.triple;
  t.l.assign(g.num_vertices(), -1);
  t.r.assign(g.num_vertices(), -1);
  for (int m = mid.first(); m >= 0; m = mid.next(m)) {
    const VertexSet& nb = g.neighbors(m);
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
      bool in_a = a.test(g.edge_index(m, u));
      int& slot = in_a ? t.l[m] : t.r[m];
      if (slot < 0) slot = u;
    }
  }
  TripleSearch search(mid, t.l, t.r);
  VertexSet d;
  while (d.count() < n) {
    if (int m = search.extension(d); m >= 0) {
      d.set(m);
      ++out.extensions;
      continue;
    }
    std::optional<VertexSet> next;
    for (bool mirror : {false, true})
      if (!next) next = search.swap_case(d, mirror);
    for (bool mirror : {false, true})
      if (!next) next = search.reselect_case(d, mirror);
    if (!next) next = search.split_case(d, g.num_vertices());
    if (!next || !search.valid(*next) || next->count() <= d.count())
      throw InternalError("perfect_triple_extract: no extension or augmentation grows the triple");
    d = *next;
    ++out.augmentations;
  }
  // Keep exactly n pairs.
  VertexSet kept;
  for (int x = d.first(); x >= 0 && kept.count() < n; x = d.next(x)) kept.set(x);
  t.d_set = kept;
  t.l_set = search.left(kept, false);
  t.r_set = search.right(kept, false);
  out.matching.kind = MatchingKind::cut_induced;
  out.matching.cut = a;
  for (int x = kept.first(); x >= 0; x = kept.next(x)) {
    int e1 = g.edge_index(x, t.l[x]), e2 = g.edge_index(x, t.r[x]);
    out.matching.edges.push_back({std::min(e1, e2), std::max(e1, e2)});
  }
  if (!verify_matching(line_graph(g), out.matching))
    throw InternalError("perfect_triple_extract: matching failed verification");
  return out;
}

}  // namespace widthforge
