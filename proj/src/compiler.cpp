#include "widthforge/compiler.hpp"

#include <limits>

#include "widthforge/errors.hpp"

namespace widthforge {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t pow_sat(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = mul_sat(r, base);
  return r;
}

void require_positive(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) throw InvalidArgument("n, m and k must be positive");
}

}  // namespace

std::uint64_t f_threshold(int n, int k) { return pow_sat(2, n + k); }

std::uint64_t g_threshold(int m, int n, int k) { return mul_sat(static_cast<std::uint64_t>(m), pow_sat(k, n)); }

std::uint64_t alpha_bound(int n, int m, int k) {
  return mul_sat(6, add_sat(pow_sat(2, n + k - 1), mul_sat(static_cast<std::uint64_t>(m), pow_sat(k, n + 1))));
}

InferredParams infer_parameters(const Graph& g, const BranchDecomposition& bd) {
  InferredParams out;
  int t = 0;
  for (int c = 1; c <= 4 && t == 0; ++c)
    if (!find_induced_biclique(g, c, c)) t = c;
  if (t == 0) {
    t = g.num_vertices() / 2 + 1;
    out.fallback = true;
  }
  out.mim_width = width_of(bd, CutFunction(g, CutKind::mim)).value;
  out.params = {t, t, out.mim_width + 1};
  return out;
}

TreeDecompositionCompiler::TreeDecompositionCompiler(const Graph& g, const BranchDecomposition& bd,
                                                     CompilerParams params, CompileOptions options)
    : g_(g), params_(params), options_(options) {
  require_positive(params.n, params.m, params.k);
  if (bd.num_elements() != g.num_vertices())
    throw InvalidArgument("branch decomposition has " + std::to_string(bd.num_elements()) +
                          " elements but the graph has " + std::to_string(g.num_vertices()) + " vertices");
  tree_ = bd.num_elements() >= 2 ? contract_degree2(bd) : bd;
  g_value_ = static_cast<int>(std::min<std::uint64_t>(g_threshold(params.m, params.n, params.k), kMaxVertices + 1));
  adj_.resize(tree_.num_nodes());
  for (int t = 0; t < tree_.num_nodes(); ++t) adj_[t] = tree_.neighbors(t);
  for (auto [x, y] : tree_.tree_edges()) {
    host_[{x, y}] = tree_.hosted(x, y);
    host_[{y, x}] = tree_.hosted(y, x);
  }
  for (int t = 0; t < tree_.num_nodes(); ++t) {
    VertexSet bag;
    if (tree_.element_at(t) >= 0) bag.set(tree_.element_at(t));
    td_.add_node(bag);
  }
  if (tree_.num_nodes() == 0) td_.add_node();
  for (auto [x, y] : tree_.tree_edges()) td_.add_edge(x, y);

  if (options.check) {
    int mim = width_of(bd, CutFunction(g, CutKind::mim)).value;
    if (mim >= params.k)
      stats_.warnings.push_back("mim-width of the decomposition is " + std::to_string(mim) + ", not below k = " +
                                std::to_string(params.k) + "; the independence bound is void");
    if (find_induced_biclique(g, params.n, params.m))
      stats_.warnings.push_back("graph contains an induced K_{" + std::to_string(params.n) + "," +
                                std::to_string(params.m) + "}; the independence bound is void");
  }
  rebuild_all();
}

VertexSet TreeDecompositionCompiler::compute_frontier(int u, int a, int b) const {
  return g_.neighbors(u).minus(td_.bag(a)) & host_.at({b, a});
}

void TreeDecompositionCompiler::rebuild_all() {
  triples_.clear();
  for (int a = 0; a < tree_.num_nodes(); ++a) {
    const VertexSet& bag = td_.bag(a);
    for (int u = bag.first(); u >= 0; u = bag.next(u))
      for (int b : adj_[a])
        if (!td_.bag(b).test(u)) triples_[{u, a, b}] = Entry{compute_frontier(u, a, b), -1};
  }
}

void TreeDecompositionCompiler::refresh_around(int u, int a, int b) {
  triples_.erase({u, a, b});
  for (int c : adj_[b])
    if (c != a && !td_.bag(c).test(u)) triples_[{u, b, c}] = Entry{};
  // Only frontiers measured against the grown bag X_b can change.
  for (auto& [key, entry] : triples_)
    if (std::get<1>(key) == b) entry = Entry{compute_frontier(std::get<0>(key), b, std::get<2>(key)), -1};
}

bool TreeDecompositionCompiler::rich(Entry& e) {
  if (e.rich < 0) e.rich = has_independent_set(g_, e.frontier, g_value_) ? 1 : 0;
  return e.rich == 1;
}

void TreeDecompositionCompiler::insert(const Key& key, VertexLabel label) {
  auto [u, a, b] = key;
  last_ = FrontierTriple{u, a, b, triples_.at(key).frontier};
  td_.bag(b).set(u);
  labels_[{u, b}] = label;
  ++stats_.steps;
  ++(label == VertexLabel::bad ? stats_.bad : stats_.good);
  if (options_.mode == FrontierMode::full_recompute)
    rebuild_all();
  else
    refresh_around(u, a, b);
}

bool TreeDecompositionCompiler::step() {
  if (phase_ == 1) {
    for (auto& [key, entry] : triples_)
      if (rich(entry)) {
        ++stats_.loop1_iterations;
        insert(key, VertexLabel::bad);
        return true;
      }
    phase_ = 2;
  }
  if (phase_ == 2) {
    for (auto& [key, entry] : triples_)
      if (entry.frontier.any()) {
        ++stats_.loop2_iterations;
        insert(key, VertexLabel::good);
        return true;
      }
    phase_ = 0;
  }
  return false;
}

std::vector<FrontierTriple> TreeDecompositionCompiler::triples() const {
  std::vector<FrontierTriple> out;
  for (const auto& [key, entry] : triples_)
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), entry.frontier});
  return out;
}

CompileResult TreeDecompositionCompiler::finish() {
  while (step()) {
  }
  CompileResult out;
  out.params = params_;
  out.tree = tree_;
  out.td = td_;
  out.stats = stats_;
  out.labels = labels_;
  return out;
}

CompileResult compile(const Graph& g, const BranchDecomposition& bd, CompilerParams params, CompileOptions options) {
  TreeDecompositionCompiler compiler(g, bd, params, options);
  return compiler.finish();
}

}  // namespace widthforge
