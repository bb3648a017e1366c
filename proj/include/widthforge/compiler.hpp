#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "widthforge/branch_decomposition.hpp"
#include "widthforge/matching.hpp"
#include "widthforge/tree_decomposition.hpp"

namespace widthforge {

struct CompilerParams {
  int n = 2;
  int m = 2;
  int k = 2;
};

// 2^(n+k), saturating.
std::uint64_t f_threshold(int n, int k);
// m * k^n, saturating.
std::uint64_t g_threshold(int m, int n, int k);
// 6 * (2^(n+k-1) + m * k^(n+1)), saturating; compiler outputs stay strictly below it.
std::uint64_t alpha_bound(int n, int m, int k);

struct InferredParams {
  CompilerParams params;
  // true when no t <= 4 excludes an induced K_{t,t} and t = |V|/2 + 1 was used
  bool fallback = false;
  int mim_width = 0;
};
// n = m = smallest t <= 4 with g free of induced K_{t,t}; k = mim-width of bd + 1.
InferredParams infer_parameters(const Graph& g, const BranchDecomposition& bd);

enum class FrontierMode { incremental, full_recompute };

struct CompileOptions {
  FrontierMode mode = FrontierMode::incremental;
  // Verify mim-width(bd) < k and K_{n,m}-freeness; failures become warnings.
  bool check = false;
};

struct CompileStats {
  int steps = 0;
  int bad = 0;
  int good = 0;
  int loop1_iterations = 0;
  int loop2_iterations = 0;
  std::vector<std::string> warnings;
};

enum class VertexLabel { bad, good };

struct CompileResult {
  CompilerParams params;
  // The input decomposition after suppressing degree-2 nodes; its nodes are
  // the nodes of td.
  BranchDecomposition tree;
  TreeDecomposition td;
  CompileStats stats;
  // (vertex, node) -> label for every vertex pushed into a bag
  std::map<std::pair<int, int>, VertexLabel> labels;
};

struct FrontierTriple {
  int u = 0;
  int a = 0;  // inside T_u
  int b = 0;  // outside T_u, adjacent to a
  VertexSet frontier;
};

// The two-loop bag growing procedure, one insertion per step().
class TreeDecompositionCompiler {
 public:
  TreeDecompositionCompiler(const Graph& g, const BranchDecomposition& bd, CompilerParams params,
                            CompileOptions options = {});

  // Performs one insertion; false once both loops are exhausted.
  bool step();
  bool done() const { return phase_ == 0; }
  // 1 or 2 while running, 0 when done.
  int phase() const { return phase_; }

  const TreeDecomposition& current() const { return td_; }
  const BranchDecomposition& tree() const { return tree_; }
  // Every triple (u, b, a) with ab touching T_u at a, ordered by (u, a, b).
  std::vector<FrontierTriple> triples() const;
  // The triple inserted by the last step, if any.
  const std::optional<FrontierTriple>& last_insertion() const { return last_; }

  CompileResult finish();

 private:
  struct Entry {
    VertexSet frontier;
    int rich = -1;  // unknown, 0, 1
  };
  using Key = std::tuple<int, int, int>;  // (u, a, b)

  VertexSet compute_frontier(int u, int a, int b) const;
  void rebuild_all();
  void refresh_around(int u, int a, int b);
  bool rich(Entry& e);
  void insert(const Key& key, VertexLabel label);

  const Graph& g_;
  BranchDecomposition tree_;
  CompilerParams params_;
  CompileOptions options_;
  int g_value_;
  std::vector<std::vector<int>> adj_;
  std::map<std::pair<int, int>, VertexSet> host_;  // (b, a) -> vertices hosted by T(b, a)
  TreeDecomposition td_;
  std::map<Key, Entry> triples_;
  std::map<std::pair<int, int>, VertexLabel> labels_;
  CompileStats stats_;
  std::optional<FrontierTriple> last_;
  int phase_ = 1;
};

CompileResult compile(const Graph& g, const BranchDecomposition& bd, CompilerParams params,
                      CompileOptions options = {});

// From disjoint U, V where every u has a neighbour in V and every v at most
// j neighbours in U, with |U| >= 2jl: l pairs inducing lP_2 in G[X, Y].
Matching extract_semi_matching(const Graph& g, const VertexSet& u, const VertexSet& v, int j, int l);

struct MatchingOrBiclique {
  std::optional<Matching> matching;  // k pairs inducing kP_2 in G[X, Y]
  std::optional<Biclique> biclique;  // induced K_{n,m} with X in U, Y in V
};
// From an independent U disjoint from V with |U| >= 2^(n+k) and
// alpha(N_V(u)) >= m k^n for every u in U.
MatchingOrBiclique extract_kP2_or_biclique(const Graph& g, const VertexSet& u, const VertexSet& v, int n, int m,
                                           int k);

}  // namespace widthforge
