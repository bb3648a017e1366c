#pragma once

#include <vector>

#include "widthforge/branch_decomposition.hpp"
#include "widthforge/matching.hpp"

namespace widthforge {

// Caterpillar decomposition of the n x m rook graph; cell (i, j) (1-based)
// is element (i-1)*m + (j-1), matching generate(rook(n, m)). Rows split into
// groups 1..a, a+1..b, b+1..n with a = ceil(n/3), b = floor(2n/3); empty
// groups are dropped, and two groups are joined without the hub.
BranchDecomposition rook_caterpillar_bd(int n, int m);

struct PowerTransfer {
  WidthReport on_graph;
  WidthReport on_power;
  // tree edges where the cut on g^r exceeds the cut on g (empty when the transfer holds)
  std::vector<int> violations;
  bool holds() const { return violations.empty(); }
};

// Evaluates bd under sim on g and on g^r. Throws InvalidArgument for even r.
PowerTransfer odd_power_transfer(const Graph& g, const BranchDecomposition& bd, int r);

struct PerfectTriple {
  VertexSet l_set;
  VertexSet d_set;
  VertexSet r_set;
  // For every vertex of the mid set: smallest neighbour through an edge on the
  // A_e side (l) and on the other side (r); -1 elsewhere.
  std::vector<int> l;
  std::vector<int> r;
};

struct TripleExtraction {
  PerfectTriple triple;
  // Induced matching of L(g)[A_e, complement]; L(g) vertices are edge indices of g.
  Matching matching;
  int extensions = 0;
  int augmentations = 0;
};

// bd is a decomposition of E(g); tree_edge selects the cut A_e. Requires
// |mid(A_e)| >= 25n - 1.
TripleExtraction perfect_triple_extract(const Graph& g, const BranchDecomposition& bd, int tree_edge, int n);

}  // namespace widthforge
