#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "widthforge/graph.hpp"

namespace widthforge {

struct CorpusEntry {
  std::string id;
  Graph graph;
};

// Pairwise non-isomorphic graphs on exactly n vertices (n <= 7), ordered by
// edge count then canonical form.
std::vector<Graph> all_graphs(int n);
// Connected graphs on 1..max_n vertices; 143 of them for max_n = 6.
std::vector<Graph> connected_graphs(int max_n);
// Graphs with exactly m edges and no isolated vertices, up to isomorphism.
std::vector<Graph> graphs_with_edges(int m);

// G(n, p) from a 64-bit Mersenne twister; edge uv (u < v, lexicographic)
// present iff the next 53-bit draw is below p.
Graph random_graph(int n, double p, std::uint64_t seed);

// Corpus specs:
//   connected:N       connected graphs on at most N vertices
//   all:N             all graphs on exactly N vertices
//   edges:A-B         graphs with A..B edges and no isolated vertices
//   random:C:N:SEED   C random graphs on 2..N vertices
//   compiler          the compiler benchmark mix (bipartite-free families, cycles, grids, random)
//   file:PATH         a single graph file
// Throws InvalidArgument on a malformed spec.
std::vector<CorpusEntry> load_corpus(const std::string& spec);

}  // namespace widthforge
