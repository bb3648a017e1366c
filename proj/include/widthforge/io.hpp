#pragma once

#include <string>

#include "widthforge/branch_decomposition.hpp"
#include "widthforge/tree_decomposition.hpp"

namespace widthforge {

// DIMACS-style: "c" comments, "p edge <n> <m>", then m lines "e <u> <v>" (1-based).
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// "s bd <nodes> <elements>", "e <i> <j>" per tree edge, "l <node> <element>" per element.
BranchDecomposition parse_bd(const std::string& text);
std::string serialize_bd(const BranchDecomposition& bd);

struct ParsedTd {
  TreeDecomposition td;
  int num_vertices = 0;
};
// PACE: "s td <bags> <max-bag-size> <n>", "b <id> <v>...", then "<i> <j>" per tree edge.
ParsedTd parse_td(const std::string& text);
std::string serialize_td(const TreeDecomposition& td, int num_vertices);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace widthforge
