#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthforge/graph.hpp"

namespace widthforge {

enum class CutKind { mim, sim, mm, rank, eta };

std::string cut_kind_name(CutKind k);
std::optional<CutKind> parse_cut_kind(const std::string& name);

// A symmetric set function on the vertices of g (mim, sim, mm, rank) or on
// its edges by index (eta). Holds a reference; g must outlive the function.
class CutFunction {
 public:
  CutFunction(const Graph& g, CutKind kind);
  CutFunction(Graph&&, CutKind) = delete;

  CutKind kind() const { return kind_; }
  const Graph& graph() const { return *g_; }
  bool on_edges() const { return kind_ == CutKind::eta; }
  int ground_size() const { return on_edges() ? g_->num_edges() : g_->num_vertices(); }

  // Throws InvalidArgument when part has elements outside the ground set.
  int evaluate(const ElementSet& part) const;
  // No range check.
  int evaluate_unchecked(const ElementSet& part) const;

 private:
  int eta(const ElementSet& part) const;
  int rank(const VertexSet& side) const;

  const Graph* g_;
  CutKind kind_;
  std::vector<ElementSet> incident_;  // eta: edge indices at each vertex
};

// Vertices incident both with an edge in x and with an edge outside it.
VertexSet mid_set(const Graph& g, const ElementSet& x);

struct SymmetryViolation {
  ElementSet part;
  int value = 0;
  int complement_value = 0;
};

struct SymmetryReport {
  bool symmetric = true;
  int checked = 0;
  std::vector<SymmetryViolation> violations;
};

SymmetryReport assert_symmetry(const CutFunction& f, const std::vector<ElementSet>& sample);

}  // namespace widthforge
