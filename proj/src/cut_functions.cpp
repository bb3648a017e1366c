#include "widthforge/cut_functions.hpp"

#include "widthforge/errors.hpp"
#include "widthforge/matching.hpp"

namespace widthforge {

std::string cut_kind_name(CutKind k) {
  switch (k) {
    case CutKind::mim: return "mim";
    case CutKind::sim: return "sim";
    case CutKind::mm: return "mm";
    case CutKind::rank: return "rank";
    case CutKind::eta: return "eta";
  }
  return "?";
}

std::optional<CutKind> parse_cut_kind(const std::string& name) {
  for (CutKind k : {CutKind::mim, CutKind::sim, CutKind::mm, CutKind::rank, CutKind::eta})
    if (cut_kind_name(k) == name) return k;
  if (name == "bw") return CutKind::eta;
  return std::nullopt;
}

CutFunction::CutFunction(const Graph& g, CutKind kind) : g_(&g), kind_(kind) {
  if (kind == CutKind::eta) {
    incident_.resize(g.num_vertices());
    for (int i = 0; i < g.num_edges(); ++i) {
      incident_[g.edge(i).u].set(i);
      incident_[g.edge(i).v].set(i);
    }
  }
}

int CutFunction::evaluate(const ElementSet& part) const {
  if (!part.is_subset_of(ElementSet::prefix(ground_size())))
    throw InvalidArgument("cut contains elements outside the ground set of size " +
                          std::to_string(ground_size()));
  return evaluate_unchecked(part);
}

int CutFunction::evaluate_unchecked(const ElementSet& part) const {
  switch (kind_) {
    case CutKind::mim: return max_induced_matching_size(*g_, part, CutMode::bipartite_cut);
    case CutKind::sim: return max_induced_matching_size(*g_, part, CutMode::full_graph);
    case CutKind::mm: return max_cut_matching_size(*g_, part);
    case CutKind::rank: return rank(part);
    case CutKind::eta: return eta(part);
  }
  return 0;
}

int CutFunction::eta(const ElementSet& part) const {
  const ElementSet all = ElementSet::prefix(g_->num_edges());
  const ElementSet rest = all.minus(part);
  int count = 0;
  for (int v = 0; v < g_->num_vertices(); ++v)
    if (incident_[v].intersects(part) && incident_[v].intersects(rest)) ++count;
  return count;
}

int CutFunction::rank(const VertexSet& side) const {
  // Rows: vertices of side, columns: vertices of the complement; GF(2).
  const VertexSet other = g_->all_vertices().minus(side);
  std::vector<VertexSet> rows;
  for (int x = side.first(); x >= 0; x = side.next(x)) {
    VertexSet row = g_->neighbors(x) & other;
    for (const VertexSet& r : rows) {
      int pivot = r.first();
      if (row.test(pivot)) row ^= r;
    }
    if (row.any()) {
      // keep rows reduced against each other so pivots stay distinct
      int pivot = row.first();
      for (VertexSet& r : rows)
        if (r.test(pivot)) r ^= row;
      rows.push_back(row);
    }
  }
  return static_cast<int>(rows.size());
}

VertexSet mid_set(const Graph& g, const ElementSet& x) {
  VertexSet in, out;
  for (int i = 0; i < g.num_edges(); ++i) {
    VertexSet& s = x.test(i) ? in : out;
    s.set(g.edge(i).u);
    s.set(g.edge(i).v);
  }
  return in & out;
}

SymmetryReport assert_symmetry(const CutFunction& f, const std::vector<ElementSet>& sample) {
  SymmetryReport report;
  const ElementSet all = ElementSet::prefix(f.ground_size());
  for (const ElementSet& x : sample) {
    int a = f.evaluate(x);
    int b = f.evaluate(all.minus(x));
    ++report.checked;
    if (a != b) {
      report.symmetric = false;
      report.violations.push_back({x, a, b});
    }
  }
  return report;
}

}  // namespace widthforge
