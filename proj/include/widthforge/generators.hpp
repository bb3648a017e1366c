#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "widthforge/graph.hpp"

namespace widthforge {

enum class Family {
  path,
  cycle,
  complete,
  biclique,
  grid,
  elementary_wall,
  net_wall,
  rook,
  kt_box_kt,
  kt_box_st,
  degeneracy_counterexample,
  l_caterpillar,
  random_chordal,
  star,
};

struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;
  std::optional<std::uint32_t> seed;  // random_chordal only
};

std::string family_name(Family f);
// Accepts the hyphenated names used on the command line ("net-wall", "Kt-box-Kt", ...).
std::optional<Family> parse_family(const std::string& name);
int family_arity(Family f);

// Deterministic family member with semantic labels (coordinates, layers,
// caterpillar roles). Throws InvalidArgument naming the violated constraint.
Graph generate(const FamilySpec& spec);
Graph generate(Family family, std::vector<int> params, std::optional<std::uint32_t> seed = std::nullopt);

struct FamilyReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Structural recognition: counts, degree sequence, family-specific rules
// (bipartiteness, coordinate adjacency, chordality, triangles of a net-wall)
// and isomorphism to the generated member.
FamilyReport verify_family(const Graph& g, const FamilySpec& spec);

}  // namespace widthforge
