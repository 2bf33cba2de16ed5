#pragma once

// The generalized quadrangle Q(4,q) of the quadric x1x3 + x2x4 + x5^2 = 0,
// its hyperplane section x5 = 0, and the complement geometry that models the
// short blocks of an affine SL(2,q)-unital.

#include <cstdint>
#include <optional>
#include <vector>

#include "unital/gf.hpp"
#include "unital/incidence.hpp"
#include "unital/perm.hpp"

namespace unital {

// Homogeneous coordinates, first nonzero coordinate 1.
struct ProjectivePoint {
  std::vector<FieldElement> coords;
  auto operator<=>(const ProjectivePoint&) const = default;
};

struct PolarSpace {
  FieldSpec field;
  std::vector<ProjectivePoint> points;         // sorted
  std::vector<std::vector<std::uint32_t>> lines;  // sorted point indices, sorted list

  IncidenceStructure incidence() const;  // lines as long blocks
};

PolarSpace build_Q4(const FieldSpec& spec);

// Points with x5 = 0 and the lines they contain, as indices into q4.
struct Hyperplane {
  std::vector<std::uint32_t> points;
  std::vector<std::uint32_t> lines;
};

Hyperplane hyperplane_H(const PolarSpace& q4);

// Every line of q4 meets the hyperplane.
bool is_geometric_hyperplane(const PolarSpace& q4, const Hyperplane& h);

// Each point off a line is collinear with exactly one point of the line.
bool satisfies_gq_axiom(const PolarSpace& q4);

// Points of q4 off h (renumbered in order) with the traces of the remaining
// lines as short blocks.
IncidenceStructure complement_geometry(const PolarSpace& q4, const Hyperplane& h);

struct ShortBlockModel {
  std::uint32_t q = 0;
  std::optional<Permutation> isomorphism;  // short-block geometry onto the complement
  std::uint64_t aut_order = 0;             // of the short-block geometry
  std::uint64_t expected_order = 0;        // 2e (q-1)^2 q^2 (q+1)^2
  std::uint64_t generated_order = 0;       // by SL(2,q)-automorphisms, inversion and R
  bool generated_is_subgroup = false;
  bool ok() const {
    return isomorphism && aut_order == expected_order && generated_order == aut_order &&
           generated_is_subgroup;
  }
};

ShortBlockModel verify_short_block_model(const FieldSpec& spec);

}  // namespace unital
