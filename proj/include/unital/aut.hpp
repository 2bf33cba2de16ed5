#pragma once

// Automorphisms and isomorphisms of incidence structures through canonical
// labelling of the point/block incidence graph, plus the group-theoretic
// checks on SL(2,q)-unitals built on top of them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unital/canon.hpp"
#include "unital/design.hpp"
#include "unital/incidence.hpp"
#include "unital/perm.hpp"
#include "unital/sl2.hpp"

namespace unital {

// Optional extra colours that automorphisms must preserve. Empty vectors mean
// no refinement; otherwise one entry per point / per block.
struct StructureColoring {
  std::vector<std::uint32_t> points;
  std::vector<std::uint32_t> blocks;
};

// Vertices 0..v-1 are the points, v+b is block b. Base colours: point, long
// block, short block; extra colours refine them.
ColoredGraph incidence_graph(const IncidenceStructure& u, const StructureColoring& coloring = {});

// Full automorphism group acting on points.
PermGroup automorphism_group(const IncidenceStructure& u, const StructureColoring& coloring = {},
                             const CanonOptions& opts = {});

struct Certificate {
  std::vector<std::uint32_t> words;
  Permutation labeling;  // on graph vertices
  std::string hex() const { return certificate_hex(words); }
  std::string digest() const { return certificate_digest(words); }
};

Certificate canonical_certificate(const IncidenceStructure& u, const StructureColoring& coloring = {},
                                  const CanonOptions& opts = {});

// A point bijection mapping the blocks of a onto the blocks of b, if any.
std::optional<Permutation> are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                                          const CanonOptions& opts = {});

// Checks that g maps the blocks of a onto the blocks of b.
bool is_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b, const Permutation& g);

// {x -> x h : h in SL(2,q)}.
PermGroup right_regular_group(const SL2& g);

struct Factorization {
  AutomorphismAction alpha;
  ElementId h = 0;
};

// Writes psi as alpha followed by x -> x h, with h the image of the identity.
// nullopt when psi * rho_h^-1 is not induced by a field-semilinear action.
std::optional<Factorization> factor_automorphism(const SL2& g, const Permutation& psi);

// Automorphism in `group` carrying pi1 to pi2, found by orbit search.
std::optional<Permutation> are_parallelisms_equivalent(const IncidenceStructure& u,
                                                       const PermGroup& group,
                                                       const Parallelism& pi1,
                                                       const Parallelism& pi2);

// Setwise stabilizer of a block.
PermGroup block_stabilizer(const PermGroup& aut, const IncidenceStructure& u, std::uint32_t block);

// Subgroup of `group` mapping the parallelism to itself.
PermGroup parallelism_stabilizer(const IncidenceStructure& u, const PermGroup& group,
                                 const Parallelism& pi);

struct RInvariantResult {
  std::vector<Parallelism> parallelisms;  // normalized, sorted
  std::size_t enumerated = 0;
  bool complete = true;
};

// Every parallelism of u fixed by all right multiplications.
RInvariantResult r_invariant_parallelisms(const SL2& g, const IncidenceStructure& u,
                                          std::size_t cap = SIZE_MAX);

// Extends an automorphism of u that preserves the closure's parallelism to
// the closed unital; nullopt if the parallelism is not preserved.
std::optional<Permutation> extend_to_closure(const IncidenceStructure& u, const ClosedUnital& cu,
                                             const Permutation& g);

struct TranslationGroup {
  PermGroup group;
  bool semiregular = false;  // on the points other than the center
  bool is_center = false;    // order equals the unital order
};

// Automorphisms fixing c and every block through c.
TranslationGroup translations_with_center(const PermGroup& aut, const IncidenceStructure& u,
                                          std::uint32_t c);

// One subgroup of order q+1 from each orbit of the automorphism group of
// SL(2,q) on such subgroups.
std::vector<ClassifiedSubgroup> subgroup_orbit_representatives(const SL2& g);

struct UnitalClass {
  ClassifiedSubgroup subgroup;
  BlockCollection collection;
  IncidenceStructure structure;
  Certificate certificate;
  std::uint64_t aut_order = 0;
};

struct Classification {
  std::uint32_t q = 0;
  std::vector<UnitalClass> classes;  // sorted by certificate
  std::size_t collections = 0;       // collections found over all representatives
  std::size_t orbits = 0;            // collections up to the stabilizer of S
};

struct ClassifyOptions {
  SearchOptions search;
  CanonOptions canon;
};

// Isomorphism classes of affine SL(2,q)-unitals.
Classification classify_affine_unitals(const SL2& g, const ClassifyOptions& opts = {});

}  // namespace unital
