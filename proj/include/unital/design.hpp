#pragma once

// Affine SL(2,q)-unitals: the conditions on the block collection, the
// construction, the flat and natural parallelisms, the search for block
// collections, and the order-3 example with two parallelisms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unital/incidence.hpp"
#include "unital/sl2.hpp"

namespace unital {

class DesignError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Sets D of q+1 elements, each containing the identity.
struct BlockCollection {
  std::vector<std::vector<ElementId>> sets;
  auto operator<=>(const BlockCollection&) const = default;
};

// D* = { x y^-1 : x != y in D }, sorted, with multiplicity.
std::vector<ElementId> quotient_multiset(const SL2& g, const std::vector<ElementId>& d);

struct ConditionQResult {
  bool ok = false;
  std::size_t distinct_quotients = 0;
  // Two distinct ordered pairs with the same quotient, when the check fails.
  std::optional<std::pair<std::pair<ElementId, ElementId>, std::pair<ElementId, ElementId>>> collision;
};

// Throws DesignError when D is malformed (wrong size, missing identity).
ConditionQResult check_condition_Q(const SL2& g, const std::vector<ElementId>& d);

struct ConditionPResult {
  bool ok = false;
  std::vector<ElementId> overlaps;  // covered more than once
  std::vector<ElementId> gaps;      // not covered
};

ConditionPResult check_condition_P(const SL2& g, const Subgroup& s, const BlockCollection& dc);

// |D| forced by the counting identity; nullopt if q(q+1) does not divide the
// leftover count.
std::optional<std::uint32_t> expected_collection_size(std::uint32_t q);

// Points are the element ids of g. Long blocks are all right cosets Sg and
// translates Dg, short blocks all right cosets of Sylow subgroups; each list
// sorted. Throws DesignError when (Q) or (P) fails.
IncidenceStructure build_affine_unital(const SL2& g, const Subgroup& s, const BlockCollection& dc);

// Structure of points and short blocks only (the short-block geometry).
IncidenceStructure short_block_geometry(const SL2& g);

// For a short block (a right coset of a Sylow subgroup), the Sylow T with
// block = T x (flat) or block = x T (natural).
std::vector<ElementId> flat_label(const SL2& g, const Block& b);
std::vector<ElementId> natural_label(const SL2& g, const Block& b);

// Parallelism by right cosets (flat) or left cosets (natural) of the Sylow
// subgroups. Class i belongs to sylow_subgroups(g)[i]; not normalized.
Parallelism flat_parallelism(const SL2& g, const IncidenceStructure& u);
Parallelism natural_parallelism(const SL2& g, const IncidenceStructure& u);

struct SearchOptions {
  std::uint32_t max_q = 5;
  bool parallel = true;
  // Stop after this many collections (0: all). A limited search runs serially
  // so the collections returned are the first ones in search order.
  std::size_t limit = 0;
};

// All collections satisfying (Q) and (P) for S. Each collection appears once:
// its i-th set is the unique translate through the identity that contains the
// smallest element left uncovered by the earlier sets. Sorted.
std::vector<BlockCollection> search_block_collections(const SL2& g, const Subgroup& s,
                                                      SearchOptions opts = {});

// Key identifying the block system of a collection: every translate of every
// D that passes through the identity, sorted.
std::vector<std::vector<ElementId>> collection_key(const SL2& g, const BlockCollection& dc);

struct TwoParallelismExample {
  IncidenceStructure structure;  // 24 points, 30 long then 32 short blocks
  Parallelism pi;                // short-block indices
  Parallelism pi_prime;
  Permutation isomorphism;       // pi_prime-closure onto pi-closure, 28 points
  std::vector<std::uint32_t> pi_point_of_class;        // new point (24..27) per class of pi
  std::vector<std::uint32_t> pi_prime_point_of_class;  // same for pi_prime
};

// The order-3 affine unital with trivial automorphism group and two
// inequivalent parallelisms whose closures are isomorphic. One-based labels
// from the source incidence table are shifted to zero-based.
TwoParallelismExample two_parallelism_example();

}  // namespace unital
