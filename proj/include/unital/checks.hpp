#pragma once

// Computational checks on the closures of every affine SL(2,q)-unital of a
// given order: which automorphisms fix the block at infinity, translation
// groups at the new points, R-invariant parallelisms, and the factorization
// of automorphisms into field-semilinear maps and right multiplications.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unital/aut.hpp"

namespace unital {

struct ClosureCheck {
  std::uint64_t aut_order = 0;
  std::uint64_t infinity_stabilizer = 0;
  // Automorphisms of the affine unital preserving the parallelism.
  std::uint64_t parallelism_stabilizer = 0;
  bool fixes_infinity() const { return aut_order == infinity_stabilizer; }
};

struct TranslationCheck {
  std::uint32_t point = 0;
  std::uint64_t order = 0;
  bool equals_r_t = false;  // equals the right multiplications by the Sylow subgroup
};

struct RInvariantCheck {
  std::size_t enumerated = 0;
  bool complete = false;
  std::size_t r_invariant = 0;
  bool equals_flat_and_natural = false;
};

struct ClassCheck {
  std::string digest;
  SubgroupType subgroup_type = SubgroupType::cyclic;
  std::uint64_t aut_order = 0;
  bool order_divides_bound = false;  // |Aut| divides |stabilizer of S| * |SL(2,q)|
  bool generators_factor = false;
  ClosureCheck flat, natural;
  bool classical = false;  // some automorphism of the natural closure moves [infinity]
  std::vector<TranslationCheck> translations;  // at the new points of the natural closure
  bool translations_semiregular = false;       // at every point of the natural closure
  std::uint64_t max_translation_order = 0;
  std::optional<RInvariantCheck> r_invariant;
};

struct CheckOptions {
  ClassifyOptions classify;
  bool enumerate_parallelisms = true;
  std::size_t parallelism_cap = 100000;
};

struct CheckReport {
  std::uint32_t q = 0;
  std::uint32_t e = 0;
  std::vector<ClassCheck> classes;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Order of the automorphism group of the classical unital of order q:
// 2e q^3 (q^3+1) (q^2-1).
std::uint64_t classical_unital_order(std::uint32_t q, std::uint32_t e);

// Runs every check on every class for q >= 3. Failures list the checks that
// did not hold.
CheckReport run_checks(const SL2& g, const CheckOptions& opts = {});

}  // namespace unital
