#pragma once

// SL(2,q) as an explicit finite group.
//
// Elements are numbered 0..n-1 in the order of their (a,b,c,d) field-index
// tuples; all downstream structures use these numbers as point labels.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unital/gf.hpp"
#include "unital/perm.hpp"

namespace unital {

using ElementId = std::uint32_t;

inline constexpr std::uint32_t kDefaultSl2Bound = 49;

struct Mat2 {
  FieldElement a, b, c, d;
  auto operator<=>(const Mat2&) const = default;
};

enum class SubgroupKind { sylow_p, order_q_plus_1, other };
enum class SubgroupType { cyclic, generalized_quaternion, exceptional };

std::string to_string(SubgroupType t);

struct Subgroup {
  std::vector<ElementId> elements;  // sorted
  SubgroupKind kind = SubgroupKind::other;
  auto operator<=>(const Subgroup& o) const { return elements <=> o.elements; }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool contains(ElementId x) const;
};

struct ClassifiedSubgroup {
  Subgroup group;
  SubgroupType type;
};

class SL2 {
public:
  explicit SL2(const FieldSpec& spec, std::uint32_t bound = kDefaultSl2Bound);

  const GaloisField& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  std::uint32_t p() const { return field_.p(); }
  std::uint32_t e() const { return field_.e(); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elements_.size()); }

  const std::vector<Mat2>& elements() const { return elements_; }
  const Mat2& matrix(ElementId x) const { return elements_[x]; }
  // Throws when m is not in SL(2,q).
  ElementId index_of(const Mat2& m) const;
  std::optional<ElementId> find(const Mat2& m) const;
  ElementId identity() const { return identity_; }

  ElementId mul(ElementId x, ElementId y) const;
  ElementId inv(ElementId x) const { return inverse_[x]; }
  // x^h = h^-1 x h
  ElementId conj(ElementId x, ElementId h) const { return mul(inv(h), mul(x, h)); }
  ElementId pow(ElementId x, std::uint64_t k) const;
  std::uint32_t element_order(ElementId x) const;

  // Arithmetic on arbitrary 2x2 matrices over the field.
  Mat2 mat_mul(const Mat2& x, const Mat2& y) const;
  FieldElement det(const Mat2& m) const;
  Mat2 mat_inv(const Mat2& m) const;  // m invertible
  Mat2 frobenius(const Mat2& m, std::uint32_t k) const;

  std::string format(ElementId x) const;

private:
  std::uint32_t key(const Mat2& m) const;

  GaloisField field_;
  std::vector<Mat2> elements_;
  std::vector<std::int32_t> lookup_;  // key -> index or -1
  std::vector<ElementId> inverse_;
  std::vector<ElementId> table_;      // n*n product table when small
  ElementId identity_ = 0;
};

// Closure of a generator set; sorted element list. Stops early and returns
// nullopt once more than max_size elements are generated.
std::optional<std::vector<ElementId>> generate_subgroup(const SL2& g,
                                                        const std::vector<ElementId>& gens,
                                                        std::size_t max_size = SIZE_MAX);

bool is_subgroup(const SL2& g, const std::vector<ElementId>& elements);

// The q+1 Sylow p-subgroups, sorted.
std::vector<Subgroup> sylow_subgroups(const SL2& g);

// Every subgroup of order q+1 with its type, sorted by element lists.
std::vector<ClassifiedSubgroup> subgroups_order_qplus1(const SL2& g);
SubgroupType classify_order_qplus1(const SL2& g, const Subgroup& s);

// Subgroup generated by the smallest element of order q+1.
Subgroup cyclic_subgroup_C(const SL2& g);

// x -> frobenius^k(a^-1 x a) with `matrix` an invertible matrix normalized so
// its first nonzero entry (row-major) is 1.
struct AutomorphismAction {
  Mat2 matrix;
  std::uint32_t frobenius = 0;
  auto operator<=>(const AutomorphismAction&) const = default;
};

Mat2 normalize_projective(const SL2& g, const Mat2& m);
ElementId apply(const SL2& g, const AutomorphismAction& alpha, ElementId x);
Permutation action_permutation(const SL2& g, const AutomorphismAction& alpha);
// Composition "alpha then beta" as a single action.
AutomorphismAction compose(const SL2& g, const AutomorphismAction& alpha,
                           const AutomorphismAction& beta);

// All e*|PGL(2,q)| actions, in canonical order.
std::vector<AutomorphismAction> all_automorphism_actions(const SL2& g);

struct AutomorphismGroupA {
  PermGroup group;  // on the points of SL(2,q)
  // Finds the action inducing perm; nullopt if perm is not induced by one.
  std::optional<AutomorphismAction> decode(const SL2& g, const Permutation& perm) const;
};

AutomorphismGroupA automorphism_group_A(const SL2& g);

struct SubgroupStabilizer {
  PermGroup group;
  std::vector<AutomorphismAction> actions;  // every element, canonical order
};

// Setwise stabilizer of S in the automorphism group; throws when S is not a
// subgroup of order q+1.
SubgroupStabilizer stabilizer_in_A(const SL2& g, const Subgroup& s);

Permutation inversion_permutation(const SL2& g);
// x -> x h
Permutation right_multiplication(const SL2& g, ElementId h);

}  // namespace unital
