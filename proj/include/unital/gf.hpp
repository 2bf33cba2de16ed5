#pragma once

// Exact arithmetic in GF(p^e).
//
// Elements are identified by their canonical index: the coefficient vector
// (coefficient of x^i at position i) read as a base-p integer. The index
// order is the element order used everywhere downstream.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unital {

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kDefaultFieldBound = 1u << 16;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  // Monic, degree e, low-degree coefficient first; modulus.size() == e + 1.
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

struct FieldElement {
  std::uint32_t index = 0;
  auto operator<=>(const FieldElement&) const = default;
};

bool is_prime(std::uint64_t n);

// Checks irreducibility by trial division with every monic polynomial of
// degree 1..deg/2. Coefficients low-degree first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// Field with the lexicographically smallest monic irreducible modulus
// (coefficients compared from the constant term upwards).
FieldSpec make_field(std::uint32_t p, std::uint32_t e,
                     std::uint32_t bound = kDefaultFieldBound);

// Field with a caller-supplied modulus, validated for irreducibility.
FieldSpec make_field(std::uint32_t p, std::uint32_t e,
                     std::vector<std::uint32_t> modulus,
                     std::uint32_t bound = kDefaultFieldBound);

// Factors q as p^e; nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q);

// Arithmetic context for one field. Immutable after construction, so a
// single instance can be shared across threads.
class GaloisField {
public:
  explicit GaloisField(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t e() const { return spec_.e; }
  std::uint32_t q() const { return q_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;

  // All q elements in index order.
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t k) const;

  // a^(p^k) for 0 <= k < e.
  FieldElement frobenius(FieldElement a, std::uint32_t k) const;

  // Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(FieldElement a) const;
  FieldElement primitive_element() const { return {exp_[1]}; }

private:
  FieldElement mul_poly(FieldElement a, FieldElement b) const;

  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i < e
  std::vector<std::uint32_t> exp_;    // exp_[i] = g^i, i < q-1
  std::vector<std::uint32_t> log_;    // log_[exp_[i]] = i
  std::vector<std::uint32_t> add_;    // q*q table when q is small
};

}  // namespace unital
