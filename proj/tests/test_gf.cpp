#include <doctest.h>

#include "unital/gf.hpp"

using namespace unital;

namespace {

GaloisField field_of(std::uint32_t q) {
  const auto pe = prime_power(q);
  REQUIRE(pe);
  return GaloisField(make_field(pe->first, pe->second));
}

}  // namespace

TEST_CASE("prime powers factor and reject composites") {
  CHECK(prime_power(64) == std::pair<std::uint32_t, std::uint32_t>{2, 6});
  CHECK(prime_power(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
  CHECK(prime_power(13) == std::pair<std::uint32_t, std::uint32_t>{13, 1});
  CHECK_FALSE(prime_power(12));
  CHECK_FALSE(prime_power(1));
  CHECK_FALSE(prime_power(0));
}

TEST_CASE("moduli are the smallest monic irreducibles") {
  CHECK(make_field(2, 2).modulus == std::vector<std::uint32_t>{1, 1, 1});
  // Low-degree coefficients compare first: x^3+x^2+1 precedes x^3+x+1.
  CHECK(make_field(2, 3).modulus == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(make_field(3, 2).modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(make_field(5, 1).modulus == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("irreducibility agrees with root counting on quadratics") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t c0 = 0; c0 < p; ++c0)
      for (std::uint32_t c1 = 0; c1 < p; ++c1) {
        bool root = false;
        for (std::uint32_t x = 0; x < p; ++x) root = root || (x * x + c1 * x + c0) % p == 0;
        CHECK(is_irreducible({c0, c1, 1}, p) == !root);
      }
}

TEST_CASE("bad field parameters throw") {
  CHECK_THROWS_AS(make_field(4, 1), FieldError);
  CHECK_THROWS_AS(make_field(2, 17), FieldError);
  CHECK_THROWS_AS(make_field(2, 2, {1, 0, 1}), FieldError);  // x^2+1 = (x+1)^2
  const auto f = field_of(9);
  CHECK_THROWS_AS(f.inv(f.zero()), FieldError);
  CHECK_THROWS_AS(f.element(9), FieldError);
  CHECK_THROWS_AS(f.frobenius(f.one(), 2), FieldError);
}

TEST_CASE("field axioms hold on small fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const auto f = field_of(q);
    const auto els = f.elements();
    for (auto a : els) {
      CHECK(f.add(a, f.zero()) == a);
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
      for (auto b : els) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (auto c : els) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("Frobenius is additive and multiplicative, with order e") {
  const auto f = field_of(27);
  for (auto a : f.elements()) {
    CHECK(f.frobenius(a, 0) == a);
    CHECK(f.frobenius(a, 1) == f.pow(a, 3));
    CHECK(f.frobenius(f.frobenius(f.frobenius(a, 1), 1), 1) == a);
    for (auto b : f.elements()) {
      CHECK(f.frobenius(f.add(a, b), 1) == f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
      CHECK(f.frobenius(f.mul(a, b), 2) == f.mul(f.frobenius(a, 2), f.frobenius(b, 2)));
    }
  }
}

TEST_CASE("primitive element is the smallest of order q-1") {
  for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 49u, 64u}) {
    const auto f = field_of(q);
    const auto w = f.primitive_element();
    CHECK(f.multiplicative_order(w) == q - 1);
    for (std::uint32_t i = 1; i < w.index; ++i) CHECK(f.multiplicative_order(f.element(i)) < q - 1);
  }
}

TEST_CASE("coefficient vectors round-trip through indices") {
  const auto f = field_of(25);
  for (auto a : f.elements()) CHECK(f.from_coeffs(f.coeffs(a)) == a);
  CHECK(f.coeffs(f.element(7)) == std::vector<std::uint32_t>{2, 1});
}
