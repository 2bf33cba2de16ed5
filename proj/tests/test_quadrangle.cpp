#include <doctest.h>

#include <set>

#include "brute_force.hpp"
#include "unital/aut.hpp"
#include "unital/quadrangle.hpp"

using namespace unital;

namespace {

FieldSpec field_of(std::uint32_t q) {
  const auto pe = prime_power(q);
  REQUIRE(pe);
  return make_field(pe->first, pe->second);
}

// Evaluates x1x3 + x2x4 + x5^2 directly from the coordinates.
bool on_quadric(const GaloisField& f, const ProjectivePoint& p) {
  const auto& x = p.coords;
  return f.add(f.add(f.mul(x[0], x[2]), f.mul(x[1], x[3])), f.mul(x[4], x[4])) == f.zero();
}

}  // namespace

TEST_CASE("Q(4,q) point and line counts") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    CAPTURE(q);
    const auto q4 = build_Q4(field_of(q));
    const GaloisField f(q4.field);
    CHECK(q4.points.size() == (q + 1) * (q * q + 1));
    CHECK(q4.lines.size() == (q + 1) * (q * q + 1));
    for (const auto& p : q4.points) CHECK(on_quadric(f, p));
    for (const auto& l : q4.lines) CHECK(l.size() == q + 1);
    std::vector<std::uint32_t> lines_per_point(q4.points.size(), 0);
    for (const auto& l : q4.lines)
      for (auto x : l) ++lines_per_point[x];
    for (auto c : lines_per_point) CHECK(c == q + 1);
    CHECK(satisfies_gq_axiom(q4));
  }
}

TEST_CASE("the section x5 = 0 is a geometric hyperplane") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    CAPTURE(q);
    const auto q4 = build_Q4(field_of(q));
    const GaloisField f(q4.field);
    const auto h = hyperplane_H(q4);
    CHECK(h.points.size() == (q + 1) * (q + 1));
    CHECK(h.lines.size() == 2 * (q + 1));
    for (auto x : h.points) CHECK(q4.points[x].coords[4] == f.zero());
    CHECK(is_geometric_hyperplane(q4, h));
    Hyperplane missing = h;
    missing.points.pop_back();
    CHECK_FALSE(is_geometric_hyperplane(q4, missing));
  }
}

TEST_CASE("complement geometry has q^3 - q points and blocks of size q") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto q4 = build_Q4(field_of(q));
    const auto c = complement_geometry(q4, hyperplane_H(q4));
    CHECK(c.num_points() == q * q * q - q);
    CHECK(c.num_short() == (q + 1) * (q * q - 1));
    for (const auto& b : c.blocks()) CHECK(b.size() == q);
  }
}

TEST_CASE("short-block model at q=2 and q=3") {
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> expected{{2, 72}, {3, 1152}};
  for (auto [q, order] : expected) {
    CAPTURE(q);
    const auto spec = field_of(q);
    const auto m = verify_short_block_model(spec);
    CHECK(m.ok());
    CHECK(m.aut_order == order);
    CHECK(m.expected_order == order);
    REQUIRE(m.isomorphism);
    const SL2 g(spec);
    const auto q4 = build_Q4(spec);
    CHECK(is_isomorphism(short_block_geometry(g), complement_geometry(q4, hyperplane_H(q4)), *m.isomorphism));
  }
}

TEST_CASE("short-block geometry automorphisms at q=2 match exhaustive search") {
  const SL2 g(field_of(2));
  const auto s = short_block_geometry(g);
  CHECK(automorphism_group(s).order() == brute::automorphism_count(s));
}
