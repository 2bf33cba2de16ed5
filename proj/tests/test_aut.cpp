#include <doctest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "structures.hpp"
#include "unital/aut.hpp"
#include "unital/checks.hpp"

using namespace unital;

namespace {

SL2 group_of(std::uint32_t q) {
  const auto pe = prime_power(q);
  REQUIRE(pe);
  return SL2(make_field(pe->first, pe->second));
}

IncidenceStructure affine_unital(const SL2& g) {
  SearchOptions opts;
  opts.limit = 1;
  const auto s = cyclic_subgroup_C(g);
  const auto found = search_block_collections(g, s, opts);
  REQUIRE(found.size() == 1);
  return build_affine_unital(g, s, found.front());
}

}  // namespace

TEST_CASE("order-3 example with two parallelisms") {
  const auto ex = two_parallelism_example();
  const auto& u = ex.structure;
  CHECK(verify_affine_axioms(u).all());
  CHECK(automorphism_group(u).order() == 1);
  CHECK_FALSE(are_parallelisms_equivalent(u, automorphism_group(u), ex.pi, ex.pi_prime));
  const auto a = closure(u, ex.pi, ex.pi_point_of_class);
  const auto b = closure(u, ex.pi_prime, ex.pi_prime_point_of_class);
  CHECK(verify_unital(a.structure).all());
  CHECK(verify_unital(b.structure).all());
  CHECK(is_isomorphism(b.structure, a.structure, ex.isomorphism));
  CHECK_FALSE(is_isomorphism(a.structure, b.structure, Permutation::identity(28)));
  const auto found = are_isomorphic(a.structure, b.structure);
  REQUIRE(found);
  CHECK(is_isomorphism(a.structure, b.structure, *found));
}

TEST_CASE("q=2 affine unital automorphisms match exhaustive search") {
  const auto g = group_of(2);
  const auto u = affine_unital(g);
  CHECK(u.num_points() == 6);
  const auto aut = automorphism_group(u);
  CHECK(aut.order() == brute::automorphism_count(u));
  CHECK(aut.order() == 72);
  // Its closure is the affine plane of order 3.
  const auto cu = closure(u, natural_parallelism(g, u));
  CHECK(are_isomorphic(cu.structure, fixtures::affine_plane_3()));
  CHECK(automorphism_group(cu.structure).order() == brute::automorphism_count(cu.structure));
}

TEST_CASE("q=3 affine unital automorphisms") {
  const auto g = group_of(3);
  const auto u = affine_unital(g);
  const auto aut = automorphism_group(u);
  CHECK(aut.order() == 192);
  const auto r = right_regular_group(g);
  CHECK(r.order() == g.size());
  CHECK(r.is_transitive());
  CHECK(r.is_subgroup_of(aut));
  for (const auto& psi : aut.generators()) {
    const auto f = factor_automorphism(g, psi);
    REQUIRE(f);
    CHECK(action_permutation(g, f->alpha) * right_multiplication(g, f->h) == psi);
  }
}

TEST_CASE("right multiplications factor with the identity action") {
  const auto g = group_of(3);
  for (ElementId h = 0; h < g.size(); h += 5) {
    const auto f = factor_automorphism(g, right_multiplication(g, h));
    REQUIRE(f);
    CHECK(f->h == h);
    CHECK(action_permutation(g, f->alpha).is_identity());
  }
}

TEST_CASE("inversion does not factor") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto g = group_of(q);
    CHECK_FALSE(factor_automorphism(g, inversion_permutation(g)));
  }
}

TEST_CASE("block stabilizer of the closure block at infinity") {
  const auto g = group_of(3);
  const auto u = affine_unital(g);
  const auto aut_u = automorphism_group(u);
  const auto flat = closure(u, flat_parallelism(g, u));
  const auto aut = automorphism_group(flat.structure);
  const auto stab = block_stabilizer(aut, flat.structure, flat.infinity_block);
  CHECK(stab.order() == aut.order());
  CHECK(stab.order() == parallelism_stabilizer(u, aut_u, flat.parallelism).order());
  CHECK(stab.order() == 192);
  for (const auto& s : stab.generators()) CHECK(flat.structure.block_image(s, flat.infinity_block) == flat.infinity_block);

  const auto nat = closure(u, natural_parallelism(g, u));
  const auto aut_nat = automorphism_group(nat.structure);
  CHECK(aut_nat.order() == classical_unital_order(3, 1));
  const auto nat_stab = block_stabilizer(aut_nat, nat.structure, nat.infinity_block);
  CHECK(nat_stab.order() < aut_nat.order());
  CHECK(nat_stab.order() == parallelism_stabilizer(u, aut_u, nat.parallelism).order());
}

TEST_CASE("extensions to the closure are automorphisms") {
  const auto g = group_of(3);
  const auto u = affine_unital(g);
  const auto nat = closure(u, natural_parallelism(g, u));
  for (ElementId h = 0; h < g.size(); h += 3) {
    const auto ext = extend_to_closure(u, nat, right_multiplication(g, h));
    REQUIRE(ext);
    CHECK(nat.structure.is_automorphism(*ext));
  }
}

TEST_CASE("translations at the new points") {
  const auto g = group_of(3);
  const auto u = affine_unital(g);
  const auto nat = closure(u, natural_parallelism(g, u));
  const auto aut = automorphism_group(nat.structure);
  for (auto t : nat.new_points) {
    const auto tr = translations_with_center(aut, nat.structure, t);
    CHECK(tr.group.order() == 3);
    CHECK(tr.semiregular);
    CHECK(tr.is_center);
    for (const auto& s : tr.group.generators()) {
      CHECK(s[t] == t);
      for (auto b : nat.structure.blocks_through(t)) CHECK(nat.structure.block_image(s, b) == b);
    }
  }
}

TEST_CASE("R-invariant parallelisms of the q=3 unital are flat and natural") {
  const auto g = group_of(3);
  const auto u = affine_unital(g);
  const auto r = r_invariant_parallelisms(g, u);
  CHECK(r.complete);
  CHECK(r.enumerated == 26);
  auto expected = std::vector<Parallelism>{flat_parallelism(g, u), natural_parallelism(g, u)};
  for (auto& p : expected) p.normalize();
  std::sort(expected.begin(), expected.end());
  CHECK(r.parallelisms == expected);
}

TEST_CASE("subgroup orbit representatives") {
  CHECK(subgroup_orbit_representatives(group_of(3)).size() == 1);
  const auto reps5 = subgroup_orbit_representatives(group_of(5));
  CHECK(reps5.size() == 1);
  const auto reps7 = subgroup_orbit_representatives(group_of(7));
  CHECK(reps7.size() == 2);
}

TEST_CASE("classification counts") {
  const std::vector<std::pair<std::uint32_t, std::size_t>> expected{{2, 1}, {3, 1}, {4, 2}};
  for (auto [q, n] : expected) {
    const auto g = group_of(q);
    const auto c = classify_affine_unitals(g);
    CAPTURE(q);
    CHECK(c.classes.size() == n);
    for (const auto& cls : c.classes) {
      CHECK(verify_affine_axioms(cls.structure).all());
      CHECK(automorphism_group(cls.structure).order() == cls.aut_order);
    }
    for (std::size_t i = 0; i + 1 < c.classes.size(); ++i)
      CHECK_FALSE(are_isomorphic(c.classes[i].structure, c.classes[i + 1].structure));
  }
  const auto c4 = classify_affine_unitals(group_of(4));
  CHECK(c4.collections == 6);
  CHECK(c4.orbits == 2);
  std::vector<std::uint64_t> orders;
  for (const auto& cls : c4.classes) orders.push_back(cls.aut_order);
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{240, 1200});
}

TEST_CASE("check battery at q=3") {
  const auto report = run_checks(group_of(3));
  CHECK(report.ok());
  REQUIRE(report.classes.size() == 1);
  const auto& c = report.classes.front();
  CHECK(c.classical);
  CHECK(c.flat.fixes_infinity());
  CHECK(c.flat.infinity_stabilizer == 192);
  CHECK(c.natural.aut_order == 12096);
  CHECK(c.translations.size() == 4);
  CHECK(c.max_translation_order == 3);
  CHECK_THROWS(run_checks(group_of(2)));
}
