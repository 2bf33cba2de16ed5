#include <doctest.h>

#include <set>

#include "unital/design.hpp"

using namespace unital;

namespace {

SL2 group_of(std::uint32_t q) {
  const auto pe = prime_power(q);
  REQUIRE(pe);
  return SL2(make_field(pe->first, pe->second));
}

BlockCollection first_collection(const SL2& g) {
  SearchOptions opts;
  opts.limit = 1;
  const auto found = search_block_collections(g, cyclic_subgroup_C(g), opts);
  REQUIRE(found.size() == 1);
  return found.front();
}

}  // namespace

TEST_CASE("collection size is q-2") {
  for (std::uint32_t q = 2; q <= 9; ++q) {
    const auto e = expected_collection_size(q);
    REQUIRE(e);
    CHECK(*e == q - 2);
  }
}

TEST_CASE("condition Q counts distinct quotients") {
  const auto g = group_of(4);
  const auto dc = first_collection(g);
  for (const auto& d : dc.sets) {
    const auto r = check_condition_Q(g, d);
    CHECK(r.ok);
    CHECK(r.distinct_quotients == 20);
    CHECK(quotient_multiset(g, d).size() == 20);
  }
  // A subgroup repeats quotients.
  const auto c = cyclic_subgroup_C(g);
  const auto bad = check_condition_Q(g, c.elements);
  CHECK_FALSE(bad.ok);
  CHECK(bad.collision);
  CHECK_THROWS_AS(check_condition_Q(g, {1, 2}), DesignError);
}

TEST_CASE("condition P detects overlaps and gaps") {
  const auto g = group_of(4);
  const auto s = cyclic_subgroup_C(g);
  const auto dc = first_collection(g);
  CHECK(check_condition_P(g, s, dc).ok);
  BlockCollection shorter{{dc.sets.front()}};
  const auto gaps = check_condition_P(g, s, shorter);
  CHECK_FALSE(gaps.ok);
  CHECK(gaps.gaps.size() == 20);
  BlockCollection doubled{{dc.sets.front(), dc.sets.front()}};
  const auto over = check_condition_P(g, s, doubled);
  CHECK_FALSE(over.ok);
  CHECK(over.overlaps.size() == 20);
}

TEST_CASE("built affine unitals have the predicted block counts and axioms") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto g = group_of(q);
    const auto s = cyclic_subgroup_C(g);
    const auto u = build_affine_unital(g, s, first_collection(g));
    CHECK(u.num_points() == q * q * q - q);
    CHECK(u.num_short() == (q + 1) * (q * q - 1));
    CHECK(u.num_long() == q * (q - 1) * (q * q - q - 1));
    CHECK(u.order() == q);
    CHECK(verify_affine_axioms(u).all());
    for (const auto& pi : {flat_parallelism(g, u), natural_parallelism(g, u)}) {
      CHECK(is_parallelism(u, pi));
      const auto cu = closure(u, pi);
      CHECK(verify_unital(cu.structure).all());
    }
    if (q >= 3) {
      auto f = flat_parallelism(g, u), n = natural_parallelism(g, u);
      f.normalize();
      n.normalize();
      CHECK(f != n);
    }
  }
}

TEST_CASE("flat and natural labels recover the Sylow subgroup") {
  const auto g = group_of(3);
  const auto u = short_block_geometry(g);
  const auto syl = sylow_subgroups(g);
  std::set<std::vector<ElementId>> sylow_sets;
  for (const auto& t : syl) sylow_sets.insert(t.elements);
  for (const auto& b : u.blocks()) {
    CHECK(sylow_sets.contains(flat_label(g, b)));
    CHECK(sylow_sets.contains(natural_label(g, b)));
  }
}

TEST_CASE("search finds each collection once") {
  const auto g = group_of(4);
  const auto s = cyclic_subgroup_C(g);
  SearchOptions serial;
  serial.parallel = false;
  const auto a = search_block_collections(g, s, serial);
  const auto b = search_block_collections(g, s);
  CHECK(a == b);
  CHECK(a.size() == 6);
  std::set<std::vector<std::vector<ElementId>>> keys;
  for (const auto& dc : a) {
    CHECK(check_condition_P(g, s, dc).ok);
    CHECK(keys.insert(collection_key(g, dc)).second);
  }
  const auto g2 = group_of(2);
  const auto two = search_block_collections(g2, cyclic_subgroup_C(g2));
  REQUIRE(two.size() == 1);
  CHECK(two.front().sets.empty());
  CHECK_THROWS_AS(search_block_collections(group_of(7), cyclic_subgroup_C(group_of(7))), DesignError);
}

TEST_CASE("the order-3 example with two parallelisms") {
  const auto f = two_parallelism_example();
  CHECK(f.structure.num_points() == 24);
  CHECK(f.structure.num_long() == 30);
  CHECK(f.structure.num_short() == 32);
  CHECK(verify_affine_axioms(f.structure).all());
  CHECK(is_parallelism(f.structure, f.pi));
  CHECK(is_parallelism(f.structure, f.pi_prime));
  CHECK(f.pi != f.pi_prime);
  const auto a = closure(f.structure, f.pi, f.pi_point_of_class);
  const auto b = closure(f.structure, f.pi_prime, f.pi_prime_point_of_class);
  CHECK(verify_unital(a.structure).all());
  CHECK(verify_unital(b.structure).all());
  CHECK(b.structure.relabel(f.isomorphism).canonical_sort().first ==
        a.structure.canonical_sort().first);
}
