#include <doctest.h>

#include <set>

#include "unital/sl2.hpp"

using namespace unital;

namespace {

SL2 group_of(std::uint32_t q) {
  const auto pe = prime_power(q);
  REQUIRE(pe);
  return SL2(make_field(pe->first, pe->second));
}

}  // namespace

TEST_CASE("SL(2,q) has (q-1)q(q+1) elements and a consistent product") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto g = group_of(q);
    CHECK(g.size() == (q - 1) * q * (q + 1));
    CHECK(g.matrix(g.identity()) == Mat2{g.field().one(), g.field().zero(), g.field().zero(), g.field().one()});
    for (ElementId x = 0; x < g.size(); x += 7) {
      CHECK(g.mul(x, g.inv(x)) == g.identity());
      CHECK(g.det(g.matrix(x)) == g.field().one());
      for (ElementId y = 0; y < g.size(); y += 11) {
        CHECK(g.matrix(g.mul(x, y)) == g.mat_mul(g.matrix(x), g.matrix(y)));
        for (ElementId z = 0; z < g.size(); z += 13)
          CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      }
    }
  }
}

TEST_CASE("elements are ordered by their entry indices") {
  const auto g = group_of(3);
  for (ElementId x = 1; x < g.size(); ++x) {
    const auto& a = g.matrix(x - 1);
    const auto& b = g.matrix(x);
    CHECK(std::tuple(a.a.index, a.b.index, a.c.index, a.d.index) <
          std::tuple(b.a.index, b.b.index, b.c.index, b.d.index));
  }
  CHECK_THROWS(g.index_of(Mat2{g.field().one(), g.field().one(), g.field().one(), g.field().one()}));
}

TEST_CASE("Sylow p-subgroups: q+1 of order q meeting trivially") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto g = group_of(q);
    const auto syl = sylow_subgroups(g);
    CHECK(syl.size() == q + 1);
    std::set<ElementId> seen;
    for (const auto& t : syl) {
      CHECK(t.elements.size() == q);
      CHECK(is_subgroup(g, t.elements));
      for (auto x : t.elements)
        if (x != g.identity()) CHECK(seen.insert(x).second);
    }
    CHECK(seen.size() == (q + 1) * (q - 1));
  }
}

TEST_CASE("subgroups of order q+1 and their types") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const auto g = group_of(q);
    const auto subs = subgroups_order_qplus1(g);
    CHECK_FALSE(subs.empty());
    bool has_cyclic = false;
    for (const auto& s : subs) {
      CHECK(s.group.elements.size() == q + 1);
      CHECK(is_subgroup(g, s.group.elements));
      has_cyclic = has_cyclic || s.type == SubgroupType::cyclic;
    }
    CHECK(has_cyclic);
    const auto c = cyclic_subgroup_C(g);
    CHECK(classify_order_qplus1(g, c) == SubgroupType::cyclic);
  }
  const auto g7 = group_of(7);
  std::size_t quaternion = 0;
  for (const auto& s : subgroups_order_qplus1(g7))
    if (s.type == SubgroupType::generalized_quaternion) ++quaternion;
  CHECK(quaternion > 0);
}

TEST_CASE("semilinear actions are automorphisms and there are e|PGL(2,q)| of them") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const auto g = group_of(q);
    const auto acts = all_automorphism_actions(g);
    CHECK(acts.size() == std::size_t(g.e()) * (q - 1) * q * (q + 1));
    const auto a = automorphism_group_A(g);
    CHECK(a.group.order() == std::uint64_t(g.e()) * (q - 1) * q * (q + 1));
    for (std::size_t i = 0; i < acts.size(); i += 5) {
      const auto p = action_permutation(g, acts[i]);
      CHECK(p[g.identity()] == g.identity());
      for (ElementId x = 0; x < g.size(); x += 3)
        for (ElementId y = 0; y < g.size(); y += 5) CHECK(p[g.mul(x, y)] == g.mul(p[x], p[y]));
      CHECK(a.group.contains(p));
      const auto back = a.decode(g, p);
      REQUIRE(back);
      CHECK(action_permutation(g, *back) == p);
    }
  }
}

TEST_CASE("composition of actions matches composition of permutations") {
  const auto g = group_of(9);
  const auto acts = all_automorphism_actions(g);
  for (std::size_t i = 0; i < acts.size(); i += 97)
    for (std::size_t j = 0; j < acts.size(); j += 131) {
      const auto ab = compose(g, acts[i], acts[j]);
      CHECK(action_permutation(g, ab) == action_permutation(g, acts[i]).then(action_permutation(g, acts[j])));
    }
}

TEST_CASE("stabilizer of C has order 2e(q+1)") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    const auto g = group_of(q);
    const auto st = stabilizer_in_A(g, cyclic_subgroup_C(g));
    CHECK(st.group.order() == 2ull * g.e() * (q + 1));
    CHECK(st.actions.size() == st.group.order());
    CHECK(st.group.is_solvable());
  }
  const auto g = group_of(3);
  CHECK_THROWS(stabilizer_in_A(g, sylow_subgroups(g).front()));
}

TEST_CASE("quaternion subgroup at q=7 has a stabilizer of order 24 shaped like S4") {
  const auto g = group_of(7);
  for (const auto& s : subgroups_order_qplus1(g)) {
    if (s.type != SubgroupType::generalized_quaternion) continue;
    const auto st = stabilizer_in_A(g, s.group);
    CHECK(st.group.order() == 24);
    CHECK(st.group.element_order_profile() ==
          std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
  }
}

TEST_CASE("inversion and right multiplication") {
  const auto g = group_of(4);
  const auto inv = inversion_permutation(g);
  for (ElementId x = 0; x < g.size(); ++x) CHECK(inv[x] == g.inv(x));
  const auto r = right_multiplication(g, 5);
  for (ElementId x = 0; x < g.size(); ++x) CHECK(r[x] == g.mul(x, 5));
  CHECK(right_multiplication(g, g.identity()).is_identity());
}
