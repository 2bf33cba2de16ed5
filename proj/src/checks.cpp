#include "unital/checks.hpp"

#include <algorithm>

namespace unital {

std::uint64_t classical_unital_order(std::uint32_t q, std::uint32_t e) {
  const std::uint64_t qq = q;
  return 2ull * e * qq * qq * qq * (qq * qq * qq + 1) * (qq * qq - 1);
}

namespace {

struct ClosureData {
  ClosedUnital closed;
  PermGroup aut;
};

ClosureData check_closure(const IncidenceStructure& u, const PermGroup& aut_u, const Parallelism& pi,
                          const CanonOptions& canon, ClosureCheck& out) {
  auto cu = closure(u, pi);
  auto aut = automorphism_group(cu.structure, {}, canon);
  out.aut_order = aut.order();
  out.infinity_stabilizer = block_stabilizer(aut, cu.structure, cu.infinity_block).order();
  out.parallelism_stabilizer = parallelism_stabilizer(u, aut_u, pi).order();
  return {std::move(cu), std::move(aut)};
}

// Right multiplications by the Sylow subgroup whose left cosets form the
// class of new point t, extended to the closure.
PermGroup r_t(const SL2& g, const IncidenceStructure& u, const ClosedUnital& cu, std::uint32_t t) {
  const auto i = static_cast<std::size_t>(
      std::find(cu.new_points.begin(), cu.new_points.end(), t) - cu.new_points.begin());
  std::vector<ElementId> sylow;
  for (auto j : cu.parallelism.classes[i]) {
    const auto& b = u.short_block(j);
    if (std::binary_search(b.begin(), b.end(), g.identity())) sylow = b;
  }
  std::vector<Permutation> gens;
  for (auto x : sylow)
    if (auto ext = extend_to_closure(u, cu, right_multiplication(g, x))) gens.push_back(*ext);
  return PermGroup(cu.structure.num_points(), std::move(gens));
}

}  // namespace

CheckReport run_checks(const SL2& g, const CheckOptions& opts) {
  if (g.q() < 3) throw std::invalid_argument("the checks need q >= 3");
  CheckReport report;
  report.q = g.q();
  report.e = g.e();
  const auto& canon = opts.classify.canon;
  const auto classification = classify_affine_unitals(g, opts.classify);
  std::size_t classical = 0;

  for (const auto& cls : classification.classes) {
    ClassCheck c;
    c.digest = cls.certificate.digest();
    c.subgroup_type = cls.subgroup.type;
    const auto& u = cls.structure;
    const auto fail = [&](const std::string& what) {
      report.failures.push_back("class " + c.digest + ": " + what);
    };

    const auto aut_u = automorphism_group(u, {}, canon);
    c.aut_order = aut_u.order();
    const auto bound = stabilizer_in_A(g, cls.subgroup.group).group.order() * g.size();
    c.order_divides_bound = bound % c.aut_order == 0;
    if (!c.order_divides_bound) fail("|Aut| does not divide |stabilizer of S| * |SL(2,q)|");
    c.generators_factor = std::all_of(aut_u.generators().begin(), aut_u.generators().end(),
                                      [&](const Permutation& psi) { return factor_automorphism(g, psi).has_value(); });
    if (!c.generators_factor) fail("an automorphism does not factor");

    const auto flat = flat_parallelism(g, u);
    const auto natural = natural_parallelism(g, u);
    check_closure(u, aut_u, flat, canon, c.flat);
    const auto nat = check_closure(u, aut_u, natural, canon, c.natural);
    if (!c.flat.fixes_infinity()) fail("an automorphism of the flat closure moves [infinity]");
    if (c.flat.infinity_stabilizer != c.flat.parallelism_stabilizer)
      fail("flat closure: [infinity]-stabilizer differs from the flat-preserving automorphisms");
    if (c.natural.infinity_stabilizer != c.natural.parallelism_stabilizer)
      fail("natural closure: [infinity]-stabilizer differs from the natural-preserving automorphisms");
    c.classical = !c.natural.fixes_infinity();
    if (c.classical) {
      ++classical;
      if (c.natural.aut_order != classical_unital_order(g.q(), g.e()))
        fail("natural closure moves [infinity] but is not classical");
    }

    const auto& cs = nat.closed.structure;
    for (auto t : nat.closed.new_points) {
      const auto tr = translations_with_center(nat.aut, cs, t);
      const auto rt = r_t(g, u, nat.closed, t);
      TranslationCheck tc{t, tr.group.order(), false};
      tc.equals_r_t = rt.order() == tc.order && rt.is_subgroup_of(tr.group);
      if (tc.order != g.q() || !tc.equals_r_t)
        fail("point " + std::to_string(t) + " of [infinity] is not a translation center with group R_T");
      c.translations.push_back(tc);
    }
    c.translations_semiregular = true;
    for (std::uint32_t x = 0; x < cs.num_points(); ++x) {
      const auto tr = translations_with_center(nat.aut, cs, x);
      c.translations_semiregular = c.translations_semiregular && tr.semiregular;
      c.max_translation_order = std::max(c.max_translation_order, tr.group.order());
    }
    if (!c.translations_semiregular) fail("a translation group is not semiregular");
    if (c.max_translation_order > g.q()) fail("a translation group is larger than q");

    if (opts.enumerate_parallelisms) {
      const auto r = r_invariant_parallelisms(g, u, opts.parallelism_cap);
      RInvariantCheck rc;
      rc.enumerated = r.enumerated;
      rc.complete = r.complete;
      rc.r_invariant = r.parallelisms.size();
      auto expected = std::vector<Parallelism>{flat, natural};
      for (auto& p : expected) p.normalize();
      std::sort(expected.begin(), expected.end());
      rc.equals_flat_and_natural = r.parallelisms == expected;
      if (!rc.complete) fail("parallelism enumeration hit the cap");
      else if (!rc.equals_flat_and_natural) fail("R-invariant parallelisms are not exactly flat and natural");
      c.r_invariant = rc;
    }
    report.classes.push_back(std::move(c));
  }
  if (classical > 1) report.failures.push_back("more than one class has a classical natural closure");
  return report;
}

}  // namespace unital
