#include "unital/sl2.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace unital {

std::string to_string(SubgroupType t) {
  switch (t) {
    case SubgroupType::cyclic: return "cyclic";
    case SubgroupType::generalized_quaternion: return "generalized_quaternion";
    case SubgroupType::exceptional: return "exceptional";
  }
  return "unknown";
}

bool Subgroup::contains(ElementId x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

SL2::SL2(const FieldSpec& spec, std::uint32_t bound) : field_(spec) {
  const std::uint32_t q = field_.q();
  if (q > bound) throw FieldError("q = " + std::to_string(q) + " exceeds SL(2,q) bound");
  lookup_.assign(std::size_t(q) * q * q * q, -1);
  const auto one = field_.one();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          const Mat2 m{{a}, {b}, {c}, {d}};
          if (det(m) != one) continue;
          lookup_[key(m)] = static_cast<std::int32_t>(elements_.size());
          elements_.push_back(m);
        }
  identity_ = index_of(Mat2{one, field_.zero(), field_.zero(), one});
  const std::uint32_t n = size();
  inverse_.resize(n);
  for (ElementId x = 0; x < n; ++x) inverse_[x] = index_of(mat_inv(elements_[x]));
  if (n <= 1400) {
    table_.resize(std::size_t(n) * n);
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        table_[std::size_t(x) * n + y] = index_of(mat_mul(elements_[x], elements_[y]));
  }
}

std::uint32_t SL2::key(const Mat2& m) const {
  const std::uint32_t q = field_.q();
  return ((m.a.index * q + m.b.index) * q + m.c.index) * q + m.d.index;
}

std::optional<ElementId> SL2::find(const Mat2& m) const {
  const std::int32_t i = lookup_[key(m)];
  if (i < 0) return std::nullopt;
  return static_cast<ElementId>(i);
}

ElementId SL2::index_of(const Mat2& m) const {
  auto i = find(m);
  if (!i) throw std::invalid_argument("matrix is not in SL(2,q)");
  return *i;
}

ElementId SL2::mul(ElementId x, ElementId y) const {
  if (!table_.empty()) return table_[std::size_t(x) * size() + y];
  return index_of(mat_mul(elements_[x], elements_[y]));
}

ElementId SL2::pow(ElementId x, std::uint64_t k) const {
  ElementId result = identity_, base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t SL2::element_order(ElementId x) const {
  std::uint32_t k = 1;
  for (ElementId y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

Mat2 SL2::mat_mul(const Mat2& x, const Mat2& y) const {
  const auto& f = field_;
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

FieldElement SL2::det(const Mat2& m) const {
  return field_.sub(field_.mul(m.a, m.d), field_.mul(m.b, m.c));
}

Mat2 SL2::mat_inv(const Mat2& m) const {
  const auto& f = field_;
  const auto di = f.inv(det(m));
  return {f.mul(m.d, di), f.mul(f.neg(m.b), di), f.mul(f.neg(m.c), di), f.mul(m.a, di)};
}

Mat2 SL2::frobenius(const Mat2& m, std::uint32_t k) const {
  const auto& f = field_;
  return {f.frobenius(m.a, k), f.frobenius(m.b, k), f.frobenius(m.c, k), f.frobenius(m.d, k)};
}

std::string SL2::format(ElementId x) const {
  const auto& m = elements_[x];
  std::ostringstream os;
  os << "(" << m.a.index << " " << m.b.index << "; " << m.c.index << " " << m.d.index << ")";
  return os.str();
}

// --------------------------------------------------------------------------
// Subgroups
// --------------------------------------------------------------------------

std::optional<std::vector<ElementId>> generate_subgroup(const SL2& g,
                                                        const std::vector<ElementId>& gens,
                                                        std::size_t max_size) {
  std::vector<bool> seen(g.size(), false);
  std::vector<ElementId> out{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto s : gens) {
      const auto y = g.mul(out[k], s);
      if (seen[y]) continue;
      seen[y] = true;
      out.push_back(y);
      if (out.size() > max_size) return std::nullopt;
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const SL2& g, const std::vector<ElementId>& elements) {
  std::vector<bool> in(g.size(), false);
  for (auto x : elements) in[x] = true;
  if (!in[g.identity()]) return false;
  for (auto x : elements) {
    if (!in[g.inv(x)]) return false;
    for (auto y : elements)
      if (!in[g.mul(x, y)]) return false;
  }
  return true;
}

std::vector<Subgroup> sylow_subgroups(const SL2& g) {
  const auto& f = g.field();
  std::vector<ElementId> unipotent;
  for (auto b : f.elements()) unipotent.push_back(g.index_of({f.one(), b, f.zero(), f.one()}));
  std::sort(unipotent.begin(), unipotent.end());
  std::set<std::vector<ElementId>> found;
  for (ElementId h = 0; h < g.size(); ++h) {
    std::vector<ElementId> conj;
    for (auto t : unipotent) conj.push_back(g.conj(t, h));
    std::sort(conj.begin(), conj.end());
    found.insert(std::move(conj));
  }
  std::vector<Subgroup> out;
  for (const auto& s : found) out.push_back(Subgroup{s, SubgroupKind::sylow_p});
  return out;
}

SubgroupType classify_order_qplus1(const SL2& g, const Subgroup& s) {
  const std::uint32_t n = g.q() + 1;
  bool has_full = false, has_half = false;
  for (auto x : s.elements) {
    const auto o = g.element_order(x);
    has_full = has_full || o == n;
    has_half = has_half || (n % 2 == 0 && o == n / 2);
  }
  if (has_full) return SubgroupType::cyclic;
  std::size_t involutions = 0;
  for (auto x : s.elements) involutions += g.element_order(x) == 2;
  if (has_half && involutions == 1) return SubgroupType::generalized_quaternion;
  return SubgroupType::exceptional;
}

std::vector<ClassifiedSubgroup> subgroups_order_qplus1(const SL2& g) {
  const std::uint32_t n = g.q() + 1;
  // Cyclic subgroups with order dividing q+1, one generator each.
  std::map<std::vector<ElementId>, ElementId> cyclic;
  for (ElementId x = 0; x < g.size(); ++x) {
    if (n % g.element_order(x) != 0) continue;
    auto c = generate_subgroup(g, {x});
    cyclic.emplace(std::move(*c), x);
  }
  std::set<std::vector<ElementId>> found;
  for (const auto& [elts, x] : cyclic)
    if (elts.size() == n) found.insert(elts);
  for (auto it = cyclic.begin(); it != cyclic.end(); ++it)
    for (auto jt = std::next(it); jt != cyclic.end(); ++jt) {
      if (it->first.size() == 1 || jt->first.size() == 1) continue;
      auto s = generate_subgroup(g, {it->second, jt->second}, n);
      if (s && s->size() == n) found.insert(std::move(*s));
    }
  std::vector<ClassifiedSubgroup> out;
  for (const auto& elts : found) {
    Subgroup s{elts, SubgroupKind::order_q_plus_1};
    out.push_back({s, classify_order_qplus1(g, s)});
  }
  return out;
}

Subgroup cyclic_subgroup_C(const SL2& g) {
  for (ElementId x = 0; x < g.size(); ++x)
    if (g.element_order(x) == g.q() + 1)
      return Subgroup{*generate_subgroup(g, {x}), SubgroupKind::order_q_plus_1};
  throw std::logic_error("SL(2,q) has no element of order q+1");
}

// --------------------------------------------------------------------------
// Automorphisms
// --------------------------------------------------------------------------

Mat2 normalize_projective(const SL2& g, const Mat2& m) {
  const auto& f = g.field();
  FieldElement lead = m.a.index ? m.a : m.b.index ? m.b : m.c.index ? m.c : m.d;
  const auto s = f.inv(lead);
  return {f.mul(m.a, s), f.mul(m.b, s), f.mul(m.c, s), f.mul(m.d, s)};
}

ElementId apply(const SL2& g, const AutomorphismAction& alpha, ElementId x) {
  const Mat2 m = g.mat_mul(g.mat_inv(alpha.matrix), g.mat_mul(g.matrix(x), alpha.matrix));
  return g.index_of(g.frobenius(m, alpha.frobenius));
}

Permutation action_permutation(const SL2& g, const AutomorphismAction& alpha) {
  std::vector<std::uint32_t> img(g.size());
  const Mat2 ainv = g.mat_inv(alpha.matrix);
  for (ElementId x = 0; x < g.size(); ++x)
    img[x] = g.index_of(
        g.frobenius(g.mat_mul(ainv, g.mat_mul(g.matrix(x), alpha.matrix)), alpha.frobenius));
  return Permutation(std::move(img));
}

AutomorphismAction compose(const SL2& g, const AutomorphismAction& alpha,
                           const AutomorphismAction& beta) {
  const std::uint32_t e = g.e();
  const std::uint32_t back = (e - alpha.frobenius) % e;
  const Mat2 m = g.mat_mul(alpha.matrix, g.frobenius(beta.matrix, back));
  return {normalize_projective(g, m), (alpha.frobenius + beta.frobenius) % e};
}

std::vector<AutomorphismAction> all_automorphism_actions(const SL2& g) {
  const auto& f = g.field();
  std::vector<AutomorphismAction> out;
  for (std::uint32_t k = 0; k < g.e(); ++k)
    for (std::uint32_t a = 0; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b)
        for (std::uint32_t c = 0; c < f.q(); ++c)
          for (std::uint32_t d = 0; d < f.q(); ++d) {
            const Mat2 m{{a}, {b}, {c}, {d}};
            if (g.det(m) == f.zero() || normalize_projective(g, m) != m) continue;
            out.push_back({m, k});
          }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AutomorphismAction> AutomorphismGroupA::decode(const SL2& g,
                                                             const Permutation& perm) const {
  // SL(2,q) is generated by the two unipotent elements below, so their images
  // determine the automorphism.
  const auto& f = g.field();
  const ElementId u = g.index_of({f.one(), f.one(), f.zero(), f.one()});
  const ElementId l = g.index_of({f.one(), f.zero(), f.one(), f.one()});
  std::vector<ElementId> gens{u, l};
  for (auto t : f.elements())
    if (t != f.zero()) gens.push_back(g.index_of({f.one(), t, f.zero(), f.one()}));
  for (const auto& alpha : all_automorphism_actions(g)) {
    bool match = true;
    for (auto x : gens) match = match && apply(g, alpha, x) == perm[x];
    if (match && action_permutation(g, alpha) == perm) return alpha;
  }
  return std::nullopt;
}

AutomorphismGroupA automorphism_group_A(const SL2& g) {
  const auto& f = g.field();
  const auto w = f.primitive_element();
  std::vector<AutomorphismAction> gens{
      {{w, f.zero(), f.zero(), f.one()}, 0},
      {{f.one(), f.one(), f.zero(), f.one()}, 0},
      {{f.zero(), f.one(), f.one(), f.zero()}, 0},
  };
  if (g.e() > 1) gens.push_back({{f.one(), f.zero(), f.zero(), f.one()}, 1});
  std::vector<Permutation> perms;
  for (auto& a : gens) {
    a.matrix = normalize_projective(g, a.matrix);
    perms.push_back(action_permutation(g, a));
  }
  return {PermGroup(g.size(), std::move(perms))};
}

SubgroupStabilizer stabilizer_in_A(const SL2& g, const Subgroup& s) {
  if (s.elements.size() != g.q() + 1 || !is_subgroup(g, s.elements))
    throw std::invalid_argument("stabilizer_in_A needs a subgroup of order q+1");
  SubgroupStabilizer out;
  std::vector<Permutation> perms;
  for (const auto& alpha : all_automorphism_actions(g)) {
    bool fixes = true;
    for (auto x : s.elements) fixes = fixes && s.contains(apply(g, alpha, x));
    if (!fixes) continue;
    out.actions.push_back(alpha);
    perms.push_back(action_permutation(g, alpha));
  }
  out.group = PermGroup::generated_by(g.size(), perms);
  return out;
}

Permutation inversion_permutation(const SL2& g) {
  std::vector<std::uint32_t> img(g.size());
  for (ElementId x = 0; x < g.size(); ++x) img[x] = g.inv(x);
  return Permutation(std::move(img));
}

Permutation right_multiplication(const SL2& g, ElementId h) {
  std::vector<std::uint32_t> img(g.size());
  for (ElementId x = 0; x < g.size(); ++x) img[x] = g.mul(x, h);
  return Permutation(std::move(img));
}

}  // namespace unital
