#include "unital/gf.hpp"

#include <algorithm>

namespace unital {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint32_t k = p - 2;
  while (k) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

// Calls fn on every monic polynomial of degree d; returns early when fn does.
template <typename Fn>
bool for_each_monic(std::uint32_t d, std::uint32_t p, Fn&& fn) {
  Poly poly(d + 1, 0);
  poly[d] = 1;
  while (true) {
    if (fn(poly)) return true;
    std::size_t i = 0;
    while (i < d && ++poly[i] == p) poly[i++] = 0;
    if (i == d) return false;
  }
}

}  // namespace

std::uint32_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  return static_cast<std::uint32_t>(q);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  // normalize to monic
  const std::uint32_t lead_inv = inverse_mod(f.back(), p);
  for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t(c) * lead_inv % p);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const bool divisible =
        for_each_monic(d, p, [&](const Poly& g) { return poly_mod(f, g, p).empty(); });
    if (divisible) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, e);
}

namespace {

void check_parameters(std::uint32_t p, std::uint32_t e, std::uint32_t bound) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw FieldError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > bound) throw FieldError("field order exceeds bound " + std::to_string(bound));
  }
}

}  // namespace

FieldSpec make_field(std::uint32_t p, std::uint32_t e, std::uint32_t bound) {
  check_parameters(p, e, bound);
  // Enumerate lower coefficients (c0, ..., c_{e-1}) lexicographically with c0
  // most significant.
  Poly poly(e + 1, 0);
  poly[e] = 1;
  while (true) {
    if (is_irreducible(poly, p)) return FieldSpec{p, e, poly};
    std::int64_t i = static_cast<std::int64_t>(e) - 1;
    while (i >= 0 && ++poly[i] == p) poly[i--] = 0;
    if (i < 0) break;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable for prime p
}

FieldSpec make_field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus,
                     std::uint32_t bound) {
  check_parameters(p, e, bound);
  if (modulus.size() != e + 1 || modulus.back() != 1)
    throw FieldError("modulus must be monic of degree e");
  for (auto c : modulus)
    if (c >= p) throw FieldError("modulus coefficient out of range");
  if (!is_irreducible(modulus, p)) throw FieldError("modulus is reducible");
  return FieldSpec{p, e, std::move(modulus)};
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.order()) {
  if (spec_.modulus.size() != spec_.e + 1) throw FieldError("malformed field spec");
  pow_p_.resize(spec_.e);
  std::uint32_t pw = 1;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    pow_p_[i] = pw;
    pw *= spec_.p;
  }
  if (q_ <= 256) {
    add_.resize(std::size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0;
        for (std::uint32_t i = 0; i < spec_.e; ++i) {
          const std::uint32_t da = a / pow_p_[i] % spec_.p, db = b / pow_p_[i] % spec_.p;
          r += (da + db) % spec_.p * pow_p_[i];
        }
        add_[std::size_t(a) * q_ + b] = r;
      }
  }
  // Primitive element: smallest index whose powers reach all nonzero elements.
  log_.assign(q_, 0);
  exp_.assign(q_, 0);  // exp_[q-1] = 1 wraps around, so exp_[1] exists for q = 2
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1, k = 0;
    do {
      exp_[k++] = x;
      x = mul_poly({x}, {g}).index;
    } while (x != 1 && k < q_ - 1);
    if (x == 1 && k == q_ - 1) break;
  }
  exp_[q_ - 1] = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = k;
}

FieldElement GaloisField::element(std::uint32_t index) const {
  if (index >= q_) throw FieldError("element index out of range");
  return {index};
}

FieldElement GaloisField::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != spec_.e) throw FieldError("coefficient vector has wrong length");
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    if (coeffs[i] >= spec_.p) throw FieldError("coefficient out of range");
    r += coeffs[i] * pow_p_[i];
  }
  return {r};
}

std::vector<std::uint32_t> GaloisField::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> c(spec_.e);
  for (std::uint32_t i = 0; i < spec_.e; ++i) c[i] = a.index / pow_p_[i] % spec_.p;
  return c;
}

std::vector<FieldElement> GaloisField::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
  if (!add_.empty()) return {add_[std::size_t(a.index) * q_ + b.index]};
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    const std::uint32_t da = a.index / pow_p_[i] % spec_.p, db = b.index / pow_p_[i] % spec_.p;
    r += (da + db) % spec_.p * pow_p_[i];
  }
  return {r};
}

FieldElement GaloisField::neg(FieldElement a) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    const std::uint32_t da = a.index / pow_p_[i] % spec_.p;
    r += (spec_.p - da) % spec_.p * pow_p_[i];
  }
  return {r};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul_poly(FieldElement a, FieldElement b) const {
  const auto ca = coeffs(a), cb = coeffs(b);
  Poly prod(2 * spec_.e, 0);
  for (std::uint32_t i = 0; i < spec_.e; ++i)
    for (std::uint32_t j = 0; j < spec_.e; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % spec_.p;
  Poly r = poly_mod(std::move(prod), spec_.modulus, spec_.p);
  r.resize(spec_.e, 0);
  return from_coeffs(r);
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  if (a.index == 0 || b.index == 0) return {0};
  return {exp_[(std::uint64_t(log_[a.index]) + log_[b.index]) % (q_ - 1)]};
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.index == 0) throw FieldError("inverse of zero");
  return {exp_[(q_ - 1 - log_[a.index]) % (q_ - 1)]};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.index == 0) return zero();
  return {exp_[std::uint64_t(log_[a.index]) * (k % (q_ - 1)) % (q_ - 1)]};
}

FieldElement GaloisField::frobenius(FieldElement a, std::uint32_t k) const {
  if (k >= spec_.e) throw FieldError("frobenius exponent out of range");
  return pow(a, pow_p_[k]);
}

std::uint32_t GaloisField::multiplicative_order(FieldElement a) const {
  if (a.index == 0) throw FieldError("zero has no multiplicative order");
  const std::uint32_t n = q_ - 1;
  const std::uint32_t l = log_[a.index];
  std::uint32_t x = l, y = n;
  while (y) {
    const std::uint32_t t = x % y;
    x = y;
    y = t;
  }
  return n / x;  // n / gcd(l, n)
}

}  // namespace unital
