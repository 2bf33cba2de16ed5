#include "unital/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <numeric>

namespace unital {

// --------------------------------------------------------------------------
// Permutation
// --------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto y : images_) {
    if (y >= images_.size() || seen[y]) throw std::invalid_argument("not a permutation");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::string& cycles,
                                     std::uint32_t offset) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<std::uint32_t> cycle;
  std::size_t i = 0;
  auto close_cycle = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    cycle.clear();
  };
  while (i < cycles.size()) {
    const char c = cycles[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i])))
        v = v * 10 + static_cast<std::uint64_t>(cycles[i++] - '0');
      if (v < offset || v - offset >= degree)
        throw std::invalid_argument("cycle entry out of range: " + std::to_string(v));
      cycle.push_back(static_cast<std::uint32_t>(v - offset));
      continue;
    }
    if (c == ')') close_cycle();
    else if (c != '(' && c != ',' && !std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("unexpected character in cycle notation: ") + c);
    ++i;
  }
  if (!cycle.empty()) throw std::invalid_argument("unterminated cycle");
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<std::uint32_t>(x);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.degree() != degree()) throw std::invalid_argument("degree mismatch");
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[x] = other.images_[images_[x]];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result = identity(degree());
  while (n) {
    if (n & 1) result = result.then(base);
    base = base.then(base);
    n >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::first_moved_point() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return x;
  return images_.size();
}

Permutation conjugate(const Permutation& a, const Permutation& b) {
  return b.inverse().then(a).then(b);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse().then(b.inverse()).then(a).then(b);
}

std::vector<std::uint32_t> orbit_representatives(std::size_t degree,
                                                 std::span<const Permutation> gens) {
  std::vector<std::uint32_t> parent(degree);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::uint32_t x = 0; x < degree; ++x) {
      const auto a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (std::uint32_t x = 0; x < degree; ++x) parent[x] = find(x);
  return parent;
}

// --------------------------------------------------------------------------
// PermGroup
// --------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens,
                     std::vector<std::uint32_t> base_prefix)
    : degree_(degree) {
  for (auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));
  }
  build(std::move(base_prefix));
}

PermGroup PermGroup::generated_by(std::size_t degree, std::span<const Permutation> candidates) {
  PermGroup g(degree);
  for (const auto& c : candidates) {
    if (c.is_identity() || g.contains(c)) continue;
    auto gens = g.gens_;
    gens.push_back(c);
    g = PermGroup(degree, std::move(gens));
  }
  return g;
}

std::vector<std::uint32_t> PermGroup::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

std::vector<Permutation> PermGroup::level_generators(std::size_t i) const {
  std::vector<Permutation> out;
  for (const auto& s : strong_) {
    bool fixes = true;
    for (std::size_t l = 0; l < i && fixes; ++l) fixes = s[levels_[l].base] == levels_[l].base;
    if (fixes) out.push_back(s);
  }
  return out;
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  const auto gens = level_generators(i);
  lv.orbit.assign(1, lv.base);
  lv.position.assign(degree_, -1);
  lv.position[lv.base] = 0;
  lv.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const std::uint32_t x = lv.orbit[k];
    for (const auto& s : gens) {
      const std::uint32_t y = s[x];
      if (lv.position[y] >= 0) continue;
      lv.position[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(y);
      lv.transversal.push_back(lv.transversal[k].then(s));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const auto& lv = levels_[l];
    const std::int32_t pos = lv.position[g[lv.base]];
    if (pos < 0) return {std::move(g), l};
    g = g.then(lv.transversal[static_cast<std::size_t>(pos)].inverse());
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build(std::vector<std::uint32_t> base_prefix) {
  strong_ = gens_;
  levels_.clear();
  for (auto b : base_prefix) {
    if (b >= degree_) throw std::invalid_argument("base point out of range");
    levels_.push_back(Level{b, {}, {}, {}});
  }
  auto extend_base_for = [&](const Permutation& s) {
    for (const auto& lv : levels_)
      if (s[lv.base] != lv.base) return;
    levels_.push_back(Level{static_cast<std::uint32_t>(s.first_moved_point()), {}, {}, {}});
  };
  for (const auto& s : strong_) extend_base_for(s);
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

  std::int64_t i = static_cast<std::int64_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    const auto gens = level_generators(li);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
      const std::uint32_t x = levels_[li].orbit[k];
      for (const auto& s : gens) {
        const std::uint32_t y = s[x];
        const auto& lv = levels_[li];
        Permutation h = lv.transversal[k].then(s).then(
            lv.transversal[static_cast<std::size_t>(lv.position[y])].inverse());
        auto [residue, j] = sift(std::move(h), li + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size())
          levels_.push_back(Level{static_cast<std::uint32_t>(residue.first_moved_point()), {}, {}, {}});
        strong_.push_back(std::move(residue));
        for (std::size_t l = li + 1; l <= j; ++l) rebuild_level(l);
        i = static_cast<std::int64_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_) {
    const std::uint64_t s = lv.orbit.size();
    if (n > std::numeric_limits<std::uint64_t>::max() / s)
      throw std::overflow_error("group order exceeds 64 bits");
    n *= s;
  }
  return n;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, j] = sift(g, 0);
  return j == levels_.size() && residue.is_identity();
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> out{point};
  seen[point] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens_) {
      const auto y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
  const auto rep = orbit_representatives(degree_, gens_);
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_rep;
  for (std::uint32_t x = 0; x < degree_; ++x) by_rep[rep[x]].push_back(x);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [r, o] : by_rep) out.push_back(std::move(o));
  return out;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  if (order() > limit) throw std::length_error("group too large to enumerate");
  std::vector<Permutation> current{Permutation::identity(degree_)};
  // g = u_{k-1} ... u_1 u_0 with u_i from level i
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * levels_[l].transversal.size());
    for (const auto& h : current)
      for (const auto& t : levels_[l].transversal) next.push_back(h.then(t));
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

PermGroup PermGroup::point_stabilizer(std::uint32_t point) const {
  const std::uint32_t pts[] = {point};
  return pointwise_stabilizer(pts);
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const std::uint32_t> points) const {
  PermGroup chain(degree_, strong_, std::vector<std::uint32_t>(points.begin(), points.end()));
  std::vector<Permutation> gens;
  for (const auto& s : chain.strong_) {
    bool fixes = true;
    for (auto p : points) fixes = fixes && s[p] == p;
    if (fixes) gens.push_back(s);
  }
  return PermGroup(degree_, std::move(gens));
}

std::vector<std::uint32_t> PermGroup::object_orbit(std::uint32_t num_objects, const Action& act,
                                                   std::uint32_t object) const {
  std::vector<bool> seen(num_objects, false);
  std::vector<std::uint32_t> out{object};
  seen[object] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens_) {
      const auto y = act(g, out[k]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup PermGroup::object_stabilizer(std::uint32_t num_objects, const Action& act,
                                       std::uint32_t object) const {
  std::vector<std::int32_t> position(num_objects, -1);
  std::vector<std::uint32_t> orbit{object};
  std::vector<Permutation> transversal{Permutation::identity(degree_)};
  position[object] = 0;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : gens_) {
      const auto y = act(g, orbit[k]);
      if (position[y] >= 0) continue;
      position[y] = static_cast<std::int32_t>(orbit.size());
      orbit.push_back(y);
      transversal.push_back(transversal[k].then(g));
    }
  std::vector<Permutation> schreier;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : gens_) {
      const auto y = act(g, orbit[k]);
      schreier.push_back(transversal[k].then(g).then(
          transversal[static_cast<std::size_t>(position[y])].inverse()));
    }
  return generated_by(degree_, schreier);
}

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& gens) {
  PermGroup n(group.degree());
  std::vector<Permutation> pending = gens;
  while (!pending.empty()) {
    Permutation x = std::move(pending.back());
    pending.pop_back();
    if (x.is_identity() || n.contains(x)) continue;
    for (const auto& g : group.generators()) pending.push_back(conjugate(x, g));
    auto ngens = n.generators();
    ngens.push_back(std::move(x));
    n = PermGroup(group.degree(), std::move(ngens));
  }
  return n;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j) comms.push_back(commutator(gens_[i], gens_[j]));
  return normal_closure(*this, comms);
}

bool PermGroup::is_solvable() const {
  PermGroup g = *this;
  while (g.order() > 1) {
    PermGroup d = g.derived_subgroup();
    if (d.order() == g.order()) return false;
    g = std::move(d);
  }
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const auto& g) { return other.contains(g); });
}

std::map<std::uint64_t, std::uint64_t> PermGroup::element_order_profile() const {
  std::map<std::uint64_t, std::uint64_t> profile;
  for (const auto& g : elements()) ++profile[g.order()];
  return profile;
}

}  // namespace unital
