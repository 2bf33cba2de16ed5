#pragma once

// Permutations and permutation groups with a deterministic Schreier-Sims
// stabilizer chain.
//
// Permutations act on the right: (x)(ab) = ((x)a)b. compose(a, b) is "a then b".

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace unital {

class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  // Parses "(1,16,23,10)(2,11)" style cycle notation with the given index offset
  // (offset 1 for one-based cycles).
  static Permutation from_cycles(std::size_t degree, const std::string& cycles,
                                 std::uint32_t offset = 1);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // this then other
  Permutation then(const Permutation& other) const;
  Permutation pow(std::int64_t k) const;
  std::uint64_t order() const;
  std::size_t first_moved_point() const;  // degree() if identity

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  std::vector<std::uint32_t> images_;
};

inline Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }

// Conjugate a^b = b^-1 a b.
Permutation conjugate(const Permutation& a, const Permutation& b);
// Commutator [a,b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

// Union-find orbits of the group generated by gens; returns for each point the
// smallest point of its orbit.
std::vector<std::uint32_t> orbit_representatives(std::size_t degree,
                                                 std::span<const Permutation> gens);

class PermGroup {
public:
  PermGroup() = default;
  explicit PermGroup(std::size_t degree, std::vector<Permutation> gens = {},
                     std::vector<std::uint32_t> base_prefix = {});

  // Group generated by a possibly large candidate list; candidates already in
  // the running subgroup are skipped, so generators() stays small.
  static PermGroup generated_by(std::size_t degree, std::span<const Permutation> candidates);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<std::uint32_t> base() const;

  // Throws std::overflow_error when the order does not fit in 64 bits.
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return levels_.empty(); }

  std::vector<std::uint32_t> orbit(std::uint32_t point) const;
  std::vector<std::vector<std::uint32_t>> orbits() const;
  bool is_transitive() const;

  // Every element, ordered; refuses groups larger than limit.
  std::vector<Permutation> elements(std::uint64_t limit = 1'000'000) const;

  PermGroup point_stabilizer(std::uint32_t point) const;
  PermGroup pointwise_stabilizer(std::span<const std::uint32_t> points) const;

  // Stabilizer of one object under an induced action on `num_objects`
  // objects. act(g, o) returns the image of object o under g.
  using Action = std::function<std::uint32_t(const Permutation&, std::uint32_t)>;
  PermGroup object_stabilizer(std::uint32_t num_objects, const Action& act,
                              std::uint32_t object) const;
  std::vector<std::uint32_t> object_orbit(std::uint32_t num_objects, const Action& act,
                                          std::uint32_t object) const;

  PermGroup derived_subgroup() const;
  bool is_solvable() const;
  bool is_subgroup_of(const PermGroup& other) const;

  // Multiset of element orders, as order -> count.
  std::map<std::uint64_t, std::uint64_t> element_order_profile() const;

private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> position;     // point -> index in orbit, -1 if absent
    std::vector<Permutation> transversal;   // base -> orbit[i]
  };

  void build(std::vector<std::uint32_t> base_prefix);
  void rebuild_level(std::size_t i);
  // Sifts g through levels from `start`; returns residue and the level where it stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const;
  std::vector<Permutation> level_generators(std::size_t i) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

// Closure of generator set under the group: normal closure of `gens` in `group`.
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& gens);

}  // namespace unital
