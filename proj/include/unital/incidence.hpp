#pragma once

// Incidence structures, parallelisms, closures and the axiom checks for
// affine unitals and unitals.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unital/exact_cover.hpp"
#include "unital/perm.hpp"

namespace unital {

using Block = std::vector<std::uint32_t>;  // sorted point indices

// Points 0..num_points-1. Long blocks come first, then short blocks; short
// block j is block num_long() + j. Closed unitals have no short blocks.
class IncidenceStructure {
public:
  IncidenceStructure() = default;
  IncidenceStructure(std::uint32_t num_points, std::vector<Block> long_blocks,
                     std::vector<Block> short_blocks, std::uint32_t order = 0);

  std::uint32_t num_points() const { return num_points_; }
  // Order n of the (affine) unital this describes, 0 when unknown.
  std::uint32_t order() const { return order_; }
  std::uint32_t num_blocks() const { return static_cast<std::uint32_t>(blocks_.size()); }
  std::uint32_t num_long() const { return num_long_; }
  std::uint32_t num_short() const { return num_blocks() - num_long_; }

  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::uint32_t b) const { return blocks_[b]; }
  const Block& short_block(std::uint32_t j) const { return blocks_[num_long_ + j]; }
  std::vector<Block> long_blocks() const;
  std::vector<Block> short_blocks() const;
  std::vector<std::uint32_t> short_block_indices() const;
  bool is_short(std::uint32_t b) const { return b >= num_long_; }

  const std::vector<std::uint32_t>& blocks_through(std::uint32_t point) const {
    return point_blocks_[point];
  }
  std::optional<std::uint32_t> find_block(const Block& points) const;

  // Image of block b under a point permutation; nullopt if the image is not a block.
  std::optional<std::uint32_t> block_image(const Permutation& g, std::uint32_t b) const;
  bool is_automorphism(const Permutation& g) const;
  // Block permutation induced by an automorphism.
  Permutation block_permutation(const Permutation& g) const;

  // Same structure with points relabelled by g (point x becomes g[x]).
  IncidenceStructure relabel(const Permutation& g) const;
  // Blocks sorted within each class; returns the structure and, for each old
  // block index, its new index.
  std::pair<IncidenceStructure, std::vector<std::uint32_t>> canonical_sort() const;

  bool operator==(const IncidenceStructure& o) const {
    return num_points_ == o.num_points_ && num_long_ == o.num_long_ && blocks_ == o.blocks_;
  }

private:
  std::uint32_t num_points_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t num_long_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::uint32_t>> point_blocks_;
  std::map<Block, std::uint32_t> lookup_;
};

// Partition of the short blocks (by short-block index) into parallel classes.
struct Parallelism {
  std::vector<std::vector<std::uint32_t>> classes;
  // Sorts each class and the class list.
  void normalize();
  auto operator<=>(const Parallelism&) const = default;
};

// Checks the parallelism invariants: n+1 classes of n^2-1 pairwise disjoint
// short blocks partitioning the short-block set.
bool is_parallelism(const IncidenceStructure& u, const Parallelism& pi, std::string* why = nullptr);

// Image of a parallelism under an automorphism of u (normalized).
Parallelism parallelism_image(const IncidenceStructure& u, const Parallelism& pi,
                              const Permutation& g);

struct AffineAxiomReport {
  bool au1 = false, au2 = false, au3 = false, au4 = false, au5 = false;
  std::uint32_t order = 0;
  std::optional<Parallelism> witness;
  std::vector<std::string> failures;
  bool all() const { return au1 && au2 && au3 && au4 && au5; }
};

// Solves the order n from the point count (n^3 - n) when the structure does
// not carry one.
std::uint32_t infer_affine_order(const IncidenceStructure& u);
std::uint32_t infer_unital_order(const IncidenceStructure& u);

AffineAxiomReport verify_affine_axioms(const IncidenceStructure& u);

struct UnitalReport {
  bool points = false, block_sizes = false, joining = false;
  std::uint32_t order = 0;
  std::vector<std::string> failures;
  bool all() const { return points && block_sizes && joining; }
};

// Exhaustive 2-(n^3+1, n+1, 1) check.
UnitalReport verify_unital(const IncidenceStructure& u);

// Two-level exact cover over the short blocks: spreads (short blocks
// partitioning the point set), then parallelisms (spreads partitioning the
// short blocks). Spreads are computed once per solver.
class ParallelismSolver {
public:
  explicit ParallelismSolver(const IncidenceStructure& u, bool parallel = true);

  const std::vector<std::vector<std::uint32_t>>& spreads() const { return spreads_; }
  bool spreads_complete() const { return spreads_complete_; }

  struct Enumeration {
    std::vector<Parallelism> parallelisms;  // sorted
    bool complete = true;
  };
  Enumeration enumerate(std::size_t cap = SIZE_MAX) const;
  std::optional<Parallelism> first() const;

private:
  ExactCover second_level() const;

  const IncidenceStructure* u_;
  bool parallel_;
  std::vector<std::vector<std::uint32_t>> spreads_;
  bool spreads_complete_ = true;
};

struct ClosedUnital {
  IncidenceStructure structure;
  std::uint32_t infinity_block = 0;
  std::vector<std::uint32_t> new_points;  // new_points[i] belongs to class i
  Parallelism parallelism;                // normalized, the classes used
};

// pi-closure: one new point per parallel class on all its short blocks, and
// the block of all new points. Throws if pi is not a parallelism of u.
// New points are v, v+1, ... in normalized class order unless point_of_class
// gives them explicitly.
ClosedUnital closure(const IncidenceStructure& u, const Parallelism& pi,
                     const std::vector<std::uint32_t>& point_of_class = {});

}  // namespace unital
