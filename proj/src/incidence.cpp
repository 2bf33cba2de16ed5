#include "unital/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unital {

IncidenceStructure::IncidenceStructure(std::uint32_t num_points, std::vector<Block> long_blocks,
                                       std::vector<Block> short_blocks, std::uint32_t order)
    : num_points_(num_points), order_(order),
      num_long_(static_cast<std::uint32_t>(long_blocks.size())) {
  blocks_ = std::move(long_blocks);
  for (auto& b : short_blocks) blocks_.push_back(std::move(b));
  point_blocks_.assign(num_points_, {});
  for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
    auto& blk = blocks_[b];
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw std::invalid_argument("block " + std::to_string(b) + " repeats a point");
    for (auto x : blk) {
      if (x >= num_points_) throw std::invalid_argument("block entry out of range");
      point_blocks_[x].push_back(b);
    }
    if (!lookup_.emplace(blk, b).second)
      throw std::invalid_argument("duplicate block " + std::to_string(b));
  }
}

std::vector<Block> IncidenceStructure::long_blocks() const {
  return {blocks_.begin(), blocks_.begin() + num_long_};
}

std::vector<Block> IncidenceStructure::short_blocks() const {
  return {blocks_.begin() + num_long_, blocks_.end()};
}

std::vector<std::uint32_t> IncidenceStructure::short_block_indices() const {
  std::vector<std::uint32_t> out(num_short());
  std::iota(out.begin(), out.end(), num_long_);
  return out;
}

std::optional<std::uint32_t> IncidenceStructure::find_block(const Block& points) const {
  auto it = lookup_.find(points);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> IncidenceStructure::block_image(const Permutation& g,
                                                             std::uint32_t b) const {
  Block img;
  img.reserve(blocks_[b].size());
  for (auto x : blocks_[b]) img.push_back(g[x]);
  std::sort(img.begin(), img.end());
  return find_block(img);
}

bool IncidenceStructure::is_automorphism(const Permutation& g) const {
  if (g.degree() != num_points_) return false;
  for (std::uint32_t b = 0; b < num_blocks(); ++b)
    if (!block_image(g, b)) return false;
  return true;
}

Permutation IncidenceStructure::block_permutation(const Permutation& g) const {
  std::vector<std::uint32_t> img(num_blocks());
  for (std::uint32_t b = 0; b < num_blocks(); ++b) {
    auto i = block_image(g, b);
    if (!i) throw std::invalid_argument("permutation is not an automorphism");
    img[b] = *i;
  }
  return Permutation(std::move(img));
}

IncidenceStructure IncidenceStructure::relabel(const Permutation& g) const {
  auto map_blocks = [&](std::uint32_t from, std::uint32_t to) {
    std::vector<Block> out;
    for (std::uint32_t b = from; b < to; ++b) {
      Block img;
      for (auto x : blocks_[b]) img.push_back(g[x]);
      out.push_back(std::move(img));
    }
    return out;
  };
  return IncidenceStructure(num_points_, map_blocks(0, num_long_),
                            map_blocks(num_long_, num_blocks()), order_);
}

std::pair<IncidenceStructure, std::vector<std::uint32_t>> IncidenceStructure::canonical_sort() const {
  std::vector<std::uint32_t> order(num_blocks());
  std::iota(order.begin(), order.end(), 0u);
  auto by_points = [&](std::uint32_t a, std::uint32_t b) { return blocks_[a] < blocks_[b]; };
  std::sort(order.begin(), order.begin() + num_long_, by_points);
  std::sort(order.begin() + num_long_, order.end(), by_points);
  std::vector<std::uint32_t> new_index(num_blocks());
  std::vector<Block> lng, shrt;
  for (std::uint32_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    (k < num_long_ ? lng : shrt).push_back(blocks_[order[k]]);
  }
  return {IncidenceStructure(num_points_, std::move(lng), std::move(shrt), order_),
          std::move(new_index)};
}

// --------------------------------------------------------------------------
// Parallelisms
// --------------------------------------------------------------------------

void Parallelism::normalize() {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
}

bool is_parallelism(const IncidenceStructure& u, const Parallelism& pi, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const std::uint32_t n = u.order() ? u.order() : infer_affine_order(u);
  if (pi.classes.size() != n + 1) return fail("expected " + std::to_string(n + 1) + " classes");
  std::vector<int> seen(u.num_short(), 0);
  for (std::size_t c = 0; c < pi.classes.size(); ++c) {
    const auto& cls = pi.classes[c];
    if (cls.size() != n * n - 1)
      return fail("class " + std::to_string(c) + " has " + std::to_string(cls.size()) + " blocks");
    std::vector<bool> covered(u.num_points(), false);
    for (auto j : cls) {
      if (j >= u.num_short()) return fail("short-block index out of range");
      if (seen[j]++) return fail("short block " + std::to_string(j) + " in two classes");
      for (auto x : u.short_block(j)) {
        if (covered[x]) return fail("class " + std::to_string(c) + " is not pairwise disjoint");
        covered[x] = true;
      }
    }
  }
  for (std::uint32_t j = 0; j < u.num_short(); ++j)
    if (!seen[j]) return fail("short block " + std::to_string(j) + " in no class");
  return true;
}

Parallelism parallelism_image(const IncidenceStructure& u, const Parallelism& pi,
                              const Permutation& g) {
  Parallelism out;
  for (const auto& cls : pi.classes) {
    std::vector<std::uint32_t> img;
    for (auto j : cls) {
      auto b = u.block_image(g, u.num_long() + j);
      if (!b || !u.is_short(*b)) throw std::invalid_argument("not an automorphism");
      img.push_back(*b - u.num_long());
    }
    out.classes.push_back(std::move(img));
  }
  out.normalize();
  return out;
}

// --------------------------------------------------------------------------
// Axioms
// --------------------------------------------------------------------------

std::uint32_t infer_affine_order(const IncidenceStructure& u) {
  if (u.order()) return u.order();
  for (std::uint64_t n = 2; n * n * n - n <= u.num_points(); ++n)
    if (n * n * n - n == u.num_points()) return static_cast<std::uint32_t>(n);
  return 0;
}

std::uint32_t infer_unital_order(const IncidenceStructure& u) {
  if (u.order()) return u.order();
  for (std::uint64_t n = 2; n * n * n + 1 <= u.num_points(); ++n)
    if (n * n * n + 1 == u.num_points()) return static_cast<std::uint32_t>(n);
  return 0;
}

namespace {

// Every pair of points on exactly one block.
bool check_joining(const IncidenceStructure& u, std::vector<std::string>& failures) {
  const std::uint32_t v = u.num_points();
  std::vector<std::uint8_t> count(std::size_t(v) * v, 0);
  for (const auto& b : u.blocks())
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        auto& c = count[std::size_t(b[i]) * v + b[j]];
        if (c < 255) ++c;
      }
  for (std::uint32_t x = 0; x < v; ++x)
    for (std::uint32_t y = x + 1; y < v; ++y)
      if (count[std::size_t(x) * v + y] != 1) {
        failures.push_back("points " + std::to_string(x) + "," + std::to_string(y) + " lie on " +
                           std::to_string(count[std::size_t(x) * v + y]) + " blocks");
        return false;
      }
  return true;
}

}  // namespace

AffineAxiomReport verify_affine_axioms(const IncidenceStructure& u) {
  AffineAxiomReport r;
  const std::uint32_t n = infer_affine_order(u);
  r.order = n;
  if (n < 2) {
    r.failures.push_back("AU1: point count " + std::to_string(u.num_points()) + " is not n^3-n");
    return r;
  }
  r.au1 = u.num_points() == n * n * n - n;
  if (!r.au1) r.failures.push_back("AU1: wrong point count");

  r.au2 = true;
  for (std::uint32_t b = 0; b < u.num_blocks(); ++b) {
    const auto s = u.block(b).size();
    const bool ok = u.is_short(b) ? s == n : s == n + 1;
    if (!ok) {
      r.au2 = false;
      r.failures.push_back("AU2: block " + std::to_string(b) + " has " + std::to_string(s) +
                           " points");
      break;
    }
  }

  r.au3 = true;
  for (std::uint32_t x = 0; x < u.num_points(); ++x)
    if (u.blocks_through(x).size() != n * n) {
      r.au3 = false;
      r.failures.push_back("AU3: point " + std::to_string(x) + " is on " +
                           std::to_string(u.blocks_through(x).size()) + " blocks");
      break;
    }

  r.au4 = check_joining(u, r.failures);

  if (r.au2) {
    ParallelismSolver solver(u);
    r.witness = solver.first();
    r.au5 = r.witness.has_value();
    if (!r.au5) r.failures.push_back("AU5: no parallelism exists");
  } else {
    r.failures.push_back("AU5: skipped, block sizes invalid");
  }
  return r;
}

UnitalReport verify_unital(const IncidenceStructure& u) {
  UnitalReport r;
  const std::uint32_t n = infer_unital_order(u);
  r.order = n;
  r.points = n >= 2 && u.num_points() == n * n * n + 1;
  if (!r.points) {
    r.failures.push_back("point count " + std::to_string(u.num_points()) + " is not n^3+1");
    return r;
  }
  r.block_sizes = std::all_of(u.blocks().begin(), u.blocks().end(),
                              [&](const Block& b) { return b.size() == n + 1; });
  if (!r.block_sizes) r.failures.push_back("some block does not have n+1 points");
  r.joining = check_joining(u, r.failures);
  return r;
}

// --------------------------------------------------------------------------
// Parallelism enumeration
// --------------------------------------------------------------------------

ParallelismSolver::ParallelismSolver(const IncidenceStructure& u, bool parallel)
    : u_(&u), parallel_(parallel) {
  std::vector<std::vector<std::uint32_t>> options;
  for (std::uint32_t j = 0; j < u.num_short(); ++j) options.push_back(u.short_block(j));
  ExactCover points(u.num_points(), std::move(options));
  auto r = parallel ? points.solve_parallel() : points.solve_serial();
  spreads_ = std::move(r.solutions);
  spreads_complete_ = r.complete;
}

ExactCover ParallelismSolver::second_level() const {
  return ExactCover(u_->num_short(), spreads_);
}

ParallelismSolver::Enumeration ParallelismSolver::enumerate(std::size_t cap) const {
  const auto cover = second_level();
  ExactCoverLimits limits{cap, UINT64_MAX};
  auto r = parallel_ ? cover.solve_parallel(limits) : cover.solve_serial(limits);
  Enumeration out;
  out.complete = r.complete && spreads_complete_;
  for (const auto& sol : r.solutions) {
    Parallelism pi;
    for (auto s : sol) pi.classes.push_back(spreads_[s]);
    pi.normalize();
    out.parallelisms.push_back(std::move(pi));
  }
  std::sort(out.parallelisms.begin(), out.parallelisms.end());
  return out;
}

std::optional<Parallelism> ParallelismSolver::first() const {
  auto sol = second_level().first_solution();
  if (!sol) return std::nullopt;
  Parallelism pi;
  for (auto s : *sol) pi.classes.push_back(spreads_[s]);
  pi.normalize();
  return pi;
}

// --------------------------------------------------------------------------
// Closure
// --------------------------------------------------------------------------

ClosedUnital closure(const IncidenceStructure& u, const Parallelism& pi,
                     const std::vector<std::uint32_t>& point_of_class) {
  std::string why;
  if (!is_parallelism(u, pi, &why)) throw std::invalid_argument("invalid parallelism: " + why);
  ClosedUnital out;
  out.parallelism = pi;
  out.parallelism.normalize();
  const std::uint32_t v = u.num_points();
  const auto k = static_cast<std::uint32_t>(out.parallelism.classes.size());
  std::vector<std::uint32_t> label(k);
  for (std::uint32_t c = 0; c < k; ++c) label[c] = v + c;
  if (!point_of_class.empty()) {
    auto sorted = point_of_class;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != label) throw std::invalid_argument("new point labels must be a permutation of the new points");
    label = point_of_class;
  }
  std::vector<std::uint32_t> class_of(u.num_short());
  for (std::uint32_t c = 0; c < k; ++c)
    for (auto j : out.parallelism.classes[c]) class_of[j] = c;
  std::vector<Block> blocks = u.long_blocks();
  for (std::uint32_t j = 0; j < u.num_short(); ++j) {
    Block b = u.short_block(j);
    b.push_back(label[class_of[j]]);
    blocks.push_back(std::move(b));
  }
  Block infinity;
  for (std::uint32_t c = 0; c < k; ++c) {
    infinity.push_back(v + c);
    out.new_points.push_back(label[c]);
  }
  blocks.push_back(std::move(infinity));
  out.infinity_block = static_cast<std::uint32_t>(blocks.size() - 1);
  out.structure = IncidenceStructure(v + k, std::move(blocks), {}, u.order());
  return out;
}

}  // namespace unital
