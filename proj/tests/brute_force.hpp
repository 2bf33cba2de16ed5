#pragma once

// Exhaustive oracles for small incidence structures: every point bijection is
// tried, pruned only by blocks whose points are all mapped.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "unital/incidence.hpp"

namespace brute {

using unital::Block;
using unital::IncidenceStructure;

// Calls visit(images) for every point bijection mapping the blocks of a onto
// the blocks of b (same block count assumed); stops when visit returns false.
inline void for_each_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                                 const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
  const std::uint32_t n = a.num_points();
  if (n != b.num_points() || a.num_blocks() != b.num_blocks()) return;
  std::set<Block> target(b.blocks().begin(), b.blocks().end());
  // Blocks of a grouped by their largest point, checked once it is mapped.
  std::vector<std::vector<const Block*>> due(n);
  for (const auto& blk : a.blocks()) due[blk.back()].push_back(&blk);
  std::vector<std::uint32_t> img(n);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t x) {
    if (stop) return;
    if (x == n) {
      stop = !visit(img);
      return;
    }
    for (std::uint32_t y = 0; y < n && !stop; ++y) {
      if (used[y]) continue;
      img[x] = y;
      bool ok = true;
      for (const Block* blk : due[x]) {
        Block m;
        for (auto p : *blk) m.push_back(img[p]);
        std::sort(m.begin(), m.end());
        if (!target.contains(m)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[y] = true;
      rec(x + 1);
      used[y] = false;
    }
  };
  rec(0);
}

inline std::uint64_t automorphism_count(const IncidenceStructure& u) {
  std::uint64_t count = 0;
  for_each_isomorphism(u, u, [&](const std::vector<std::uint32_t>&) {
    ++count;
    return true;
  });
  return count;
}

inline bool isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  bool found = false;
  for_each_isomorphism(a, b, [&](const std::vector<std::uint32_t>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace brute
