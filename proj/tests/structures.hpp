#pragma once

// Small test structures shared by the engine tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "unital/incidence.hpp"
#include "unital/perm.hpp"

namespace fixtures {

using unital::Block;
using unital::IncidenceStructure;
using unital::Permutation;

inline IncidenceStructure fano() {
  return IncidenceStructure(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}, {});
}

inline IncidenceStructure affine_plane_3() {
  std::vector<Block> lines;
  std::set<Block> seen;
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = a + 1; b < 9; ++b) {
      // Third point of the line through (x1,y1),(x2,y2) in AG(2,3).
      const std::uint32_t x = (6 - a / 3 - b / 3) % 3, y = (6 - a % 3 - b % 3) % 3;
      Block l{a, b, 3 * x + y};
      std::sort(l.begin(), l.end());
      if (seen.insert(l).second) lines.push_back(l);
    }
  return IncidenceStructure(9, lines, {});
}

inline IncidenceStructure pasch() {
  return IncidenceStructure(6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}, {});
}

inline IncidenceStructure complete_graph(std::uint32_t n) {
  std::vector<Block> edges;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) edges.push_back({a, b});
  return IncidenceStructure(n, edges, {});
}

// Mixed block sizes: long blocks of size 3, short blocks of size 2.
inline IncidenceStructure mixed() {
  return IncidenceStructure(8, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 0}}, {{1, 5}, {3, 7}});
}

inline IncidenceStructure random_structure(std::mt19937& rng, std::uint32_t n, std::uint32_t blocks) {
  std::set<Block> chosen;
  std::uniform_int_distribution<std::uint32_t> size(2, std::min<std::uint32_t>(4, n));
  std::uniform_int_distribution<std::uint32_t> point(0, n - 1);
  for (std::uint32_t tries = 0; chosen.size() < blocks && tries < 1000; ++tries) {
    std::set<std::uint32_t> b;
    const auto k = size(rng);
    while (b.size() < k) b.insert(point(rng));
    chosen.insert(Block(b.begin(), b.end()));
  }
  return IncidenceStructure(n, std::vector<Block>(chosen.begin(), chosen.end()), {});
}

inline Permutation random_permutation(std::mt19937& rng, std::uint32_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

// Copy of u with one point of its first block swapped for a point outside it.
inline IncidenceStructure perturbed(const IncidenceStructure& u) {
  auto lb = u.long_blocks();
  auto sb = u.short_blocks();
  auto& b = lb.front();
  for (std::uint32_t x = 0; x < u.num_points(); ++x)
    if (!std::binary_search(b.begin(), b.end(), x)) {
      b.back() = x;
      break;
    }
  std::sort(b.begin(), b.end());
  return IncidenceStructure(u.num_points(), lb, sb);
}

}  // namespace fixtures
