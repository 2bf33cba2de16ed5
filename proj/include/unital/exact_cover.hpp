#pragma once

// Exact cover by dancing links.
//
// Column choice is deterministic (fewest remaining options, ties by lowest
// item index), so the serial enumeration order is reproducible. The parallel
// kernel splits the search at the first branching column and merges the
// per-branch results; both kernels return solutions in the same sorted order.

#include <cstdint>
#include <optional>
#include <vector>

namespace unital {

struct ExactCoverResult {
  // Each solution lists option indices in ascending order; solutions sorted.
  std::vector<std::vector<std::uint32_t>> solutions;
  bool complete = true;  // false when the solution cap or node budget was hit
  std::uint64_t nodes = 0;
};

struct ExactCoverLimits {
  std::size_t max_solutions = SIZE_MAX;
  std::uint64_t max_nodes = UINT64_MAX;
};

class ExactCover {
public:
  ExactCover(std::uint32_t num_items, std::vector<std::vector<std::uint32_t>> options);

  std::uint32_t num_items() const { return num_items_; }
  const std::vector<std::vector<std::uint32_t>>& options() const { return options_; }

  ExactCoverResult solve_serial(ExactCoverLimits limits = {}) const;
  ExactCoverResult solve_parallel(ExactCoverLimits limits = {}) const;
  std::optional<std::vector<std::uint32_t>> first_solution() const;
  std::uint64_t count() const;

private:
  std::uint32_t num_items_;
  std::vector<std::vector<std::uint32_t>> options_;
};

}  // namespace unital
