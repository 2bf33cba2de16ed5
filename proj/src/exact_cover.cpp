#include "unital/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace unital {

namespace {

// Knuth's Algorithm X over a toroidal doubly linked node array. Node 0 is the
// root header, nodes 1..n are item headers.
class Dancer {
public:
  Dancer(std::uint32_t num_items, const std::vector<std::vector<std::uint32_t>>& options)
      : n_(num_items) {
    const std::size_t header = n_ + 1;
    reserve(header);
    for (std::uint32_t i = 0; i <= n_; ++i) {
      L_.push_back(i == 0 ? n_ : i - 1);
      R_.push_back(i == n_ ? 0 : i + 1);
      U_.push_back(i);
      D_.push_back(i);
      C_.push_back(i);
      row_.push_back(UINT32_MAX);
    }
    size_.assign(header, 0);
    for (std::uint32_t r = 0; r < options.size(); ++r) {
      std::uint32_t first = 0;
      for (auto item : options[r]) {
        if (item >= n_) throw std::invalid_argument("option references unknown item");
        const std::uint32_t col = item + 1;
        const auto node = static_cast<std::uint32_t>(L_.size());
        U_.push_back(U_[col]);
        D_.push_back(col);
        D_[U_[col]] = node;
        U_[col] = node;
        C_.push_back(col);
        row_.push_back(r);
        ++size_[col];
        if (first == 0) {
          first = node;
          L_.push_back(node);
          R_.push_back(node);
        } else {
          L_.push_back(L_[first]);
          R_.push_back(first);
          R_[L_[first]] = node;
          L_[first] = node;
        }
      }
    }
  }

  void cover(std::uint32_t c) {
    L_[R_[c]] = L_[c];
    R_[L_[c]] = R_[c];
    for (auto i = D_[c]; i != c; i = D_[i])
      for (auto j = R_[i]; j != i; j = R_[j]) {
        U_[D_[j]] = U_[j];
        D_[U_[j]] = D_[j];
        --size_[C_[j]];
      }
  }

  void uncover(std::uint32_t c) {
    for (auto i = U_[c]; i != c; i = U_[i])
      for (auto j = L_[i]; j != i; j = L_[j]) {
        ++size_[C_[j]];
        U_[D_[j]] = j;
        D_[U_[j]] = j;
      }
    L_[R_[c]] = c;
    R_[L_[c]] = c;
  }

  void select(std::uint32_t node) {
    for (auto j = R_[node]; j != node; j = R_[j]) cover(C_[j]);
  }
  void deselect(std::uint32_t node) {
    for (auto j = L_[node]; j != node; j = L_[j]) uncover(C_[j]);
  }

  // 0 when every item is covered.
  std::uint32_t choose_column() const {
    std::uint32_t best = 0, best_size = UINT32_MAX;
    for (auto c = R_[0]; c != 0; c = R_[c])
      if (size_[c] < best_size) {
        best = c;
        best_size = size_[c];
      }
    return best;
  }

  std::vector<std::uint32_t> column_rows(std::uint32_t c) const {
    std::vector<std::uint32_t> nodes;
    for (auto i = D_[c]; i != c; i = D_[i]) nodes.push_back(i);
    return nodes;
  }

  std::uint32_t row(std::uint32_t node) const { return row_[node]; }

  struct Search {
    ExactCoverLimits limits;
    std::vector<std::vector<std::uint32_t>> solutions;
    std::vector<std::uint32_t> stack;
    std::uint64_t nodes = 0;
    bool stopped = false;
  };

  void search(Search& s) {
    if (s.stopped) return;
    if (++s.nodes > s.limits.max_nodes) {
      s.stopped = true;
      return;
    }
    const std::uint32_t c = choose_column();
    if (c == 0) {
      auto sol = s.stack;
      std::sort(sol.begin(), sol.end());
      s.solutions.push_back(std::move(sol));
      if (s.solutions.size() >= s.limits.max_solutions) s.stopped = true;
      return;
    }
    if (size_[c] == 0) return;
    cover(c);
    for (auto i = D_[c]; i != c && !s.stopped; i = D_[i]) {
      s.stack.push_back(row_[i]);
      select(i);
      search(s);
      deselect(i);
      s.stack.pop_back();
    }
    uncover(c);
  }

private:
  void reserve(std::size_t n) {
    L_.reserve(n);
    R_.reserve(n);
    U_.reserve(n);
    D_.reserve(n);
    C_.reserve(n);
    row_.reserve(n);
  }

  std::uint32_t n_;
  std::vector<std::uint32_t> L_, R_, U_, D_, C_, row_, size_;
};

void finish(ExactCoverResult& r) { std::sort(r.solutions.begin(), r.solutions.end()); }

}  // namespace

ExactCover::ExactCover(std::uint32_t num_items, std::vector<std::vector<std::uint32_t>> options)
    : num_items_(num_items), options_(std::move(options)) {
  for (auto& o : options_) {
    std::sort(o.begin(), o.end());
    if (std::adjacent_find(o.begin(), o.end()) != o.end())
      throw std::invalid_argument("option lists an item twice");
    if (!o.empty() && o.back() >= num_items_) throw std::invalid_argument("option item out of range");
  }
}

ExactCoverResult ExactCover::solve_serial(ExactCoverLimits limits) const {
  Dancer d(num_items_, options_);
  Dancer::Search s;
  s.limits = limits;
  d.search(s);
  ExactCoverResult r{std::move(s.solutions), !s.stopped, s.nodes};
  finish(r);
  return r;
}

ExactCoverResult ExactCover::solve_parallel(ExactCoverLimits limits) const {
  Dancer root(num_items_, options_);
  const std::uint32_t c = root.choose_column();
  if (c == 0) return solve_serial(limits);
  const auto branches = root.column_rows(c);
  std::vector<Dancer::Search> results(branches.size());
  const auto num_branches = static_cast<std::int64_t>(branches.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < num_branches; ++b) {
    Dancer d(num_items_, options_);
    auto& s = results[static_cast<std::size_t>(b)];
    s.limits = limits;
    d.cover(c);
    const auto node = d.column_rows(c)[static_cast<std::size_t>(b)];
    s.stack.push_back(d.row(node));
    d.select(node);
    d.search(s);
  }

  ExactCoverResult r;
  r.nodes = 1;
  for (auto& s : results) {
    r.nodes += s.nodes;
    r.complete = r.complete && !s.stopped;
    for (auto& sol : s.solutions) r.solutions.push_back(std::move(sol));
  }
  finish(r);
  if (r.solutions.size() > limits.max_solutions) {
    r.solutions.resize(limits.max_solutions);
    r.complete = false;
  }
  return r;
}

std::optional<std::vector<std::uint32_t>> ExactCover::first_solution() const {
  auto r = solve_serial({1, UINT64_MAX});
  if (r.solutions.empty()) return std::nullopt;
  return r.solutions.front();
}

std::uint64_t ExactCover::count() const { return solve_serial().solutions.size(); }

}  // namespace unital
