#include "unital/design.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace unital {

std::vector<ElementId> quotient_multiset(const SL2& g, const std::vector<ElementId>& d) {
  std::vector<ElementId> out;
  for (auto x : d)
    for (auto y : d)
      if (x != y) out.push_back(g.mul(x, g.inv(y)));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_shape(const SL2& g, const std::vector<ElementId>& d) {
  if (d.size() != g.q() + 1)
    throw DesignError("block collection member has " + std::to_string(d.size()) +
                      " elements, expected q+1");
  if (std::find(d.begin(), d.end(), g.identity()) == d.end())
    throw DesignError("block collection member does not contain the identity");
  std::vector<ElementId> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DesignError("block collection member repeats an element");
  for (auto x : d)
    if (x >= g.size()) throw DesignError("element index out of range");
}

}  // namespace

ConditionQResult check_condition_Q(const SL2& g, const std::vector<ElementId>& d) {
  check_shape(g, d);
  ConditionQResult r;
  std::map<ElementId, std::pair<ElementId, ElementId>> first_pair;
  for (auto x : d)
    for (auto y : d) {
      if (x == y) continue;
      const auto z = g.mul(x, g.inv(y));
      auto [it, inserted] = first_pair.emplace(z, std::make_pair(x, y));
      if (!inserted && !r.collision) r.collision = std::make_pair(it->second, std::make_pair(x, y));
    }
  r.distinct_quotients = first_pair.size();
  r.ok = r.distinct_quotients == std::size_t(g.q()) * (g.q() + 1);
  return r;
}

ConditionPResult check_condition_P(const SL2& g, const Subgroup& s, const BlockCollection& dc) {
  std::vector<std::uint32_t> count(g.size(), 0);
  auto cover = [&](const std::vector<ElementId>& set) {
    for (auto x : set)
      if (x != g.identity()) ++count[x];
  };
  cover(s.elements);
  for (const auto& t : sylow_subgroups(g)) cover(t.elements);
  for (const auto& d : dc.sets) {
    auto qs = quotient_multiset(g, d);
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    cover(qs);
  }
  ConditionPResult r;
  for (ElementId x = 0; x < g.size(); ++x) {
    if (x == g.identity()) continue;
    if (count[x] == 0) r.gaps.push_back(x);
    if (count[x] > 1) r.overlaps.push_back(x);
  }
  r.ok = r.gaps.empty() && r.overlaps.empty();
  return r;
}

std::optional<std::uint32_t> expected_collection_size(std::uint32_t q) {
  const std::uint64_t n = std::uint64_t(q - 1) * q * (q + 1);
  const std::uint64_t leftover = n - 1 - q - (std::uint64_t(q) * q - 1);
  const std::uint64_t per_set = std::uint64_t(q) * (q + 1);
  if (leftover % per_set != 0) return std::nullopt;
  return static_cast<std::uint32_t>(leftover / per_set);
}

namespace {

std::vector<Block> right_translates(const SL2& g, const std::vector<ElementId>& set) {
  std::set<Block> out;
  for (ElementId h = 0; h < g.size(); ++h) {
    Block b;
    for (auto x : set) b.push_back(g.mul(x, h));
    std::sort(b.begin(), b.end());
    out.insert(std::move(b));
  }
  return {out.begin(), out.end()};
}

std::vector<Block> sylow_cosets(const SL2& g) {
  std::vector<Block> out;
  for (const auto& t : sylow_subgroups(g)) {
    auto c = right_translates(g, t.elements);
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IncidenceStructure build_affine_unital(const SL2& g, const Subgroup& s, const BlockCollection& dc) {
  if (s.elements.size() != g.q() + 1 || !is_subgroup(g, s.elements))
    throw DesignError("S must be a subgroup of order q+1");
  for (const auto& d : dc.sets) {
    auto q = check_condition_Q(g, d);
    if (!q.ok) throw DesignError("condition (Q) fails for a member of the block collection");
  }
  auto p = check_condition_P(g, s, dc);
  if (!p.ok)
    throw DesignError("condition (P) fails: " + std::to_string(p.overlaps.size()) +
                      " overlaps, " + std::to_string(p.gaps.size()) + " gaps");
  std::set<Block> long_set;
  for (auto& b : right_translates(g, s.elements)) long_set.insert(std::move(b));
  for (const auto& d : dc.sets)
    for (auto& b : right_translates(g, d)) long_set.insert(std::move(b));
  return IncidenceStructure(g.size(), {long_set.begin(), long_set.end()}, sylow_cosets(g), g.q());
}

IncidenceStructure short_block_geometry(const SL2& g) {
  return IncidenceStructure(g.size(), {}, sylow_cosets(g), g.q());
}

std::vector<ElementId> flat_label(const SL2& g, const Block& b) {
  std::vector<ElementId> t;
  const auto x = g.inv(b.front());
  for (auto y : b) t.push_back(g.mul(y, x));
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<ElementId> natural_label(const SL2& g, const Block& b) {
  std::vector<ElementId> t;
  const auto x = g.inv(b.front());
  for (auto y : b) t.push_back(g.mul(x, y));
  std::sort(t.begin(), t.end());
  return t;
}

namespace {

Parallelism by_label(const SL2& g, const IncidenceStructure& u,
                     std::vector<ElementId> (*label)(const SL2&, const Block&)) {
  const auto sylows = sylow_subgroups(g);
  std::map<std::vector<ElementId>, std::size_t> index;
  for (std::size_t i = 0; i < sylows.size(); ++i) index[sylows[i].elements] = i;
  Parallelism pi;
  pi.classes.resize(sylows.size());
  for (std::uint32_t j = 0; j < u.num_short(); ++j) {
    auto it = index.find(label(g, u.short_block(j)));
    if (it == index.end()) throw DesignError("short block is not a coset of a Sylow subgroup");
    pi.classes[it->second].push_back(j);
  }
  return pi;
}

}  // namespace

Parallelism flat_parallelism(const SL2& g, const IncidenceStructure& u) {
  return by_label(g, u, flat_label);
}

Parallelism natural_parallelism(const SL2& g, const IncidenceStructure& u) {
  return by_label(g, u, natural_label);
}

// --------------------------------------------------------------------------
// Block collection search
// --------------------------------------------------------------------------

namespace {

class CollectionSearch {
public:
  CollectionSearch(const SL2& g, const Subgroup& s) : g_(g), n_(g.size()), covered_(n_, 0) {
    quot_.resize(std::size_t(n_) * n_);
    for (ElementId x = 0; x < n_; ++x)
      for (ElementId y = 0; y < n_; ++y) quot_[std::size_t(x) * n_ + y] = g.mul(x, g.inv(y));
    covered_[g.identity()] = 1;
    for (auto x : s.elements) covered_[x] = 1;
    for (const auto& t : sylow_subgroups(g))
      for (auto x : t.elements) covered_[x] = 1;
  }

  // Every D through the identity containing the smallest uncovered element
  // whose quotients avoid the covered set.
  std::vector<std::vector<ElementId>> candidate_sets() {
    std::vector<std::vector<ElementId>> out;
    const auto l = smallest_uncovered();
    if (!l) return out;
    std::vector<ElementId> d{g_.identity()};
    std::vector<ElementId> marked;
    if (!try_add(d, *l, marked)) return out;
    grow(d, *l + 1, marked, [&](const std::vector<ElementId>& full) { out.push_back(full); });
    undo(marked);
    return out;
  }

  // Depth-first search; stops once `limit` collections are found (0: no limit).
  void run(std::vector<std::vector<ElementId>>& current, std::vector<BlockCollection>& found,
           std::size_t limit = 0) {
    if (!smallest_uncovered()) {
      BlockCollection dc{current};
      found.push_back(std::move(dc));
      return;
    }
    for (auto& d : candidate_sets()) {
      const auto marked = mark(d);
      current.push_back(d);
      run(current, found, limit);
      current.pop_back();
      undo(marked);
      if (limit != 0 && found.size() >= limit) return;
    }
  }

  std::vector<ElementId> mark(const std::vector<ElementId>& d) {
    std::vector<ElementId> marked;
    for (auto x : d)
      for (auto y : d)
        if (x != y) {
          const auto z = quot(x, y);
          covered_[z] = 1;
          marked.push_back(z);
        }
    return marked;
  }

  void undo(const std::vector<ElementId>& marked) {
    for (auto z : marked) covered_[z] = 0;
  }

private:
  ElementId quot(ElementId x, ElementId y) const { return quot_[std::size_t(x) * n_ + y]; }

  std::optional<ElementId> smallest_uncovered() const {
    for (ElementId x = 0; x < n_; ++x)
      if (!covered_[x]) return x;
    return std::nullopt;
  }

  // Adds x to d if all new quotients are uncovered and distinct; records them.
  bool try_add(std::vector<ElementId>& d, ElementId x, std::vector<ElementId>& marked) {
    const std::size_t before = marked.size();
    for (auto y : d) {
      for (auto z : {quot(x, y), quot(y, x)}) {
        if (covered_[z]) {
          undo({marked.begin() + static_cast<std::ptrdiff_t>(before), marked.end()});
          marked.resize(before);
          return false;
        }
        covered_[z] = 1;
        marked.push_back(z);
      }
    }
    d.push_back(x);
    return true;
  }

  template <typename Emit>
  void grow(std::vector<ElementId>& d, ElementId from, std::vector<ElementId>& marked, Emit&& emit) {
    if (d.size() == g_.q() + 1) {
      auto sorted = d;
      std::sort(sorted.begin(), sorted.end());
      emit(sorted);
      return;
    }
    for (ElementId x = from; x < n_; ++x) {
      if (covered_[x]) continue;
      const std::size_t before = marked.size();
      if (!try_add(d, x, marked)) continue;
      grow(d, x + 1, marked, emit);
      d.pop_back();
      undo({marked.begin() + static_cast<std::ptrdiff_t>(before), marked.end()});
      marked.resize(before);
    }
  }

  const SL2& g_;
  std::uint32_t n_;
  std::vector<std::uint8_t> covered_;
  std::vector<ElementId> quot_;
};

}  // namespace

std::vector<BlockCollection> search_block_collections(const SL2& g, const Subgroup& s,
                                                      SearchOptions opts) {
  if (g.q() > opts.max_q)
    throw DesignError("q = " + std::to_string(g.q()) + " exceeds search bound " +
                      std::to_string(opts.max_q));
  if (s.elements.size() != g.q() + 1 || !is_subgroup(g, s.elements))
    throw DesignError("S must be a subgroup of order q+1");
  if (!expected_collection_size(g.q())) return {};

  std::vector<BlockCollection> found;
  CollectionSearch root(g, s);
  if (!opts.parallel || opts.limit != 0) {
    std::vector<std::vector<ElementId>> current;
    root.run(current, found, opts.limit);
  } else {
    const auto first = root.candidate_sets();
    if (first.empty()) {
      std::vector<std::vector<ElementId>> current;
      root.run(current, found);  // records the empty collection when nothing is left
    }
    std::vector<std::vector<BlockCollection>> partial(first.size());
    const auto num = static_cast<std::int64_t>(first.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < num; ++i) {
      CollectionSearch local(g, s);
      const auto& d = first[static_cast<std::size_t>(i)];
      local.mark(d);
      std::vector<std::vector<ElementId>> current{d};
      local.run(current, partial[static_cast<std::size_t>(i)]);
    }
    for (auto& p : partial)
      for (auto& dc : p) found.push_back(std::move(dc));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<std::vector<ElementId>> collection_key(const SL2& g, const BlockCollection& dc) {
  std::vector<std::vector<ElementId>> key;
  for (const auto& d : dc.sets)
    for (auto x : d) {
      std::vector<ElementId> t;
      const auto xi = g.inv(x);
      for (auto y : d) t.push_back(g.mul(y, xi));
      std::sort(t.begin(), t.end());
      key.push_back(std::move(t));
    }
  std::sort(key.begin(), key.end());
  return key;
}

// --------------------------------------------------------------------------
// Order-3 example
// --------------------------------------------------------------------------

namespace {

const std::vector<Block> kExampleLongBlocks = {
    {1, 4, 5, 6},     {1, 7, 8, 9},     {1, 12, 13, 14},  {1, 15, 16, 17},  {1, 22, 23, 24},
    {2, 4, 13, 15},   {2, 8, 10, 23},   {2, 11, 18, 21},  {2, 12, 19, 22},  {2, 16, 20, 24},
    {3, 5, 14, 17},   {3, 6, 9, 18},    {3, 7, 12, 21},   {3, 8, 11, 16},   {3, 10, 19, 20},
    {4, 8, 18, 24},   {4, 9, 12, 23},   {4, 14, 16, 21},  {5, 10, 16, 18},  {5, 13, 20, 22},
    {5, 15, 19, 21},  {6, 7, 19, 24},   {6, 8, 17, 20},   {6, 10, 15, 22},  {7, 11, 17, 22},
    {7, 14, 20, 23},  {9, 10, 13, 21},  {9, 11, 14, 19},  {11, 12, 15, 24}, {13, 17, 18, 23},
};

// Columns 30..61 of the incidence table.
const std::vector<Block> kExampleShortBlocks = {
    {1, 2, 3},    {4, 7, 10},   {9, 15, 20},  {14, 18, 22}, {17, 21, 24}, {5, 11, 23},
    {6, 12, 16},  {8, 13, 19},  {1, 20, 21},  {2, 9, 17},   {3, 4, 22},   {7, 15, 18},
    {10, 14, 24}, {5, 8, 12},   {6, 11, 13},  {16, 19, 23}, {2, 6, 14},   {3, 15, 23},
    {5, 9, 24},   {7, 13, 16},  {8, 21, 22},  {1, 10, 11},  {4, 17, 19},  {12, 18, 20},
    {2, 5, 7},    {3, 13, 24},  {6, 21, 23},  {8, 14, 15},  {9, 16, 22},  {1, 18, 19},
    {4, 11, 20},  {10, 12, 17},
};

// Column ranges (relative to column 30) of the new points 25..28.
const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> kPiRanges = {
    {{0, 7}}, {{8, 15}}, {{16, 23}}, {{24, 31}}};
const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> kPiPrimeRanges = {
    {{0, 4}, {13, 15}}, {{5, 12}}, {{16, 20}, {29, 31}}, {{21, 28}}};

// Zero-based new point of each class above. The table draws the classes in
// the order 25..28, but kExampleIsomorphism is an isomorphism only with
// this assignment, the only one of the 576 that works.
const std::vector<std::uint32_t> kPiLabels = {24, 27, 25, 26};
const std::vector<std::uint32_t> kPiPrimeLabels = {24, 27, 26, 25};

// Maps the pi'-closure onto the pi-closure.
const char* kExampleIsomorphism =
    "(1,16,23,10)(2,11,15,19)(4,9,13,14)(5,22,18,24)(6,27,20,25,8,26,17,28)(12,21)";

std::vector<Block> zero_based(const std::vector<Block>& blocks) {
  std::vector<Block> out = blocks;
  for (auto& b : out)
    for (auto& x : b) --x;
  return out;
}

std::pair<Parallelism, std::vector<std::uint32_t>> from_ranges(
    const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& ranges,
    const std::vector<std::uint32_t>& labels) {
  Parallelism pi;
  for (const auto& cls : ranges) {
    std::vector<std::uint32_t> c;
    for (auto [lo, hi] : cls)
      for (auto j = lo; j <= hi; ++j) c.push_back(j);
    pi.classes.push_back(std::move(c));
  }
  // Remember which new point each class carries before normalizing.
  std::map<std::vector<std::uint32_t>, std::uint32_t> point;
  for (std::uint32_t i = 0; i < pi.classes.size(); ++i) point[pi.classes[i]] = labels[i];
  pi.normalize();
  std::vector<std::uint32_t> points;
  for (const auto& c : pi.classes) points.push_back(point[c]);
  return {pi, points};
}

}  // namespace

TwoParallelismExample two_parallelism_example() {
  TwoParallelismExample f;
  f.structure = IncidenceStructure(24, zero_based(kExampleLongBlocks),
                                   zero_based(kExampleShortBlocks), 3);
  std::tie(f.pi, f.pi_point_of_class) = from_ranges(kPiRanges, kPiLabels);
  std::tie(f.pi_prime, f.pi_prime_point_of_class) = from_ranges(kPiPrimeRanges, kPiPrimeLabels);
  f.isomorphism = Permutation::from_cycles(28, kExampleIsomorphism, 1);
  return f;
}

}  // namespace unital
