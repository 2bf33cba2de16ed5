#include "unital/canon.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>

namespace unital {

void ColoredGraph::add_edge(std::uint32_t a, std::uint32_t b) {
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
}

void ColoredGraph::finalize() {
  for (auto& a : adjacency) std::sort(a.begin(), a.end());
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ull;
  return h ^ (h >> 29);
}

// Ordered partition: lab lists vertices by position, cells are contiguous
// runs; cell_of[v] is the start position of v's cell, cell_len is indexed by
// start position.
struct Partition {
  std::vector<std::uint32_t> lab, cell_of, cell_len;
  std::uint32_t cells = 0;
};

class Refiner {
public:
  explicit Refiner(const ColoredGraph& g)
      : g_(g), cnt_(g.num_vertices, 0), mark_(g.num_vertices, 0), in_queue_(g.num_vertices, 0) {}

  Partition initial() const {
    const std::uint32_t n = g_.num_vertices;
    Partition p;
    p.lab.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) p.lab[v] = v;
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return g_.color[a] < g_.color[b]; });
    p.cell_of.assign(n, 0);
    p.cell_len.assign(n, 0);
    std::uint32_t i = 0;
    while (i < n) {
      std::uint32_t j = i;
      while (j < n && g_.color[p.lab[j]] == g_.color[p.lab[i]]) ++j;
      for (std::uint32_t k = i; k < j; ++k) p.cell_of[p.lab[k]] = i;
      p.cell_len[i] = j - i;
      ++p.cells;
      i = j;
    }
    return p;
  }

  std::vector<std::uint32_t> all_cells(const Partition& p) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < p.lab.size(); i += p.cell_len[i]) out.push_back(i);
    return out;
  }

  // Splits {v} off the front of its cell.
  static std::uint32_t individualize(Partition& p, std::uint32_t v) {
    const std::uint32_t s = p.cell_of[v];
    const std::uint32_t len = p.cell_len[s];
    auto it = std::find(p.lab.begin() + s, p.lab.begin() + s + len, v);
    std::iter_swap(p.lab.begin() + s, it);
    p.cell_len[s] = 1;
    p.cell_len[s + 1] = len - 1;
    for (std::uint32_t k = s + 1; k < s + len; ++k) p.cell_of[p.lab[k]] = s + 1;
    ++p.cells;
    return s;
  }

  // Equitable refinement; returns an isomorphism-invariant trace hash.
  std::uint64_t refine(Partition& p, const std::vector<std::uint32_t>& splitters) {
    const std::uint32_t n = g_.num_vertices;
    std::uint64_t h = 0x243f6a8885a308d3ull;
    std::deque<std::uint32_t> queue;
    for (auto s : splitters) {
      queue.push_back(s);
      in_queue_[s] = 1;
    }
    std::vector<std::uint32_t> starts;
    while (!queue.empty()) {
      const std::uint32_t w = queue.front();
      queue.pop_front();
      in_queue_[w] = 0;
      if (p.cells == n) continue;
      const std::uint32_t wlen = p.cell_len[w];
      h = mix(mix(h, w), wlen);
      for (std::uint32_t i = w; i < w + wlen; ++i)
        for (auto v : g_.adjacency[p.lab[i]])
          if (cnt_[v]++ == 0) touched_.push_back(v);
      starts.clear();
      for (auto v : touched_) {
        const auto s = p.cell_of[v];
        if (!mark_[s]) {
          mark_[s] = 1;
          starts.push_back(s);
        }
      }
      std::sort(starts.begin(), starts.end());
      for (auto s : starts) {
        mark_[s] = 0;
        const std::uint32_t len = p.cell_len[s];
        if (len == 1) {
          h = mix(mix(h, s), cnt_[p.lab[s]]);
          continue;
        }
        auto first = p.lab.begin() + s, last = first + len;
        std::sort(first, last, [&](std::uint32_t a, std::uint32_t b) {
          return cnt_[a] != cnt_[b] ? cnt_[a] < cnt_[b] : a < b;
        });
        if (cnt_[*first] == cnt_[*(last - 1)]) {
          h = mix(mix(h, s), cnt_[*first]);
          continue;
        }
        std::vector<std::uint32_t> parts;
        for (std::uint32_t k = s; k < s + len; ++k)
          if (k == s || cnt_[p.lab[k]] != cnt_[p.lab[k - 1]]) parts.push_back(k);
        h = mix(mix(h, s), parts.size());
        for (std::size_t j = 0; j < parts.size(); ++j) {
          const std::uint32_t a = parts[j];
          const std::uint32_t b = j + 1 < parts.size() ? parts[j + 1] : s + len;
          p.cell_len[a] = b - a;
          for (std::uint32_t k = a; k < b; ++k) p.cell_of[p.lab[k]] = a;
          h = mix(mix(h, b - a), cnt_[p.lab[a]]);
        }
        p.cells += static_cast<std::uint32_t>(parts.size() - 1);
        if (in_queue_[s]) {
          for (std::size_t j = 1; j < parts.size(); ++j) {
            queue.push_back(parts[j]);
            in_queue_[parts[j]] = 1;
          }
        } else {
          std::size_t largest = 0;
          for (std::size_t j = 1; j < parts.size(); ++j)
            if (p.cell_len[parts[j]] > p.cell_len[parts[largest]]) largest = j;
          for (std::size_t j = 0; j < parts.size(); ++j)
            if (j != largest) {
              queue.push_back(parts[j]);
              in_queue_[parts[j]] = 1;
            }
        }
      }
      for (auto v : touched_) cnt_[v] = 0;
      touched_.clear();
    }
    return mix(h, p.cells);
  }

private:
  const ColoredGraph& g_;
  std::vector<std::uint32_t> cnt_;
  std::vector<std::uint8_t> mark_;
  std::vector<std::uint8_t> in_queue_;
  std::vector<std::uint32_t> touched_;
};

class TreeSearch {
public:
  TreeSearch(const ColoredGraph& g, const CanonOptions& opts) : g_(g), opts_(opts), refiner_(g) {}

  CanonResult run() {
    Partition p = refiner_.initial();
    const std::uint64_t h = refiner_.refine(p, refiner_.all_cells(p));
    inv_.push_back(h);
    visit(std::move(p), true, 0);

    CanonResult r;
    r.generators = autos_;
    std::vector<std::uint32_t> labeling(g_.num_vertices);
    for (std::uint32_t i = 0; i < g_.num_vertices; ++i) labeling[best_lab_[i]] = i;
    r.labeling = Permutation(std::move(labeling));
    r.certificate = best_cert_;
    r.nodes = nodes_;
    return r;
  }

private:
  std::vector<std::uint32_t> certificate(const std::vector<std::uint32_t>& lab) const {
    const std::uint32_t n = g_.num_vertices;
    std::vector<std::uint32_t> pos(n);
    for (std::uint32_t i = 0; i < n; ++i) pos[lab[i]] = i;
    std::vector<std::uint32_t> cert;
    cert.push_back(n);
    for (std::uint32_t i = 0; i < n; ++i) cert.push_back(g_.color[lab[i]]);
    std::vector<std::uint32_t> nb;
    for (std::uint32_t i = 0; i < n; ++i) {
      nb.clear();
      for (auto v : g_.adjacency[lab[i]]) nb.push_back(pos[v]);
      std::sort(nb.begin(), nb.end());
      cert.push_back(static_cast<std::uint32_t>(nb.size()));
      cert.insert(cert.end(), nb.begin(), nb.end());
    }
    return cert;
  }

  static std::size_t divergence(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void record_automorphism(const std::vector<std::uint32_t>& from,
                           const std::vector<std::uint32_t>& to) {
    std::vector<std::uint32_t> img(g_.num_vertices);
    for (std::uint32_t i = 0; i < g_.num_vertices; ++i) img[from[i]] = to[i];
    Permutation gamma(std::move(img));
    if (!gamma.is_identity()) autos_.push_back(std::move(gamma));
  }

  void leaf(const Partition& p, bool eq_first, int cmp_best) {
    auto cert = certificate(p.lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = best_cert_ = cert;
      first_inv_ = best_inv_ = inv_;
      first_path_ = best_path_ = path_;
      return;
    }
    if (eq_first && cert == first_cert_) {
      record_automorphism(first_lab_, p.lab);
      backtrack_to_ = divergence(path_, first_path_);
      return;
    }
    if (cmp_best == 0 && cert == best_cert_) {
      record_automorphism(best_lab_, p.lab);
      backtrack_to_ = divergence(path_, best_path_);
      return;
    }
    if (cmp_best > 0 || (cmp_best == 0 && cert > best_cert_)) {
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      best_inv_ = inv_;
      best_path_ = path_;
    }
  }

  // Orbit representatives of the automorphisms found so far that fix the
  // current path pointwise.
  std::vector<std::uint32_t> stabilizer_orbits() const {
    std::vector<Permutation> gens;
    for (const auto& a : autos_) {
      bool fixes = true;
      for (auto v : path_) fixes = fixes && a[v] == v;
      if (fixes) gens.push_back(a);
    }
    return orbit_representatives(g_.num_vertices, gens);
  }

  void visit(Partition p, bool eq_first, int cmp_best) {
    if (++nodes_ > opts_.node_budget)
      throw ResourceError("canonical labelling exceeded node budget of " +
                          std::to_string(opts_.node_budget));
    const std::uint32_t n = g_.num_vertices;
    if (p.cells == n) {
      leaf(p, eq_first, cmp_best);
      return;
    }
    std::uint32_t target = n, target_len = n + 1;
    for (std::uint32_t i = 0; i < n; i += p.cell_len[i])
      if (p.cell_len[i] > 1 && p.cell_len[i] < target_len) {
        target = i;
        target_len = p.cell_len[i];
      }
    std::vector<std::uint32_t> children(p.lab.begin() + target,
                                        p.lab.begin() + target + target_len);
    std::sort(children.begin(), children.end());

    const std::size_t level = path_.size();
    std::vector<std::uint32_t> explored;
    std::vector<std::uint32_t> reps;
    std::size_t reps_for = kNone;
    for (auto v : children) {
      if (!explored.empty()) {
        if (reps_for != autos_.size()) {
          reps = stabilizer_orbits();
          reps_for = autos_.size();
        }
        const bool seen = std::any_of(explored.begin(), explored.end(),
                                      [&](std::uint32_t u) { return reps[u] == reps[v]; });
        if (seen) continue;
      }
      explored.push_back(v);

      Partition c = p;
      const std::uint32_t s = Refiner::individualize(c, v);
      const std::uint64_t h = mix(inv_.back(), refiner_.refine(c, {s}));

      bool child_eq_first = true;
      int child_cmp = 0;
      if (have_first_) {
        child_eq_first = eq_first && level + 1 < first_inv_.size() && first_inv_[level + 1] == h;
        child_cmp = cmp_best;
        if (child_cmp == 0) {
          const std::uint64_t b = level + 1 < best_inv_.size() ? best_inv_[level + 1] : 0;
          child_cmp = h < b ? -1 : h > b ? 1 : 0;
        }
        if (!child_eq_first && child_cmp < 0) continue;
      }

      path_.push_back(v);
      inv_.push_back(h);
      visit(std::move(c), child_eq_first, child_cmp);
      path_.pop_back();
      inv_.pop_back();

      if (backtrack_to_ != kNone) {
        if (backtrack_to_ < level) return;
        backtrack_to_ = kNone;
      }
    }
  }

  const ColoredGraph& g_;
  CanonOptions opts_;
  Refiner refiner_;
  std::vector<Permutation> autos_;
  std::uint64_t nodes_ = 0;

  bool have_first_ = false;
  std::vector<std::uint32_t> first_lab_, first_cert_, first_path_;
  std::vector<std::uint64_t> first_inv_;
  std::vector<std::uint32_t> best_lab_, best_cert_, best_path_;
  std::vector<std::uint64_t> best_inv_;

  std::vector<std::uint32_t> path_;
  std::vector<std::uint64_t> inv_;
  std::size_t backtrack_to_ = kNone;
};

}  // namespace

CanonResult canonical_form(const ColoredGraph& graph, const CanonOptions& opts) {
  if (graph.adjacency.size() != graph.num_vertices || graph.color.size() != graph.num_vertices)
    throw std::invalid_argument("malformed coloured graph");
  for (std::uint32_t v = 0; v < graph.num_vertices; ++v) {
    const auto& adj = graph.adjacency[v];
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const auto w = adj[i];
      if (w >= graph.num_vertices || w == v || (i > 0 && adj[i - 1] >= w))
        throw std::invalid_argument("adjacency of vertex " + std::to_string(v) + " is not sorted, simple and in range");
      const auto& back = graph.adjacency[w];
      if (!std::binary_search(back.begin(), back.end(), v))
        throw std::invalid_argument("adjacency is not symmetric at vertex " + std::to_string(v));
    }
  }
  if (graph.num_vertices == 0) return CanonResult{{}, Permutation(), {0}, 0};
  return TreeSearch(graph, opts).run();
}

std::string certificate_hex(const std::vector<std::uint32_t>& certificate) {
  std::string out;
  out.reserve(certificate.size() * 8);
  char buf[9];
  for (auto w : certificate) {
    std::snprintf(buf, sizeof buf, "%08x", w);
    out += buf;
  }
  return out;
}

std::string certificate_digest(const std::vector<std::uint32_t>& certificate) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto w : certificate)
    for (int k = 0; k < 4; ++k) {
      h ^= (w >> (8 * k)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace unital
