#include "unital/aut.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace unital {

ColoredGraph incidence_graph(const IncidenceStructure& u, const StructureColoring& coloring) {
  const std::uint32_t v = u.num_points();
  const std::uint32_t b = u.num_blocks();
  if (!coloring.points.empty() && coloring.points.size() != v)
    throw std::invalid_argument("point colouring has the wrong length");
  if (!coloring.blocks.empty() && coloring.blocks.size() != b)
    throw std::invalid_argument("block colouring has the wrong length");

  // (base, extra) pairs ranked densely so colour values stay small.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> raw(v + b);
  for (std::uint32_t x = 0; x < v; ++x)
    raw[x] = {0, coloring.points.empty() ? 0 : coloring.points[x]};
  for (std::uint32_t j = 0; j < b; ++j)
    raw[v + j] = {u.is_short(j) ? 2u : 1u, coloring.blocks.empty() ? 0 : coloring.blocks[j]};
  auto ranks = raw;
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());

  ColoredGraph graph;
  graph.num_vertices = v + b;
  graph.adjacency.resize(v + b);
  graph.color.resize(v + b);
  for (std::uint32_t i = 0; i < v + b; ++i)
    graph.color[i] = static_cast<std::uint32_t>(
        std::lower_bound(ranks.begin(), ranks.end(), raw[i]) - ranks.begin());
  for (std::uint32_t j = 0; j < b; ++j)
    for (auto x : u.block(j)) graph.add_edge(x, v + j);
  graph.finalize();
  return graph;
}

namespace {

Permutation restrict_to_points(const Permutation& g, std::uint32_t v) {
  std::vector<std::uint32_t> img(g.images().begin(), g.images().begin() + v);
  return Permutation(std::move(img));
}

}  // namespace

PermGroup automorphism_group(const IncidenceStructure& u, const StructureColoring& coloring,
                             const CanonOptions& opts) {
  const auto result = canonical_form(incidence_graph(u, coloring), opts);
  std::vector<Permutation> gens;
  for (const auto& a : result.generators) {
    auto p = restrict_to_points(a, u.num_points());
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  return PermGroup(u.num_points(), std::move(gens));
}

Certificate canonical_certificate(const IncidenceStructure& u, const StructureColoring& coloring,
                                  const CanonOptions& opts) {
  auto result = canonical_form(incidence_graph(u, coloring), opts);
  return Certificate{std::move(result.certificate), std::move(result.labeling)};
}

bool is_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b, const Permutation& g) {
  if (a.num_points() != b.num_points() || a.num_blocks() != b.num_blocks() ||
      g.degree() != a.num_points())
    return false;
  for (const auto& blk : a.blocks()) {
    Block img;
    img.reserve(blk.size());
    for (auto x : blk) img.push_back(g[x]);
    std::sort(img.begin(), img.end());
    if (!b.find_block(img)) return false;
  }
  return true;
}

std::optional<Permutation> are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                                          const CanonOptions& opts) {
  if (a.num_points() != b.num_points() || a.num_blocks() != b.num_blocks() ||
      a.num_long() != b.num_long())
    return std::nullopt;
  const auto ca = canonical_certificate(a, {}, opts);
  const auto cb = canonical_certificate(b, {}, opts);
  if (ca.words != cb.words) return std::nullopt;
  const auto back = cb.labeling.inverse();
  std::vector<std::uint32_t> img(a.num_points());
  for (std::uint32_t x = 0; x < a.num_points(); ++x) img[x] = back[ca.labeling[x]];
  Permutation g(std::move(img));
  if (!is_isomorphism(a, b, g)) throw std::logic_error("canonical labelling produced a non-isomorphism");
  return g;
}

PermGroup right_regular_group(const SL2& g) {
  std::vector<Permutation> all;
  all.reserve(g.size());
  for (ElementId h = 0; h < g.size(); ++h) all.push_back(right_multiplication(g, h));
  return PermGroup::generated_by(g.size(), all);
}

std::optional<Factorization> factor_automorphism(const SL2& g, const Permutation& psi) {
  if (psi.degree() != g.size()) throw std::invalid_argument("permutation degree differs from |SL(2,q)|");
  const ElementId h = psi[g.identity()];
  const Permutation alpha = psi.then(right_multiplication(g, g.inv(h)));
  const std::uint32_t n = g.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (alpha[g.mul(x, y)] != g.mul(alpha[x], alpha[y])) return std::nullopt;
  for (const auto& a : all_automorphism_actions(g))
    if (action_permutation(g, a) == alpha) return Factorization{a, h};
  return std::nullopt;
}

std::optional<Permutation> are_parallelisms_equivalent(const IncidenceStructure& u,
                                                       const PermGroup& group,
                                                       const Parallelism& pi1,
                                                       const Parallelism& pi2) {
  auto start = pi1;
  start.normalize();
  auto target = pi2;
  target.normalize();
  std::map<Parallelism, Permutation> seen;
  seen.emplace(start, Permutation::identity(u.num_points()));
  std::deque<Parallelism> queue{start};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    const auto word = seen.at(cur);
    if (cur == target) return word;
    for (const auto& s : group.generators()) {
      auto img = parallelism_image(u, cur, s);
      if (seen.contains(img)) continue;
      seen.emplace(img, word.then(s));
      queue.push_back(std::move(img));
    }
  }
  return std::nullopt;
}

PermGroup block_stabilizer(const PermGroup& aut, const IncidenceStructure& u, std::uint32_t block) {
  if (block >= u.num_blocks()) throw std::out_of_range("no such block");
  const PermGroup::Action act = [&u](const Permutation& g, std::uint32_t b) {
    return *u.block_image(g, b);
  };
  return aut.object_stabilizer(u.num_blocks(), act, block);
}

PermGroup parallelism_stabilizer(const IncidenceStructure& u, const PermGroup& group,
                                 const Parallelism& pi) {
  auto start = pi;
  start.normalize();
  // Index the orbit of pi so the stabilizer comes from the induced action.
  std::map<Parallelism, std::uint32_t> index{{start, 0}};
  std::vector<Parallelism> orbit{start};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& s : group.generators()) {
      auto img = parallelism_image(u, orbit[i], s);
      if (index.emplace(img, static_cast<std::uint32_t>(orbit.size())).second)
        orbit.push_back(std::move(img));
    }
  const PermGroup::Action act = [&](const Permutation& g, std::uint32_t o) {
    return index.at(parallelism_image(u, orbit[o], g));
  };
  return group.object_stabilizer(static_cast<std::uint32_t>(orbit.size()), act, 0);
}

RInvariantResult r_invariant_parallelisms(const SL2& g, const IncidenceStructure& u,
                                          std::size_t cap) {
  const auto r = right_regular_group(g);
  const auto all = ParallelismSolver(u).enumerate(cap);
  RInvariantResult out;
  out.enumerated = all.parallelisms.size();
  out.complete = all.complete;
  for (auto pi : all.parallelisms) {
    pi.normalize();
    const bool fixed = std::all_of(r.generators().begin(), r.generators().end(),
                                   [&](const Permutation& s) { return parallelism_image(u, pi, s) == pi; });
    if (fixed) out.parallelisms.push_back(pi);
  }
  std::sort(out.parallelisms.begin(), out.parallelisms.end());
  return out;
}

std::optional<Permutation> extend_to_closure(const IncidenceStructure& u, const ClosedUnital& cu,
                                             const Permutation& g) {
  const auto& classes = cu.parallelism.classes;
  std::map<std::uint32_t, std::uint32_t> class_of;  // short-block index -> class
  for (std::uint32_t i = 0; i < classes.size(); ++i)
    for (auto j : classes[i]) class_of[j] = i;
  std::vector<std::uint32_t> img(cu.structure.num_points());
  for (std::uint32_t x = 0; x < u.num_points(); ++x) img[x] = g[x];
  for (std::uint32_t i = 0; i < classes.size(); ++i) {
    std::optional<std::uint32_t> target;
    for (auto j : classes[i]) {
      const auto b = u.block_image(g, u.num_long() + j);
      if (!b || !u.is_short(*b)) return std::nullopt;
      const auto c = class_of.at(*b - u.num_long());
      if (target && *target != c) return std::nullopt;
      target = c;
    }
    img[cu.new_points[i]] = cu.new_points[*target];
  }
  return Permutation(std::move(img));
}

TranslationGroup translations_with_center(const PermGroup& aut, const IncidenceStructure& u,
                                          std::uint32_t c) {
  if (c >= u.num_points()) throw std::out_of_range("no such point");
  PermGroup g = aut.point_stabilizer(c);
  for (auto b : u.blocks_through(c)) {
    if (g.is_trivial()) break;
    g = block_stabilizer(g, u, b);
  }
  TranslationGroup out{g, true, false};
  const auto order = g.order();
  for (std::uint32_t x = 0; x < u.num_points(); ++x)
    if (x != c && g.orbit(x).size() != order) out.semiregular = false;
  out.is_center = u.order() != 0 && order == u.order();
  return out;
}

std::vector<ClassifiedSubgroup> subgroup_orbit_representatives(const SL2& g) {
  const auto all = subgroups_order_qplus1(g);
  const auto actions = all_automorphism_actions(g);
  std::set<std::vector<ElementId>> covered;
  std::vector<ClassifiedSubgroup> reps;
  for (const auto& s : all) {
    if (covered.contains(s.group.elements)) continue;
    reps.push_back(s);
    for (const auto& a : actions) {
      std::vector<ElementId> img;
      for (auto x : s.group.elements) img.push_back(apply(g, a, x));
      std::sort(img.begin(), img.end());
      covered.insert(std::move(img));
    }
  }
  return reps;
}

Classification classify_affine_unitals(const SL2& g, const ClassifyOptions& opts) {
  Classification out;
  out.q = g.q();
  std::map<std::vector<std::uint32_t>, UnitalClass> by_cert;
  for (const auto& rep : subgroup_orbit_representatives(g)) {
    const auto collections = search_block_collections(g, rep.group, opts.search);
    out.collections += collections.size();
    const auto stab = stabilizer_in_A(g, rep.group);

    // Collections in one orbit of the stabilizer of S give isomorphic unitals.
    std::set<std::vector<std::vector<ElementId>>> orbit_keys;
    for (const auto& dc : collections) {
      std::vector<std::vector<ElementId>> best;
      for (const auto& a : stab.actions) {
        BlockCollection img;
        for (const auto& d : dc.sets) {
          std::vector<ElementId> t;
          for (auto x : d) t.push_back(apply(g, a, x));
          std::sort(t.begin(), t.end());
          img.sets.push_back(std::move(t));
        }
        auto key = collection_key(g, img);
        if (best.empty() || key < best) best = std::move(key);
      }
      if (!orbit_keys.insert(best).second) continue;

      auto u = build_affine_unital(g, rep.group, dc);
      auto cert = canonical_certificate(u, {}, opts.canon);
      if (by_cert.contains(cert.words)) continue;
      const auto order = automorphism_group(u, {}, opts.canon).order();
      auto key = cert.words;
      by_cert.emplace(std::move(key), UnitalClass{rep, dc, std::move(u), std::move(cert), order});
    }
    out.orbits += orbit_keys.size();
  }
  for (auto& [key, cls] : by_cert) out.classes.push_back(std::move(cls));
  return out;
}

}  // namespace unital
