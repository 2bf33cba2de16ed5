#include "unital/quadrangle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "unital/aut.hpp"
#include "unital/design.hpp"
#include "unital/sl2.hpp"

namespace unital {

namespace {

using Vec = std::vector<FieldElement>;

FieldElement quadratic(const GaloisField& f, const Vec& x) {
  auto t = f.add(f.mul(x[0], x[2]), f.mul(x[1], x[3]));
  return f.add(t, f.mul(x[4], x[4]));
}

// Polar form of the quadric.
FieldElement polar(const GaloisField& f, const Vec& x, const Vec& y) {
  FieldElement t = f.zero();
  t = f.add(t, f.add(f.mul(x[0], y[2]), f.mul(x[2], y[0])));
  t = f.add(t, f.add(f.mul(x[1], y[3]), f.mul(x[3], y[1])));
  const auto xy = f.mul(x[4], y[4]);
  return f.add(t, f.add(xy, xy));
}

Vec normalize(const GaloisField& f, Vec x) {
  const auto it = std::find_if(x.begin(), x.end(), [](FieldElement a) { return a.index != 0; });
  const auto s = f.inv(*it);
  for (auto& a : x) a = f.mul(a, s);
  return x;
}

}  // namespace

IncidenceStructure PolarSpace::incidence() const {
  return IncidenceStructure(static_cast<std::uint32_t>(points.size()), lines, {});
}

PolarSpace build_Q4(const FieldSpec& spec) {
  const GaloisField f(spec);
  const std::uint32_t q = f.q();
  PolarSpace out;
  out.field = spec;
  std::uint64_t total = 1;
  for (int i = 0; i < 5; ++i) total *= q;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec x(5);
    auto c = code;
    for (int i = 4; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = f.element(static_cast<std::uint32_t>(c % q));
      c /= q;
    }
    const auto first = std::find_if(x.begin(), x.end(), [](FieldElement a) { return a.index != 0; });
    if (first->index != 1) continue;
    if (quadratic(f, x).index == 0) out.points.push_back({x});
  }
  std::sort(out.points.begin(), out.points.end());

  std::map<Vec, std::uint32_t> index;
  for (std::uint32_t i = 0; i < out.points.size(); ++i) index[out.points[i].coords] = i;

  std::set<std::vector<std::uint32_t>> lines;
  const auto n = static_cast<std::uint32_t>(out.points.size());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const auto& u = out.points[i].coords;
      const auto& v = out.points[j].coords;
      if (polar(f, u, v).index != 0) continue;
      std::vector<std::uint32_t> line{j};
      for (auto t : f.elements()) {
        Vec w(5);
        for (int k = 0; k < 5; ++k) w[k] = f.add(u[k], f.mul(t, v[k]));
        line.push_back(index.at(normalize(f, w)));
      }
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  out.lines.assign(lines.begin(), lines.end());
  return out;
}

Hyperplane hyperplane_H(const PolarSpace& q4) {
  Hyperplane h;
  std::vector<std::uint8_t> in(q4.points.size(), 0);
  for (std::uint32_t i = 0; i < q4.points.size(); ++i)
    if (q4.points[i].coords[4].index == 0) {
      h.points.push_back(i);
      in[i] = 1;
    }
  for (std::uint32_t l = 0; l < q4.lines.size(); ++l)
    if (std::all_of(q4.lines[l].begin(), q4.lines[l].end(), [&](std::uint32_t x) { return in[x]; }))
      h.lines.push_back(l);
  return h;
}

bool is_geometric_hyperplane(const PolarSpace& q4, const Hyperplane& h) {
  std::vector<std::uint8_t> in(q4.points.size(), 0);
  for (auto x : h.points) in[x] = 1;
  std::set<std::uint32_t> inside(h.lines.begin(), h.lines.end());
  for (std::uint32_t l = 0; l < q4.lines.size(); ++l) {
    const auto hits = std::count_if(q4.lines[l].begin(), q4.lines[l].end(),
                                    [&](std::uint32_t x) { return in[x] != 0; });
    if (hits == 0) return false;
    if (!inside.contains(l) && hits != 1) return false;
  }
  return true;
}

bool satisfies_gq_axiom(const PolarSpace& q4) {
  const auto n = q4.points.size();
  std::vector<std::vector<std::uint8_t>> collinear(n, std::vector<std::uint8_t>(n, 0));
  for (const auto& line : q4.lines)
    for (auto a : line)
      for (auto b : line)
        if (a != b) collinear[a][b] = 1;
  for (const auto& line : q4.lines)
    for (std::uint32_t x = 0; x < n; ++x) {
      if (std::binary_search(line.begin(), line.end(), x)) continue;
      const auto c = std::count_if(line.begin(), line.end(), [&](std::uint32_t y) { return collinear[x][y] != 0; });
      if (c != 1) return false;
    }
  return true;
}

IncidenceStructure complement_geometry(const PolarSpace& q4, const Hyperplane& h) {
  std::vector<std::int64_t> label(q4.points.size(), 0);
  for (auto x : h.points) label[x] = -1;
  std::uint32_t next = 0;
  for (auto& l : label)
    if (l == 0) l = next++;
  std::vector<Block> blocks;
  for (const auto& line : q4.lines) {
    Block trace;
    for (auto x : line)
      if (label[x] >= 0) trace.push_back(static_cast<std::uint32_t>(label[x]));
    if (!trace.empty()) blocks.push_back(std::move(trace));
  }
  const GaloisField f(q4.field);
  return IncidenceStructure(next, {}, std::move(blocks), f.q());
}

ShortBlockModel verify_short_block_model(const FieldSpec& spec) {
  const SL2 g(spec);
  const std::uint64_t q = g.q();
  ShortBlockModel out;
  out.q = g.q();
  const auto sb = short_block_geometry(g);
  const auto q4 = build_Q4(spec);
  out.isomorphism = are_isomorphic(sb, complement_geometry(q4, hyperplane_H(q4)));

  const auto aut = automorphism_group(sb);
  out.aut_order = aut.order();
  out.expected_order = 2 * g.e() * (q - 1) * (q - 1) * q * q * (q + 1) * (q + 1);

  auto gens = automorphism_group_A(g).group.generators();
  gens.push_back(inversion_permutation(g));
  const auto r = right_regular_group(g);
  gens.insert(gens.end(), r.generators().begin(), r.generators().end());
  const PermGroup generated(g.size(), gens);
  out.generated_order = generated.order();
  out.generated_is_subgroup = generated.is_subgroup_of(aut);
  return out;
}

}  // namespace unital
