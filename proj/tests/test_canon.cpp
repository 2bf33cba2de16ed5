#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "structures.hpp"
#include "unital/aut.hpp"

using namespace unital;

namespace {

ColoredGraph graph_from_edges(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  ColoredGraph g;
  g.num_vertices = n;
  g.adjacency.assign(n, {});
  g.color.assign(n, 0);
  for (auto [a, b] : edges) g.add_edge(a, b);
  g.finalize();
  return g;
}

ColoredGraph cycle(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return graph_from_edges(n, e);
}

ColoredGraph petersen() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
    e.push_back({i, 5 + i});
  }
  return graph_from_edges(10, e);
}

// Z4 x Z4 Cayley graphs: the 4x4 rook's graph and the Shrikhande graph share
// the parameters srg(16,6,2,2), so refinement alone cannot tell them apart.
ColoredGraph cayley_z4z4(const std::vector<std::pair<int, int>>& connection) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (int x = 0; x < 16; ++x)
    for (auto [da, db] : connection) {
      const int y = ((x / 4 + da + 4) % 4) * 4 + (x % 4 + db + 4) % 4;
      if (x < y) e.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
    }
  return graph_from_edges(16, e);
}

ColoredGraph rook_graph() {
  return cayley_z4z4({{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}});
}

ColoredGraph shrikhande_graph() {
  return cayley_z4z4({{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}});
}

std::uint64_t group_order(const CanonResult& r, std::uint32_t n) {
  return PermGroup(n, r.generators).order();
}

bool preserves(const ColoredGraph& g, const Permutation& p) {
  for (std::uint32_t v = 0; v < g.num_vertices; ++v) {
    if (g.color[v] != g.color[p[v]]) return false;
    for (auto w : g.adjacency[v])
      if (!std::binary_search(g.adjacency[p[v]].begin(), g.adjacency[p[v]].end(), p[w])) return false;
  }
  return true;
}

std::vector<IncidenceStructure> small_structures() {
  std::vector<IncidenceStructure> out{fixtures::fano(), fixtures::affine_plane_3(), fixtures::pasch(),
                                      fixtures::complete_graph(5), fixtures::mixed()};
  std::mt19937 rng(20261017);
  for (std::uint32_t i = 0; i < 12; ++i) out.push_back(fixtures::random_structure(rng, 5 + i % 4, 3 + i % 6));
  return out;
}

}  // namespace

TEST_CASE("graph automorphism group orders") {
  for (std::uint32_t n = 3; n <= 9; ++n) CHECK(group_order(canonical_form(cycle(n)), n) == 2 * n);
  CHECK(group_order(canonical_form(petersen()), 10) == 120);
  CHECK(group_order(canonical_form(rook_graph()), 16) == 1152);
  CHECK(group_order(canonical_form(shrikhande_graph()), 16) == 192);
}

TEST_CASE("generators are automorphisms of the graph") {
  for (const auto& g : {petersen(), rook_graph(), shrikhande_graph()}) {
    const auto r = canonical_form(g);
    for (const auto& p : r.generators) CHECK(preserves(g, p));
  }
}

TEST_CASE("strongly regular graphs with equal parameters get different certificates") {
  CHECK(canonical_form(rook_graph()).certificate != canonical_form(shrikhande_graph()).certificate);
}

TEST_CASE("colours restrict automorphisms") {
  auto g = cycle(6);
  g.color[0] = 1;
  CHECK(group_order(canonical_form(g), 6) == 2);
  g.color[1] = 2;
  CHECK(group_order(canonical_form(g), 6) == 1);
}

TEST_CASE("empty graph") {
  ColoredGraph g;
  const auto r = canonical_form(g);
  CHECK(r.certificate == std::vector<std::uint32_t>{0});
}

TEST_CASE("malformed graphs are rejected") {
  ColoredGraph g = cycle(4);
  g.adjacency[0].push_back(9);
  CHECK_THROWS(canonical_form(g));
  ColoredGraph asym = cycle(4);
  asym.adjacency[0] = {1};
  CHECK_THROWS(canonical_form(asym));
}

TEST_CASE("node budget raises ResourceError") {
  CanonOptions tight;
  tight.node_budget = 1;
  CHECK_THROWS_AS(canonical_form(petersen(), tight), ResourceError);
  CHECK_THROWS_AS(automorphism_group(fixtures::fano(), {}, tight), ResourceError);
}

TEST_CASE("certificate encodings") {
  const std::vector<std::uint32_t> words{0, 1, 0xdeadbeef};
  CHECK(certificate_hex(words) == "0000000000000001deadbeef");
  CHECK(certificate_digest(words).size() == 16);
  CHECK(certificate_digest(words) != certificate_digest({0, 1}));
}

TEST_CASE("automorphism groups of small structures match exhaustive search") {
  for (const auto& u : small_structures()) {
    CAPTURE(u.num_points());
    CAPTURE(u.num_blocks());
    const auto aut = automorphism_group(u);
    CHECK(aut.order() == brute::automorphism_count(u));
    for (const auto& g : aut.generators()) CHECK(u.is_automorphism(g));
  }
  CHECK(automorphism_group(fixtures::fano()).order() == 168);
  CHECK(automorphism_group(fixtures::affine_plane_3()).order() == 432);
  CHECK(automorphism_group(fixtures::pasch()).order() == 24);
  CHECK(automorphism_group(fixtures::complete_graph(5)).order() == 120);
}

TEST_CASE("certificates are invariant under relabelling") {
  std::mt19937 rng(7);
  for (const auto& u : small_structures()) {
    const auto base = canonical_certificate(u).words;
    for (int i = 0; i < 200; ++i) {
      const auto p = fixtures::random_permutation(rng, u.num_points());
      REQUIRE(canonical_certificate(u.relabel(p)).words == base);
    }
  }
}

TEST_CASE("certificates agree exactly when structures are isomorphic") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto a = fixtures::random_structure(rng, 6, 5);
    const auto b = fixtures::random_structure(rng, 6, 5);
    const bool brute_iso = brute::isomorphic(a, b);
    CHECK((canonical_certificate(a).words == canonical_certificate(b).words) == brute_iso);
    const auto map = are_isomorphic(a, b);
    CHECK(map.has_value() == brute_iso);
    if (map) CHECK(is_isomorphism(a, b, *map));
  }
}

TEST_CASE("perturbing a block changes the certificate") {
  for (const auto& u : {fixtures::fano(), fixtures::affine_plane_3()}) {
    const auto v = fixtures::perturbed(u);
    CHECK(canonical_certificate(u).words != canonical_certificate(v).words);
    CHECK_FALSE(are_isomorphic(u, v));
  }
}

TEST_CASE("long and short blocks are distinguished") {
  const IncidenceStructure a(4, {{0, 1}}, {{2, 3}});
  const IncidenceStructure b(4, {{0, 1}, {2, 3}}, {});
  CHECK(automorphism_group(a).order() == 4);
  CHECK(automorphism_group(b).order() == 8);
  CHECK_FALSE(are_isomorphic(a, b));
}

TEST_CASE("extra colours restrict structure automorphisms") {
  const auto fano = fixtures::fano();
  StructureColoring c;
  c.points.assign(7, 0);
  c.points[0] = 1;
  CHECK(automorphism_group(fano, c).order() == 24);
}
