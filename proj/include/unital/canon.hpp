#pragma once

// Canonical labelling of vertex-coloured graphs by individualization and
// refinement.
//
// The search tree is explored depth first. Target cell: first smallest
// non-singleton cell. Automorphisms found at leaves prune the tree (orbit
// pruning plus the usual return to the common ancestor), and the set of
// automorphisms collected generates the full automorphism group.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "unital/perm.hpp"

namespace unital {

class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ColoredGraph {
  std::uint32_t num_vertices = 0;
  std::vector<std::vector<std::uint32_t>> adjacency;  // sorted, symmetric
  std::vector<std::uint32_t> color;                   // cells ordered by colour value

  void add_edge(std::uint32_t a, std::uint32_t b);
  void finalize();  // sorts adjacency lists
};

struct CanonOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct CanonResult {
  // Automorphisms of the coloured graph (degree num_vertices).
  std::vector<Permutation> generators;
  // labeling[v] = canonical position of vertex v.
  Permutation labeling;
  // Colour sequence and edges of the relabelled graph.
  std::vector<std::uint32_t> certificate;
  std::uint64_t nodes = 0;
};

CanonResult canonical_form(const ColoredGraph& graph, const CanonOptions& opts = {});

// Hex encoding of a certificate (8 hex digits per word).
std::string certificate_hex(const std::vector<std::uint32_t>& certificate);
// 64-bit FNV-1a digest of a certificate, as 16 hex digits.
std::string certificate_digest(const std::vector<std::uint32_t>& certificate);

}  // namespace unital
