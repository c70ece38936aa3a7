#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

using Permutation = std::vector<int>;

struct CanonicalForm {
  std::vector<int> relabeling;  // vertex v of the source goes to relabeling[v]
  std::string canon_g6;
};

struct Labeling {
  Graph canonical;                       // source relabeled by `labeling`
  std::vector<int> labeling;             // v -> canonical position
  std::vector<Permutation> generators;   // generate Aut(g) (restricted to the colouring)
  std::vector<int> orbit;                // smallest vertex in each vertex's orbit
};

/// Canonical labeling by individualization-refinement with automorphism pruning.
///
/// `colouring`, when non-empty, is an ordered partition of the vertex set into
/// cells; only colour-preserving relabelings are considered and the result is
/// canonical for the coloured graph.
Labeling canonical_labeling(const Graph& g, std::span<const VertexSet> colouring = {});

CanonicalForm canonical_form(const Graph& g);
std::string canonical_g6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// All elements of the group generated by gens, or nullopt once more than
/// `limit` elements have been produced.
std::optional<std::vector<Permutation>> enumerate_group(std::span<const Permutation> gens, int n,
                                                        std::size_t limit);

}  // namespace apexkit
