#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

enum class KuratowskiKind { K5, K33 };

std::string to_string(KuratowskiKind kind);

/// A subdivision of K5 or K3,3 inside a host graph.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::vector<int> branch;              // sorted
  std::vector<std::vector<int>> paths;  // each starts and ends at a branch vertex, sorted

  VertexSet vertex_set() const;
  VertexSet branch_set() const { return to_set(branch); }
  std::vector<Edge> edges() const;  // sorted
  int edge_count() const;
  /// Witness as a spanning subgraph of a host of order n.
  Graph as_graph(int n) const;

  friend bool operator==(const KuratowskiWitness&, const KuratowskiWitness&) = default;
};

bool is_planar(const Graph& g);

/// Any Kuratowski subgraph of g, or nullopt when g is planar. The witness is
/// obtained by deleting edges from the back of the lexicographic edge order
/// while the graph stays non-planar, so it is deterministic.
std::optional<KuratowskiWitness> kuratowski_witness(const Graph& g);

/// Kuratowski subgraph of g - v (vertex indices of g are kept).
std::optional<KuratowskiWitness> kuratowski_avoiding(const Graph& g, int v);

/// Turns an edge-minimal non-planar subgraph into branch vertices and paths.
/// Throws Error if g (ignoring isolated vertices) is not a Kuratowski subdivision.
KuratowskiWitness witness_from_subdivision(const Graph& g);

struct KuratowskiEnumeration {
  std::vector<KuratowskiWitness> witnesses;
  bool truncated = false;  // stopped at the cap; the list may be incomplete
};

/// Distinct Kuratowski subgraphs (as edge sets) of g, at most cap of them.
/// Exhaustive unless truncated is set.
KuratowskiEnumeration enumerate_kuratowski(const Graph& g, std::size_t cap = 10000);

/// Empty string if w satisfies every witness invariant in host, else the first violation.
std::string validate_witness(const Graph& host, const KuratowskiWitness& w);

}  // namespace apexkit
