#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apexkit/graph.hpp"
#include "apexkit/planarity.hpp"

namespace apexkit {

/// { v : g - v planar }. Planar graphs return every vertex.
VertexSet apex_set(const Graph& g);
bool is_apex(const Graph& g);

struct EdgeEvidence {
  Edge edge;
  int deletion_apex = -1;     // apex of g - e (indices of g)
  int contraction_apex = -1;  // apex of g / e (indices of g.contracted(u, v))
};

struct ObstructionCertificate {
  std::vector<KuratowskiWitness> non_apex;  // non_apex[v] avoids v
  std::vector<EdgeEvidence> edges;          // lexicographic edge order
};

struct ObstructionResult {
  std::optional<ObstructionCertificate> certificate;  // set on success
  std::string reason;                                 // set on failure

  explicit operator bool() const { return certificate.has_value(); }
};

/// Minor-minimal non-apex test: g non-apex, no isolated vertex, and every
/// single-edge deletion and contraction apex. Deletions are checked first.
ObstructionResult is_obstruction(const Graph& g);

/// Same decision without building a certificate; nullopt means obstruction.
std::optional<std::string> obstruction_failure(const Graph& g);

/// Empty string iff every piece of evidence replays through is_planar.
std::string validate_certificate(const Graph& g, const ObstructionCertificate& cert);

/// Obstructions that are disjoint unions of two Kuratowski graphs with total
/// order at most max_order, as sorted canonical graph6 strings.
std::vector<std::string> disconnected_obstructions(int max_order = 12);

/// All subdivisions of K5 and K3,3 with at most max_order vertices, canonical graph6 sorted.
std::vector<std::string> kuratowski_graphs(int max_order);

}  // namespace apexkit
