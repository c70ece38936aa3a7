#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

/// True iff h is a minor of g. Intended for patterns with at most ~12 vertices.
///
/// Contracting edges and deleting isolated vertices is enough to reach a
/// spanning supergraph of any minor (leftover vertices are absorbed into a
/// neighbouring branch set, or squashed and deleted), so the search walks
/// those moves level by level, deduplicated by canonical form, and finishes
/// with a spanning subgraph test. Levels are pruned by edge count and cycle
/// rank, which never increase under these moves.
bool has_minor(const Graph& g, const Graph& h);

/// True iff h is isomorphic to a (not necessarily induced) subgraph of g.
bool has_subgraph(const Graph& g, const Graph& h);

/// m - n + c, unchanged or reduced by every deletion or contraction.
int cycle_rank(const Graph& g);

struct MinorClosedReport {
  /// (i, j) with i != j and list[i] a minor of list[j].
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

MinorClosedReport minor_closed_check(std::span<const Graph> list);

/// Named pattern graphs: K5, K33, K33_plus_e, K5_minus_e, K33_minus_e, M,
/// Y_minus, P7, Petersen, plus the remaining Petersen-family members K6,
/// K331, P8, K44_minus_e, P9. Throws Error for unknown names.
const Graph& minor_pattern(std::string_view name);
std::vector<std::string> minor_pattern_names();

}  // namespace apexkit
