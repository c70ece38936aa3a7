#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

enum class PlanarFamily {
  Connected,  // connected planar graphs
  All,        // planar graphs, connected or not
};

using GraphSink = std::function<void(const Graph&)>;

/// One representative per isomorphism class of connected planar graphs of
/// order n, in a fixed deterministic order. 1 <= n <= 12.
void generate_connected_planar(int n, const GraphSink& sink);
std::vector<Graph> generate_connected_planar(int n);

/// Same for all planar graphs (isolated vertices and several components allowed).
void generate_planar(int n, const GraphSink& sink);

/// Work units: the graphs of order max(1, n - depth) from which every output
/// of order n descends exactly once via expand_unit.
std::vector<Graph> generation_units(PlanarFamily family, int n, int depth = 2);
void expand_unit(PlanarFamily family, const Graph& unit, int n, const GraphSink& sink);

/// Counts over the units, spread across `workers` threads.
std::uint64_t count_planar(PlanarFamily family, int n, int workers = 1);

}  // namespace apexkit
