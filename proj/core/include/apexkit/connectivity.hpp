#pragma once

#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

struct CutPartition {
  VertexSet cut = 0;
  std::vector<VertexSet> components;  // components of g - cut, by lowest vertex
};

/// Vertex connectivity: 0 for disconnected graphs and n <= 1, n-1 for complete graphs.
int connectivity(const Graph& g);

/// Vertices whose removal increases the number of components.
VertexSet cut_vertices(const Graph& g);

/// Every pair {a,b} with g - {a,b} disconnected, in lexicographic pair order.
std::vector<CutPartition> enumerate_two_cuts(const Graph& g);

/// Maximum number of internally disjoint s-t paths (s, t non-adjacent).
int local_connectivity(const Graph& g, int s, int t);

}  // namespace apexkit
