#include "apexkit/connectivity.hpp"

#include <algorithm>
#include <vector>

namespace apexkit {

namespace {

bool complete(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != g.order() - 1) return false;
  }
  return true;
}

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  const int base = static_cast<int>(components(g).size());
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (static_cast<int>(components(g, bit(v)).size()) > base) out |= bit(v);
  }
  return out;
}

std::vector<CutPartition> enumerate_two_cuts(const Graph& g) {
  std::vector<CutPartition> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const VertexSet cut = bit(a) | bit(b);
      if (is_connected(g, cut)) continue;
      out.push_back({cut, components(g, cut)});
    }
  }
  return out;
}

// Vertex-split unit-capacity max flow: v_in = 2v, v_out = 2v+1.
int local_connectivity(const Graph& g, int s, int t) {
  const int n = g.order();
  const int nodes = 2 * n;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int v = 0; v < n; ++v) {
    cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for_each_vertex(g.neighbors(v), [&](int w) { cap[2 * v + 1][2 * w] = n; });
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> prev(nodes);
  while (true) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[source] = source;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size() && prev[sink] == -1; ++head) {
      const int x = queue[head];
      for (int y = 0; y < nodes; ++y) {
        if (prev[y] == -1 && cap[x][y] > 0) {
          prev[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (prev[sink] == -1) return flow;
    for (int y = sink; y != source; y = prev[y]) {
      --cap[prev[y]][y];
      ++cap[y][prev[y]];
    }
    ++flow;
  }
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  if (complete(g)) return n - 1;
  if (cut_vertices(g) != 0) return 1;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!is_connected(g, bit(a) | bit(b))) return 2;
    }
  }
  // Even: some minimum separator misses one of the first k+1 vertices.
  int best = n - 1;
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) best = std::min(best, local_connectivity(g, i, j));
    }
  }
  return best;
}

}  // namespace apexkit
