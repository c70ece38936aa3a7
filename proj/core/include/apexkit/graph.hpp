#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace apexkit {

/// Bitmask over vertex indices 0..61.
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

/// Calls f(v) for each vertex in s, in increasing order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    const int v = lowest(s);
    s &= s - 1;
    f(v);
  }
}

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 62 vertices stored as adjacency bitset rows.
///
/// Values are immutable in practice: every structural operation returns a new
/// graph, so instances can be shared freely between threads.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const;
  VertexSet vertices() const { return first_n(n_); }

  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Copy in which v keeps its index but loses every incident edge.
  Graph isolate(int v) const;
  /// Copy in which every vertex of s keeps its index but loses its edges.
  Graph isolate_set(VertexSet s) const;

  /// Subgraph induced by keep, vertices renumbered in increasing order.
  Graph induced(VertexSet keep) const;
  Graph without_vertex(int v) const { return induced(vertices() & ~bit(v)); }

  /// Adds a new vertex (index order()) adjacent to nbrs.
  Graph with_vertex(VertexSet nbrs) const;

  /// Relabels vertex v as perm[v].
  Graph relabeled(std::span<const int> perm) const;

  Graph without_edge(int u, int v) const;
  /// Merges v into u (loops and parallel edges dropped), then compacts indices
  /// so that vertices above max(u,v) shift down by one. The merged vertex takes
  /// index min(u,v).
  Graph contracted(int u, int v) const;

  bool operator==(const Graph& other) const;

  std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int p, int q);
  static Graph petersen();
  static Graph disjoint_union(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

/// Vertex sets of the components of g after deleting removed (removed vertices excluded).
std::vector<VertexSet> components(const Graph& g, VertexSet removed = 0);
bool is_connected(const Graph& g, VertexSet removed = 0);
/// Vertices reachable from start inside allowed.
VertexSet reach(const Graph& g, int start, VertexSet allowed);

std::string to_string(const Graph& g);

}  // namespace apexkit
