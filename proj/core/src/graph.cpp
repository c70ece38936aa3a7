#include "apexkit/graph.hpp"

#include <algorithm>
#include <sstream>

#include "apexkit/errors.hpp"

namespace apexkit {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) throw VertexAbsent("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n));
}

// Drops bit `pos` and shifts the higher bits down by one.
VertexSet squeeze(VertexSet s, int pos) {
  const VertexSet low = s & (bit(pos) - 1);
  const VertexSet high = (s >> (pos + 1)) << pos;
  return low | high;
}

}  // namespace

std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet to_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= bit(v);
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) throw Error("graph order " + std::to_string(n) + " outside 0..62");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw Error("loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~first_n(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

Graph Graph::isolate(int v) const { return isolate_set(bit(v)); }

Graph Graph::isolate_set(VertexSet s) const {
  Graph g = *this;
  for (int u = 0; u < n_; ++u) {
    if (contains(s, u)) {
      g.adj_[u] = 0;
    } else {
      g.adj_[u] &= ~s;
    }
  }
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxOrder> index{};
  int k = 0;
  for_each_vertex(keep, [&](int v) { index[v] = k++; });
  Graph g(k);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(adj_[u] & keep, [&](int v) { g.adj_[index[u]] |= bit(index[v]); });
  });
  return g;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  Graph g = *this;
  if (n_ >= kMaxOrder) throw Error("graph order would exceed 62");
  const int v = g.n_++;
  g.adj_[v] = nbrs & vertices();
  for_each_vertex(g.adj_[v], [&](int u) { g.adj_[u] |= bit(v); });
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    VertexSet row = 0;
    for_each_vertex(adj_[u], [&](int v) { row |= bit(perm[v]); });
    g.adj_[perm[u]] = row;
  }
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !has_edge(u, v)) {
    throw EdgeAbsent("edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
  }
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

Graph Graph::contracted(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !has_edge(u, v)) {
    throw EdgeAbsent("edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
  }
  const int keep = std::min(u, v);
  const int drop = std::max(u, v);
  Graph g(n_ - 1);
  const VertexSet merged = (adj_[keep] | adj_[drop]) & ~bit(keep) & ~bit(drop);
  int row = 0;
  for (int w = 0; w < n_; ++w) {
    if (w == drop) continue;
    VertexSet nb = adj_[w];
    if (w == keep) {
      nb = merged;
    } else if (contains(nb, drop)) {
      nb = (nb & ~bit(drop)) | bit(keep);
    }
    g.adj_[row++] = squeeze(nb, drop);
  }
  return g;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = first_n(n) & ~bit(v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::complete_bipartite(int p, int q) {
  Graph g(p + q);
  for (int u = 0; u < p; ++u) {
    for (int v = p; v < p + q; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n_ + b.n_);
  for (int v = 0; v < a.n_; ++v) g.adj_[v] = a.adj_[v];
  for (int v = 0; v < b.n_; ++v) g.adj_[a.n_ + v] = b.adj_[v] << a.n_;
  return g;
}

VertexSet reach(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = bit(start) & allowed;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices() & ~removed;
  while (left != 0) {
    const VertexSet comp = reach(g, lowest(left), left);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet removed) {
  const VertexSet left = g.vertices() & ~removed;
  if (left == 0) return true;
  return reach(g, lowest(left), left) == left;
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "Graph(n=" << g.order() << ", edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << ", ";
    first = false;
    out << e.u << "-" << e.v;
  }
  out << "])";
  return out.str();
}

}  // namespace apexkit
