#include "apexkit/generate.hpp"

#include <atomic>
#include <string>
#include <thread>
#include <unordered_set>

#include "apexkit/canon.hpp"
#include "apexkit/connectivity.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/graph6.hpp"
#include "apexkit/planarity.hpp"

namespace apexkit {

namespace {

void check_order(int n) {
  if (n < 1 || n > 12) throw ConfigInvalid("generator order must be in 1..12, got " + std::to_string(n));
}

// Canonical deletion: among the removable vertices (non-cut for connected
// graphs) of minimum degree, the one with the largest canonical label. The
// child is kept iff the new vertex lies in that vertex's orbit.
bool is_canonical_child(PlanarFamily family, const Graph& child, int v, Labeling* lab_out, bool& labelled) {
  const VertexSet removable = family == PlanarFamily::Connected ? child.vertices() & ~cut_vertices(child) : child.vertices();
  int dmin = child.order();
  for_each_vertex(removable, [&](int u) { dmin = std::min(dmin, child.degree(u)); });
  if (child.degree(v) != dmin) return false;
  VertexSet eligible = 0;
  for_each_vertex(removable, [&](int u) {
    if (child.degree(u) == dmin) eligible |= bit(u);
  });
  labelled = false;
  if (eligible == bit(v)) return true;

  *lab_out = canonical_labeling(child);
  labelled = true;
  int m = -1;
  for_each_vertex(eligible, [&](int u) {
    if (m < 0 || lab_out->labeling[u] > lab_out->labeling[m]) m = u;
  });
  return lab_out->orbit[m] == lab_out->orbit[v];
}

void children(PlanarFamily family, const Graph& g, const GraphSink& sink) {
  const int n = g.order();
  const VertexSet full = g.vertices();
  std::unordered_set<std::string> seen;
  Labeling lab;
  for (VertexSet s = 0;; ++s) {
    if (s > full) break;
    if (family == PlanarFamily::Connected && s == 0 && n > 0) continue;
    const Graph child = g.with_vertex(s);
    bool labelled = false;
    if (!is_canonical_child(family, child, n, &lab, labelled)) continue;
    if (!is_planar(child)) continue;
    // children equivalent under Aut(g) collapse to one
    const std::string key = labelled ? encode_graph6(lab.canonical) : canonical_g6(child);
    if (!seen.insert(key).second) continue;
    sink(child);
  }
}

void descend(PlanarFamily family, const Graph& g, int n, const GraphSink& sink) {
  if (g.order() == n) {
    sink(g);
    return;
  }
  children(family, g, [&](const Graph& c) { descend(family, c, n, sink); });
}

Graph root() { return Graph(1); }

}  // namespace

std::vector<Graph> generation_units(PlanarFamily family, int n, int depth) {
  check_order(n);
  const int level = std::max(1, n - std::max(depth, 0));
  std::vector<Graph> out;
  descend(family, root(), level, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void expand_unit(PlanarFamily family, const Graph& unit, int n, const GraphSink& sink) {
  check_order(n);
  descend(family, unit, n, sink);
}

void generate_connected_planar(int n, const GraphSink& sink) {
  for (const Graph& u : generation_units(PlanarFamily::Connected, n)) expand_unit(PlanarFamily::Connected, u, n, sink);
}

std::vector<Graph> generate_connected_planar(int n) {
  std::vector<Graph> out;
  generate_connected_planar(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void generate_planar(int n, const GraphSink& sink) {
  for (const Graph& u : generation_units(PlanarFamily::All, n)) expand_unit(PlanarFamily::All, u, n, sink);
}

std::uint64_t count_planar(PlanarFamily family, int n, int workers) {
  const std::vector<Graph> units = generation_units(family, n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < units.size();) {
      std::uint64_t local = 0;
      expand_unit(family, units[i], n, [&](const Graph&) { ++local; });
      total += local;
    }
  };
  const int w = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int t = 1; t < w; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return total;
}

}  // namespace apexkit
