#include "apexkit/apex.hpp"

#include <algorithm>
#include <set>

#include "apexkit/canon.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/graph6.hpp"

namespace apexkit {

namespace {

std::string edge_name(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Some apex of g, trying `hint` first; -1 if none.
int find_apex(const Graph& g, int hint) {
  if (hint >= 0 && hint < g.order() && is_planar(g.isolate(hint))) return hint;
  for (int v = 0; v < g.order(); ++v) {
    if (v != hint && is_planar(g.isolate(v))) return v;
  }
  return -1;
}

// Checked after the apex test: a non-apex graph with an isolated vertex is not minimal.
std::optional<std::string> isolated_failure(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return "isolated vertex " + std::to_string(v);
  }
  return std::nullopt;
}

}  // namespace

VertexSet apex_set(const Graph& g) {
  if (is_planar(g)) return g.vertices();
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (is_planar(g.isolate(v))) out |= bit(v);
  }
  return out;
}

bool is_apex(const Graph& g) { return find_apex(g, -1) >= 0 || g.order() == 0; }

std::optional<std::string> obstruction_failure(const Graph& g) {
  if (g.order() == 0) return "apex: empty graph";
  for (int v = 0; v < g.order(); ++v) {
    if (is_planar(g.isolate(v))) return "apex: vertex " + std::to_string(v);
  }
  if (auto s = isolated_failure(g)) return s;
  int hint = -1;
  for (const Edge& e : g.edges()) {
    hint = find_apex(g.without_edge(e.u, e.v), hint);
    if (hint < 0) return "edge " + edge_name(e) + ": deletion is not apex";
  }
  hint = -1;
  for (const Edge& e : g.edges()) {
    hint = find_apex(g.contracted(e.u, e.v), hint);
    if (hint < 0) return "edge " + edge_name(e) + ": contraction is not apex";
  }
  return std::nullopt;
}

ObstructionResult is_obstruction(const Graph& g) {
  ObstructionResult result;
  if (g.order() == 0) {
    result.reason = "apex: empty graph";
    return result;
  }
  ObstructionCertificate cert;
  for (int v = 0; v < g.order(); ++v) {
    auto w = kuratowski_avoiding(g, v);
    if (!w) {
      result.reason = "apex: vertex " + std::to_string(v);
      return result;
    }
    cert.non_apex.push_back(std::move(*w));
  }
  if (auto s = isolated_failure(g)) {
    result.reason = *s;
    return result;
  }
  int del_hint = -1;
  int con_hint = -1;
  for (const Edge& e : g.edges()) {
    EdgeEvidence ev{e, -1, -1};
    ev.deletion_apex = del_hint = find_apex(g.without_edge(e.u, e.v), del_hint);
    if (ev.deletion_apex < 0) {
      result.reason = "edge " + edge_name(e) + ": deletion is not apex";
      return result;
    }
    ev.contraction_apex = con_hint = find_apex(g.contracted(e.u, e.v), con_hint);
    if (ev.contraction_apex < 0) {
      result.reason = "edge " + edge_name(e) + ": contraction is not apex";
      return result;
    }
    cert.edges.push_back(ev);
  }
  result.certificate = std::move(cert);
  return result;
}

std::string validate_certificate(const Graph& g, const ObstructionCertificate& cert) {
  if (static_cast<int>(cert.non_apex.size()) != g.order()) return "non-apex evidence does not cover every vertex";
  for (int v = 0; v < g.order(); ++v) {
    const KuratowskiWitness& w = cert.non_apex[v];
    if (contains(w.vertex_set(), v)) return "witness for vertex " + std::to_string(v) + " uses it";
    const std::string problem = validate_witness(g, w);
    if (!problem.empty()) return "witness for vertex " + std::to_string(v) + ": " + problem;
    if (is_planar(w.as_graph(g.order()))) return "witness for vertex " + std::to_string(v) + " is planar";
  }
  const std::vector<Edge> edges = g.edges();
  if (cert.edges.size() != edges.size()) return "edge evidence does not cover every edge";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeEvidence& ev = cert.edges[i];
    if (!(ev.edge == edges[i])) return "edge evidence out of order";
    const Graph del = g.without_edge(ev.edge.u, ev.edge.v);
    const Graph con = g.contracted(ev.edge.u, ev.edge.v);
    if (ev.deletion_apex < 0 || ev.deletion_apex >= del.order() || !is_planar(del.isolate(ev.deletion_apex))) {
      return "deletion apex for " + edge_name(ev.edge) + " does not planarize";
    }
    if (ev.contraction_apex < 0 || ev.contraction_apex >= con.order() || !is_planar(con.isolate(ev.contraction_apex))) {
      return "contraction apex for " + edge_name(ev.edge) + " does not planarize";
    }
  }
  return {};
}

std::vector<std::string> kuratowski_graphs(int max_order) {
  std::set<std::string> all;
  std::vector<Graph> frontier;
  for (const Graph& base : {Graph::complete(5), Graph::complete_bipartite(3, 3)}) {
    if (base.order() > max_order) continue;
    const Labeling lab = canonical_labeling(base);
    if (all.insert(encode_graph6(lab.canonical)).second) frontier.push_back(lab.canonical);
  }
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& g : frontier) {
      if (g.order() + 1 > max_order) continue;
      for (const Edge& e : g.edges()) {
        const Graph s = g.without_edge(e.u, e.v).with_vertex(bit(e.u) | bit(e.v));
        const Labeling lab = canonical_labeling(s);
        if (all.insert(encode_graph6(lab.canonical)).second) next.push_back(lab.canonical);
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

std::vector<std::string> disconnected_obstructions(int max_order) {
  if (max_order < 10) throw ConfigInvalid("disconnected search needs max_order >= 10");
  const std::vector<std::string> parts = kuratowski_graphs(max_order - 5);
  std::set<std::string> found;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph a = decode_graph6(parts[i]);
    for (std::size_t j = i; j < parts.size(); ++j) {
      const Graph b = decode_graph6(parts[j]);
      if (a.order() + b.order() > max_order) continue;
      const Graph u = Graph::disjoint_union(a, b);
      if (!obstruction_failure(u)) found.insert(canonical_g6(u));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace apexkit
