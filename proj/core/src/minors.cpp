#include "apexkit/minors.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "apexkit/canon.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/graph6.hpp"

namespace apexkit {

namespace {

// Backtracking monomorphism of h into g. With spanning set, both have the same order.
class Embedder {
 public:
  Embedder(const Graph& g, const Graph& h) : g_(g), h_(h) {
    const int n = h.order();
    VertexSet placed = 0;
    while (static_cast<int>(order_.size()) < n) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < n; ++v) {
        if (contains(placed, v)) continue;
        const int links = popcount(h.neighbors(v) & placed);
        if (links > best_links || (links == best_links && h.degree(v) > h.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
    image_.assign(n, -1);
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t i, VertexSet used) {
    if (i == order_.size()) return true;
    const int v = order_[i];
    VertexSet cand = g_.vertices() & ~used;
    for_each_vertex(h_.neighbors(v), [&](int w) {
      if (image_[w] >= 0) cand &= g_.neighbors(image_[w]);
    });
    const int need = h_.degree(v);
    while (cand != 0) {
      const int x = lowest(cand);
      cand &= cand - 1;
      if (g_.degree(x) < need) continue;
      image_[v] = x;
      if (extend(i + 1, used | bit(x))) return true;
      image_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> order_;
  std::vector<int> image_;
};

bool degree_dominates(const Graph& g, const Graph& h) {
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.rbegin(), dg.rend());
  std::sort(dh.rbegin(), dh.rend());
  for (std::size_t i = 0; i < dh.size(); ++i) {
    if (i >= dg.size() || dg[i] < dh[i]) return false;
  }
  return true;
}

std::map<std::string, Graph, std::less<>> build_patterns() {
  std::map<std::string, Graph, std::less<>> p;
  p["K5"] = Graph::complete(5);
  p["K6"] = Graph::complete(6);
  p["K33"] = Graph::complete_bipartite(3, 3);
  Graph k33e = Graph::complete_bipartite(3, 3);
  k33e.add_edge(0, 1);
  p["K33_plus_e"] = k33e;
  p["K5_minus_e"] = Graph::complete(5).without_edge(3, 4);
  p["K33_minus_e"] = Graph::complete_bipartite(3, 3).without_edge(0, 3);
  p["Petersen"] = Graph::petersen();

  // K5-e on 0..4 (x=3, y=4 non-adjacent); edge 0-1 subdivided by s=5;
  // abar=6 on s and 2; b=7 on x, y, abar.
  Graph m = Graph::complete(5).without_edge(3, 4).without_edge(0, 1).with_vertex(bit(0) | bit(1));
  m = m.with_vertex(bit(5) | bit(2));
  m = m.with_vertex(bit(3) | bit(4) | bit(6));
  p["M"] = m;

  // K5-e, abar=5 on the three degree-4 vertices, b=6 on x, y, abar.
  Graph y = Graph::complete(5).without_edge(3, 4).with_vertex(bit(0) | bit(1) | bit(2));
  p["Y_minus"] = y.with_vertex(bit(3) | bit(4) | bit(5));

  // K6 with the triangle 0,1,2 replaced by a claw.
  Graph p7 = Graph::complete(6).without_edge(0, 1).without_edge(0, 2).without_edge(1, 2);
  p7 = p7.with_vertex(bit(0) | bit(1) | bit(2));
  p["P7"] = p7;
  // P7 with the triangle 0,3,4 replaced by a claw (the triangle 3,4,5 would give K4,4-e).
  Graph p8 = p7.without_edge(0, 3).without_edge(0, 4).without_edge(3, 4);
  p["P8"] = p8.with_vertex(bit(0) | bit(3) | bit(4));

  // K3,3-e (parts 0,1,2 / 3,4,5, missing 0-3), edge 1-4 subdivided by 6,
  // abar=7 on 2, 5, 6, b=8 on 0, 3, abar.
  Graph p9 = Graph::complete_bipartite(3, 3).without_edge(0, 3).without_edge(1, 4).with_vertex(bit(1) | bit(4));
  p9 = p9.with_vertex(bit(2) | bit(5) | bit(6));
  p["P9"] = p9.with_vertex(bit(0) | bit(3) | bit(7));

  p["K331"] = Graph::complete_bipartite(3, 3).with_vertex(first_n(6));
  p["K44_minus_e"] = Graph::complete_bipartite(4, 4).without_edge(0, 4);
  return p;
}

const std::map<std::string, Graph, std::less<>>& patterns() {
  static const auto table = build_patterns();
  return table;
}

}  // namespace

int cycle_rank(const Graph& g) { return g.size() - g.order() + static_cast<int>(components(g).size()); }

bool has_subgraph(const Graph& g, const Graph& h) {
  if (h.order() > g.order() || h.size() > g.size()) return false;
  if (!degree_dominates(g, h)) return false;
  return Embedder(g, h).run();
}

bool has_minor(const Graph& g, const Graph& h) {
  if (h.order() == 0) return true;
  if (h.order() > g.order() || h.size() > g.size()) return false;
  const int rank_h = cycle_rank(h);
  if (cycle_rank(g) < rank_h) return false;
  if (has_subgraph(g, h)) return true;

  std::vector<Graph> level{g};
  for (int k = g.order(); k > h.order(); --k) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> next;
    const auto offer = [&](const Graph& child) {
      if (child.size() < h.size() || cycle_rank(child) < rank_h) return;
      Labeling lab = canonical_labeling(child);
      if (seen.insert(encode_graph6(lab.canonical)).second) next.push_back(std::move(lab.canonical));
    };
    for (const Graph& f : level) {
      for (int v = 0; v < f.order(); ++v) {
        if (f.degree(v) == 0) offer(f.without_vertex(v));
      }
      for (const Edge& e : f.edges()) offer(f.contracted(e.u, e.v));
    }
    if (next.empty()) return false;
    level = std::move(next);
  }
  for (const Graph& f : level) {
    if (degree_dominates(f, h) && Embedder(f, h).run()) return true;
  }
  return false;
}

MinorClosedReport minor_closed_check(std::span<const Graph> list) {
  if (list.empty()) throw Error("minor_closed_check needs a non-empty list");
  MinorClosedReport report;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (i != j && has_minor(list[j], list[i])) report.violations.emplace_back(i, j);
    }
  }
  return report;
}

const Graph& minor_pattern(std::string_view name) {
  const auto& table = patterns();
  const auto it = table.find(name);
  if (it == table.end()) throw Error("unknown pattern " + std::string(name));
  return it->second;
}

std::vector<std::string> minor_pattern_names() {
  std::vector<std::string> out;
  for (const auto& [name, g] : patterns()) out.push_back(name);
  return out;
}

}  // namespace apexkit
