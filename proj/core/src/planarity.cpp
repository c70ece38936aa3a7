#include "apexkit/planarity.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "apexkit/errors.hpp"

namespace apexkit {

namespace {

// Left-right planarity test (de Fraysseix, Ossona de Mendez, Rosenstiehl),
// decision only. Oriented edges get compact ids in creation order.
class LeftRight {
 public:
  explicit LeftRight(const Graph& g) : g_(g), n_(g.order()) {}

  bool run() {
    height_.fill(-1);
    parent_edge_.fill(-1);
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == -1) {
        height_[v] = 0;
        roots_[root_count_++] = v;
        orient(v);
      }
    }
    for (int v = 0; v < n_; ++v) {
      std::stable_sort(out_[v].begin(), out_[v].begin() + out_count_[v],
                       [&](int a, int b) { return nesting_[a] < nesting_[b]; });
    }
    std::fill(ref_.begin(), ref_.begin() + edge_count_, -1);
    for (int r = 0; r < root_count_; ++r) {
      if (!test(roots_[r])) return false;
    }
    return true;
  }

 private:
  static constexpr int kMaxEdges = 3 * Graph::kMaxOrder;

  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    Interval left, right;
  };

  void orient(int v) {
    const int e = parent_edge_[v];
    for_each_vertex(g_.neighbors(v), [&](int w) {
      if (contains(oriented_[v], w)) return;
      oriented_[v] |= bit(w);
      oriented_[w] |= bit(v);
      const int vw = edge_count_++;
      to_[vw] = w;
      from_[vw] = v;
      out_[v][out_count_[v]++] = vw;
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == -1) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);
      if (e != -1) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    });
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    for (int k = 0; k < out_count_[v]; ++k) {
      const int ei = out_[v][k];
      const int w = to_[ei];
      stack_bottom_[ei] = top_;
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_[top_++] = ConflictPair{{}, {ei, ei}};
      }
      if (lowpt_[ei] < height_[v]) {
        if (k == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != -1) remove_back_edges(e);
    return true;
  }

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void set_ref(int edge, int value) {
    if (edge != -1) ref_[edge] = value;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_[--top_];
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          set_ref(p.right.low, q.right.high);
        }
        p.right.low = q.right.low;
      } else {
        set_ref(q.right.low, lowpt_edge_[e]);
      }
    } while (top_ > stack_bottom_[ei]);

    while (top_ > 0 && (conflicting(stack_[top_ - 1].left, ei) || conflicting(stack_[top_ - 1].right, ei))) {
      ConflictPair q = stack_[--top_];
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != -1) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        set_ref(p.left.low, q.left.high);
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_[top_++] = p;
    return true;
  }

  void remove_back_edges(int e) {
    const int u = from_[e];
    while (top_ > 0 && lowest(stack_[top_ - 1]) == height_[u]) --top_;
    if (top_ > 0) {
      ConflictPair& p = stack_[top_ - 1];
      while (p.left.high != -1 && to_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == -1 && p.left.low != -1) {
        ref_[p.left.low] = p.right.low;
        p.left.low = -1;
      }
      while (p.right.high != -1 && to_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == -1 && p.right.low != -1) {
        ref_[p.right.low] = p.left.low;
        p.right.low = -1;
      }
    }
    if (lowpt_[e] < height_[u] && top_ > 0) {
      const int hl = stack_[top_ - 1].left.high;
      const int hr = stack_[top_ - 1].right.high;
      ref_[e] = (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, Graph::kMaxOrder> height_;
  std::array<int, Graph::kMaxOrder> parent_edge_;
  std::array<VertexSet, Graph::kMaxOrder> oriented_{};
  std::array<int, Graph::kMaxOrder> roots_;
  int root_count_ = 0;
  std::array<std::array<int, Graph::kMaxOrder>, Graph::kMaxOrder> out_;
  std::array<int, Graph::kMaxOrder> out_count_{};
  int edge_count_ = 0;
  std::array<int, kMaxEdges> from_, to_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_, stack_bottom_;
  std::array<ConflictPair, kMaxEdges> stack_;
  int top_ = 0;
};

// Branching state for enumerate_kuratowski.
class KuratowskiEnumerator {
 public:
  KuratowskiEnumerator(const Graph& g, std::size_t cap) : edges_(g.edges()), cap_(cap), n_(g.order()) {}

  KuratowskiEnumeration run(const Graph& g) {
    if (!is_planar(g)) recurse(0, g, Graph(n_));
    return std::move(result_);
  }

 private:
  void recurse(std::size_t i, const Graph& current, const Graph& kept) {
    if (result_.truncated) return;
    if (i == edges_.size()) {
      emit(kept);
      return;
    }
    const Edge e = edges_[i];
    const Graph without = current.without_edge(e.u, e.v);
    const bool removable = !is_planar(without);
    if (removable) recurse(i + 1, without, kept);
    if (result_.truncated) return;

    Graph kept2 = kept;
    kept2.add_edge(e.u, e.v);
    if (kept2.degree(e.u) > 4 || kept2.degree(e.v) > 4) return;
    if (!is_planar(kept2)) {
      emit(kept2);
      return;
    }
    if (dead_end(i + 1, current, kept2)) return;
    recurse(i + 1, current, kept2);
  }

  // A kept vertex of degree 1 with no undecided edge left can never reach degree 2.
  bool dead_end(std::size_t next, const Graph& current, const Graph& kept) const {
    VertexSet open = 0;
    for (std::size_t j = next; j < edges_.size(); ++j) {
      const Edge& f = edges_[j];
      if (current.has_edge(f.u, f.v)) open |= bit(f.u) | bit(f.v);
    }
    for (int v = 0; v < n_; ++v) {
      if (kept.degree(v) == 1 && !contains(open, v)) return true;
    }
    return false;
  }

  void emit(const Graph& kept) {
    for (const Edge& e : kept.edges()) {
      if (!is_planar(kept.without_edge(e.u, e.v))) return;
    }
    if (result_.witnesses.size() >= cap_) {
      result_.truncated = true;
      return;
    }
    result_.witnesses.push_back(witness_from_subdivision(kept));
  }

  std::vector<Edge> edges_;
  std::size_t cap_;
  int n_;
  KuratowskiEnumeration result_;
};

}  // namespace

std::string to_string(KuratowskiKind kind) { return kind == KuratowskiKind::K5 ? "K5" : "K33"; }

VertexSet KuratowskiWitness::vertex_set() const {
  VertexSet s = 0;
  for (const auto& p : paths) s |= to_set(p);
  return s;
}

std::vector<Edge> KuratowskiWitness::edges() const {
  std::vector<Edge> out;
  for (const auto& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int KuratowskiWitness::edge_count() const {
  int m = 0;
  for (const auto& p : paths) m += static_cast<int>(p.size()) - 1;
  return m;
}

Graph KuratowskiWitness::as_graph(int n) const {
  Graph g(n);
  for (const Edge& e : edges()) g.add_edge(e.u, e.v);
  return g;
}

bool is_planar(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (n <= 4 || m <= 8) return true;
  if (m > 3 * n - 6) return false;
  LeftRight lr(g);
  return lr.run();
}

KuratowskiWitness witness_from_subdivision(const Graph& g) {
  KuratowskiWitness w;
  VertexSet branch = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 1 || d > 4) throw Error("not a Kuratowski subdivision: vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    if (d >= 3) branch |= bit(v);
  }
  const int branch_count = popcount(branch);
  if (branch_count == 5) {
    w.kind = KuratowskiKind::K5;
  } else if (branch_count == 6) {
    w.kind = KuratowskiKind::K33;
  } else {
    throw Error("not a Kuratowski subdivision: " + std::to_string(branch_count) + " branch vertices");
  }
  w.branch = to_vector(branch);
  for (int b : w.branch) {
    for_each_vertex(g.neighbors(b), [&](int x) {
      std::vector<int> path{b};
      int prev = b;
      int cur = x;
      while (!contains(branch, cur)) {
        path.push_back(cur);
        const VertexSet next = g.neighbors(cur) & ~bit(prev);
        if (popcount(next) != 1) throw Error("not a Kuratowski subdivision: broken path");
        prev = cur;
        cur = lowest(next);
      }
      path.push_back(cur);
      if (b < cur) w.paths.push_back(std::move(path));
    });
  }
  std::sort(w.paths.begin(), w.paths.end());
  const std::string problem = validate_witness(g, w);
  if (!problem.empty()) throw Error("not a Kuratowski subdivision: " + problem);
  if (w.edge_count() != g.size()) throw Error("not a Kuratowski subdivision: stray edges");
  return w;
}

std::optional<KuratowskiWitness> kuratowski_witness(const Graph& g) {
  if (is_planar(g)) return std::nullopt;
  Graph work = g;
  const std::vector<Edge> edges = g.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    const Graph smaller = work.without_edge(it->u, it->v);
    if (!is_planar(smaller)) work = smaller;
  }
  return witness_from_subdivision(work);
}

std::optional<KuratowskiWitness> kuratowski_avoiding(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw VertexAbsent("vertex " + std::to_string(v) + " not in graph");
  return kuratowski_witness(g.isolate(v));
}

KuratowskiEnumeration enumerate_kuratowski(const Graph& g, std::size_t cap) {
  if (cap == 0) throw Error("enumerate_kuratowski needs cap >= 1");
  KuratowskiEnumerator e(g, cap);
  return e.run(g);
}

std::string validate_witness(const Graph& host, const KuratowskiWitness& w) {
  const std::size_t want_branch = w.kind == KuratowskiKind::K5 ? 5 : 6;
  const std::size_t want_paths = w.kind == KuratowskiKind::K5 ? 10 : 9;
  if (w.branch.size() != want_branch) return "wrong number of branch vertices";
  if (w.paths.size() != want_paths) return "wrong number of paths";
  const VertexSet branch = w.branch_set();
  if (popcount(branch) != static_cast<int>(want_branch)) return "repeated branch vertex";
  for (int b : w.branch) {
    if (b < 0 || b >= host.order()) return "branch vertex outside host";
  }

  VertexSet interiors = 0;
  std::map<std::pair<int, int>, int> pair_count;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return "path too short";
    if (!contains(branch, p.front()) || !contains(branch, p.back())) return "path does not join branch vertices";
    if (p.front() == p.back()) return "path is a loop";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= host.order() || p[i + 1] < 0 || p[i + 1] >= host.order()) return "path vertex outside host";
      if (!host.has_edge(p[i], p[i + 1])) return "path uses a non-edge";
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (contains(branch, p[i])) return "path passes through a branch vertex";
      if (contains(interiors, p[i])) return "paths share an internal vertex";
      interiors |= bit(p[i]);
    }
    ++pair_count[{std::min(p.front(), p.back()), std::max(p.front(), p.back())}];
  }
  for (const auto& [pair, count] : pair_count) {
    if (count != 1) return "two paths join the same branch pair";
  }

  if (w.kind == KuratowskiKind::K5) {
    if (pair_count.size() != 10) return "K5 branch pairs incomplete";
    return {};
  }
  // K3,3: colour the branch vertices from the paths.
  std::map<int, int> colour{{w.branch.front(), 0}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [pair, count] : pair_count) {
      const auto [a, b] = pair;
      const bool has_a = colour.count(a) != 0;
      const bool has_b = colour.count(b) != 0;
      if (has_a && has_b) {
        if (colour[a] == colour[b]) return "K33 paths join same-colour branch vertices";
      } else if (has_a || has_b) {
        if (has_a) colour[b] = 1 - colour[a];
        if (has_b) colour[a] = 1 - colour[b];
        changed = true;
      }
    }
  }
  if (colour.size() != 6) return "K33 branch graph disconnected";
  int zeros = 0;
  for (const auto& [v, c] : colour) zeros += c == 0 ? 1 : 0;
  if (zeros != 3) return "K33 colour classes are not 3+3";
  return {};
}

}  // namespace apexkit
