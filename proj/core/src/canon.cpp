#include "apexkit/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "apexkit/graph6.hpp"

namespace apexkit {

namespace {

using Cells = std::vector<VertexSet>;
using Rows = std::array<VertexSet, Graph::kMaxOrder>;

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent[b] = a;
    } else {
      parent[a] = b;
    }
  }
  std::vector<int> parent;
};

bool discrete(const Cells& cells, int n) { return static_cast<int>(cells.size()) == n; }

// Splits cells against splitters until the partition is equitable.
void refine(const Graph& g, Cells& cells, Cells queue) {
  const int n = g.order();
  std::array<VertexSet, Graph::kMaxOrder + 1> buckets{};
  std::size_t head = 0;
  while (head < queue.size() && !discrete(cells, n)) {
    const VertexSet splitter = queue[head++];
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const VertexSet cell = cells[ci];
      if ((cell & (cell - 1)) == 0) continue;
      int lo = Graph::kMaxOrder + 1;
      int hi = -1;
      for_each_vertex(cell, [&](int v) {
        const int c = popcount(g.neighbors(v) & splitter);
        buckets[c] |= bit(v);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      });
      if (lo == hi) {
        buckets[lo] = 0;
        continue;
      }
      Cells pieces;
      for (int c = lo; c <= hi; ++c) {
        if (buckets[c] != 0) pieces.push_back(buckets[c]);
        buckets[c] = 0;
      }
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());

      auto pending = std::find(queue.begin() + static_cast<std::ptrdiff_t>(head), queue.end(), cell);
      if (pending != queue.end()) {
        queue.erase(pending);
        queue.insert(queue.end(), pieces.begin(), pieces.end());
      } else {
        std::size_t largest = 0;
        for (std::size_t p = 1; p < pieces.size(); ++p) {
          if (popcount(pieces[p]) > popcount(pieces[largest])) largest = p;
        }
        for (std::size_t p = 0; p < pieces.size(); ++p) {
          if (p != largest) queue.push_back(pieces[p]);
        }
      }
      ci += pieces.size() - 1;
    }
  }
}

class Search {
 public:
  Search(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Cells initial) {
    refine(g_, initial, initial);
    std::vector<int> path;
    dfs(std::move(initial), 0, path);
  }

  const std::vector<int>& best_labeling() const { return best_lab_; }
  const Rows& best_rows() const { return best_rows_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  int dfs(Cells cells, int level, std::vector<int>& path) {
    if (discrete(cells, n_)) return leaf(cells, level, path);

    std::size_t target = cells.size();
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const int size = popcount(cells[ci]);
      if (size > 1 && (target == cells.size() || size < popcount(cells[target]))) target = ci;
    }
    const VertexSet cell = cells[target];
    path.push_back(-1);
    bool first_child = true;
    int result = level;
    for_each_vertex(cell, [&](int v) {
      if (result < level) return;
      if (!first_child && has_first_ && level <= static_cast<int>(first_path_.size()) &&
          std::equal(path.begin(), path.begin() + level, first_path_.begin()) &&
          !orbit_minimal(v, path, level)) {
        return;
      }
      first_child = false;
      Cells child = cells;
      child[target] = cell & ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
      refine(g_, child, Cells{bit(v)});
      path[level] = v;
      const int r = dfs(std::move(child), level + 1, path);
      if (r < level) result = r;
    });
    path.pop_back();
    return result;
  }

  // True when no automorphism fixing the path prefix maps a smaller vertex onto v.
  bool orbit_minimal(int v, const std::vector<int>& path, int level) {
    UnionFind uf(n_);
    for (const Permutation& gamma : generators_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = gamma[path[i]] == path[i];
      if (!fixes) continue;
      for (int u = 0; u < n_; ++u) uf.unite(u, gamma[u]);
    }
    return uf.find(v) == v;
  }

  int leaf(const Cells& cells, int level, const std::vector<int>& path) {
    std::vector<int> lab(n_);
    for (int pos = 0; pos < n_; ++pos) lab[lowest(cells[pos])] = pos;
    Rows rows{};
    for (int u = 0; u < n_; ++u) {
      VertexSet row = 0;
      for_each_vertex(g_.neighbors(u), [&](int v) { row |= bit(lab[v]); });
      rows[lab[u]] = row;
    }

    if (!has_first_) {
      has_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_rows_ = best_rows_ = rows;
      first_path_ = best_path_ = path;
      return level;
    }
    if (same(rows, first_rows_)) {
      record_automorphism(first_lab_, lab);
      return divergence(path, first_path_);
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) {
      record_automorphism(best_lab_, lab);
      return divergence(path, best_path_);
    }
    if (cmp > 0) {
      best_lab_ = lab;
      best_rows_ = rows;
      best_path_ = path;
    }
    return level;
  }

  bool same(const Rows& a, const Rows& b) const { return std::equal(a.begin(), a.begin() + n_, b.begin()); }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  }

  void record_automorphism(const std::vector<int>& reference, const std::vector<int>& lab) {
    std::vector<int> inverse(n_);
    for (int v = 0; v < n_; ++v) inverse[reference[v]] = v;
    Permutation gamma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inverse[lab[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  const Graph& g_;
  int n_;
  bool has_first_ = false;
  std::vector<int> first_lab_, best_lab_;
  Rows first_rows_{}, best_rows_{};
  std::vector<int> first_path_, best_path_;
  std::vector<Permutation> generators_;
};

}  // namespace

Labeling canonical_labeling(const Graph& g, std::span<const VertexSet> colouring) {
  const int n = g.order();
  Labeling out;
  if (n == 0) {
    out.canonical = g;
    return out;
  }
  Cells initial;
  if (colouring.empty()) {
    initial.push_back(g.vertices());
  } else {
    for (VertexSet c : colouring) {
      if (c != 0) initial.push_back(c);
    }
  }

  Search search(g);
  search.run(initial);
  out.labeling = search.best_labeling();
  out.canonical = g.relabeled(out.labeling);
  out.generators = search.generators();

  UnionFind uf(n);
  for (const Permutation& gamma : out.generators) {
    for (int v = 0; v < n; ++v) uf.unite(v, gamma[v]);
  }
  out.orbit.resize(n);
  for (int v = 0; v < n; ++v) out.orbit[v] = uf.find(v);
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  Labeling lab = canonical_labeling(g);
  return {std::move(lab.labeling), encode_graph6(lab.canonical)};
}

std::string canonical_g6(const Graph& g) { return encode_graph6(canonical_labeling(g).canonical); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_labeling(a).canonical == canonical_labeling(b).canonical;
}

std::optional<std::vector<Permutation>> enumerate_group(std::span<const Permutation> gens, int n,
                                                        std::size_t limit) {
  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Permutation> seen{identity};
  std::vector<Permutation> elements{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& g : gens) {
      Permutation next(n);
      for (int v = 0; v < n; ++v) next[v] = g[elements[i][v]];
      if (seen.insert(next).second) {
        if (elements.size() >= limit) return std::nullopt;
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace apexkit
