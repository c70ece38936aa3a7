#include "apexkit/audit.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "apexkit/canon.hpp"
#include "apexkit/connectivity.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/planarity.hpp"
#include "apexkit/structure2.hpp"

namespace apexkit {

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Pass: return "pass";
    case AuditStatus::Fail: return "fail";
    case AuditStatus::Truncated: return "truncated";
  }
  return "?";
}

int AuditReport::count(AuditStatus s) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [s](const AuditRow& r) { return r.status == s; }));
}

const std::vector<std::string>& audit_check_names() {
  static const std::vector<std::string> names = {
      "min_degree_3",  "two_components",       "augment_nonplanar", "light_iso",
      "witness_overlap", "witness_triples",    "edge_cover",        "unique_cut_structure",
      "basic_lemma",   "branch_vertices",      "branch_cover",      "nonbranch_degree"};
  return names;
}

namespace {

struct Row {
  AuditStatus status = AuditStatus::Pass;
  std::string evidence;
};

Row pass(std::string e) { return {AuditStatus::Pass, std::move(e)}; }
Row fail(std::string e) { return {AuditStatus::Fail, std::move(e)}; }
Row vacuous() { return pass("vacuous"); }

std::string edge_name(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }
std::string cut_name(int a, int b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

// witness with per-vertex adjacency inside the witness
struct Wit {
  VertexSet verts = 0;
  VertexSet branch = 0;
  std::vector<VertexSet> adj;
  int edges = 0;

  bool has_edge(int u, int v) const { return contains(adj[u], v); }
};

struct WitList {
  std::vector<Wit> items;
  bool truncated = false;
};

class WitnessCache {
 public:
  WitnessCache(const Graph& g, std::size_t cap) : g_(g), cap_(cap), lists_(g.order()) {}

  // Kuratowski subgraphs of g - v
  const WitList& avoiding(int v) {
    auto& slot = lists_[v];
    if (!slot) {
      WitList out;
      const auto en = enumerate_kuratowski(g_.isolate(v), cap_);
      out.truncated = en.truncated;
      for (const auto& w : en.witnesses) {
        Wit x;
        x.verts = w.vertex_set();
        x.branch = w.branch_set();
        x.adj.assign(g_.order(), 0);
        for (const Edge& e : w.edges()) {
          x.adj[e.u] |= bit(e.v);
          x.adj[e.v] |= bit(e.u);
          ++x.edges;
        }
        out.items.push_back(std::move(x));
      }
      slot = std::move(out);
    }
    return *slot;
  }

 private:
  const Graph& g_;
  std::size_t cap_;
  std::vector<std::optional<WitList>> lists_;
};

bool planar_minus(const Graph& g, VertexSet removed) { return is_planar(g.isolate_set(removed)); }

bool planar_minus(const Graph& g, VertexSet removed, const Edge& e) {
  return is_planar(g.without_edge(e.u, e.v).isolate_set(removed));
}

// merges v into u; v keeps its index as an isolated vertex
Graph merge(const Graph& g, int u, int v) {
  Graph h = g;
  for_each_vertex(g.neighbors(v), [&](int x) {
    if (x != u) h.add_edge(u, x);
  });
  return h.isolate(v);
}

// hypotheses shared by the unique-cut lemmas
struct UniqueCut {
  int a = -1;
  int b = -1;
  VertexSet heavy = 0;
  VertexSet light = 0;
};

std::optional<UniqueCut> unique_cut(const Graph& g) {
  try {
    if (connectivity(g) != 2) return std::nullopt;
    const auto cuts = enumerate_two_cuts(g);
    if (cuts.size() != 1 || cuts[0].components.size() != 2) return std::nullopt;
    const VertexSet c = cuts[0].cut;
    const TwoCutRecord r = analyze_cut(g, lowest(c), lowest(c & (c - 1)));
    if (!r.heavy_induced_planar) return std::nullopt;
    return UniqueCut{r.a, r.b, r.heavy, r.light};
  } catch (const Error&) {
    return std::nullopt;
  }
}

Row check_min_degree(const Graph& g) {
  const int d = g.order() ? g.min_degree() : 0;
  std::string ev = "min degree " + std::to_string(d);
  return d >= 3 ? pass(ev) : fail(ev);
}

Row check_two_components(const Graph& g) {
  if (connectivity(g) != 2) return vacuous();
  const auto cuts = enumerate_two_cuts(g);
  for (const auto& c : cuts) {
    if (c.components.size() != 2) {
      return fail(cut_name(lowest(c.cut), lowest(c.cut & (c.cut - 1))) + " leaves " + std::to_string(c.components.size()) +
                  " components");
    }
  }
  return pass(std::to_string(cuts.size()) + " 2-cuts, 2 components each");
}

Row check_augment_nonplanar(const Graph& g) {
  if (connectivity(g) != 2) return vacuous();
  const auto cuts = enumerate_two_cuts(g);
  for (const auto& c : cuts) {
    const int a = lowest(c.cut), b = lowest(c.cut & (c.cut - 1));
    for (VertexSet comp : c.components) {
      if (is_planar(augmented_component(g, comp, a, b))) {
        return fail("augmentation of component " + std::to_string(lowest(comp)) + " at " + cut_name(a, b) + " is planar");
      }
    }
  }
  return pass(std::to_string(cuts.size()) + " 2-cuts, all augmentations non-planar");
}

Row check_light_iso(const Graph& g) {
  if (connectivity(g) != 2) return vacuous();
  std::string ev;
  for (const auto& r : basic_cuts(g)) {
    if (r.light_aug_kind == LightKind::Other) return fail("light augmentation at " + cut_name(r.a, r.b) + " is not K5, K33 or K33e");
    if (!ev.empty()) ev += ' ';
    ev += cut_name(r.a, r.b) + ":" + to_string(r.light_aug_kind);
  }
  return pass(ev);
}

// Two vertex-disjoint Kuratowski subgraphs H_u, H_v exist iff some Kuratowski
// subgraph K leaves G - V(K) non-planar. Every K missing a vertex shows up in
// the per-vertex lists; a spanning K leaves nothing behind.
Row check_witness_overlap(const Graph& g, WitnessCache& cache) {
  if (connectivity(g) < 2) return vacuous();
  bool truncated = false;
  std::size_t checked = 0;
  for (int v = 0; v < g.order(); ++v) {
    const WitList& list = cache.avoiding(v);
    truncated |= list.truncated;
    for (std::size_t i = 0; i < list.items.size(); ++i) {
      ++checked;
      if (!planar_minus(g, list.items[i].verts)) {
        return fail("G minus witness " + std::to_string(i) + " avoiding " + std::to_string(v) + " is non-planar");
      }
    }
  }
  std::string ev = std::to_string(checked) + " witnesses, complement planar";
  return truncated ? Row{AuditStatus::Truncated, ev + ", enumeration capped"} : pass(ev);
}

Row check_witness_triples(const Graph& g, WitnessCache& cache, const AuditOptions& opt) {
  if (connectivity(g) < 2) return vacuous();
  const int n = g.order();
  std::vector<int> holders;
  for (int v = 0; v < n; ++v) {
    if (!cache.avoiding(v).items.empty()) holders.push_back(v);
  }
  if (holders.size() < 3) return vacuous();

  std::vector<VertexSet> all_adj(g.rows().begin(), g.rows().end());
  std::size_t tested = 0;
  auto test = [&](const Wit& x, const Wit& y, const Wit& z, int u, int v, int w) -> std::optional<std::string> {
    if (x.verts & y.verts & z.verts) return std::nullopt;
    ++tested;
    const std::string who = "triple avoiding " + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w);
    for (int p = 0; p < n; ++p) {
      if ((x.adj[p] | y.adj[p] | z.adj[p]) != all_adj[p]) return who + ": edges not covered at vertex " + std::to_string(p);
    }
    const Wit* ws[3] = {&x, &y, &z};
    for (int k = 0; k < 3; ++k) {
      const VertexSet only = ws[k]->verts & ~ws[(k + 1) % 3]->verts & ~ws[(k + 2) % 3]->verts;
      if (only & ~ws[k]->branch) return who + ": private vertex " + std::to_string(lowest(only & ~ws[k]->branch)) + " not branch";
    }
    return std::nullopt;
  };

  // exhaustive when the triple space fits in the sample budget
  double space = 0;
  for (std::size_t i = 0; i < holders.size(); ++i)
    for (std::size_t j = i + 1; j < holders.size(); ++j)
      for (std::size_t k = j + 1; k < holders.size(); ++k)
        space += double(cache.avoiding(holders[i]).items.size()) * double(cache.avoiding(holders[j]).items.size()) *
                 double(cache.avoiding(holders[k]).items.size());
  bool any_truncated = false;
  for (int v : holders) any_truncated |= cache.avoiding(v).truncated;

  if (space <= double(opt.triple_samples) && !any_truncated) {
    for (std::size_t i = 0; i < holders.size(); ++i)
      for (std::size_t j = i + 1; j < holders.size(); ++j)
        for (std::size_t k = j + 1; k < holders.size(); ++k)
          for (const Wit& x : cache.avoiding(holders[i]).items)
            for (const Wit& y : cache.avoiding(holders[j]).items)
              for (const Wit& z : cache.avoiding(holders[k]).items)
                if (auto bad = test(x, y, z, holders[i], holders[j], holders[k])) return fail(*bad);
    return pass("exhaustive, " + std::to_string(tested) + " triples with empty intersection");
  }

  std::mt19937_64 rng(opt.seed);
  auto pick = [&](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); };
  const std::size_t draws = opt.triple_samples;
  for (std::size_t s = 0; s < draws; ++s) {
    std::size_t i = pick(holders.size()), j = pick(holders.size() - 1), k = pick(holders.size() - 2);
    // three distinct holders
    if (j >= i) ++j;
    std::size_t lo = std::min(i, j), hi = std::max(i, j);
    if (k >= lo) ++k;
    if (k >= hi) ++k;
    const int u = holders[i], v = holders[j], w = holders[k];
    const auto& lu = cache.avoiding(u).items;
    const auto& lv = cache.avoiding(v).items;
    const auto& lw = cache.avoiding(w).items;
    if (auto bad = test(lu[pick(lu.size())], lv[pick(lv.size())], lw[pick(lw.size())], u, v, w)) return fail(*bad);
  }
  return {AuditStatus::Truncated,
          "sampled " + std::to_string(draws) + " triples, " + std::to_string(tested) + " with empty intersection"};
}

// Some H_a misses e iff G - a - e is non-planar, so the universal statement
// over all pairs reduces to one planarity test per side and edge.
Row check_edge_cover(const Graph& g) {
  if (connectivity(g) != 2) return vacuous();
  std::size_t edges = 0;
  const auto cuts = basic_cuts(g);
  for (const auto& r : cuts) {
    for (const Edge& e : g.edges()) {
      if (!contains(r.heavy, e.u) || !contains(r.heavy, e.v)) continue;
      ++edges;
      if (!planar_minus(g, bit(r.a), e) && !planar_minus(g, bit(r.b), e)) {
        return fail("edge " + edge_name(e.u, e.v) + " of C at " + cut_name(r.a, r.b) + " is missed by some H_a and some H_b");
      }
    }
  }
  return pass("exact over all witness pairs, " + std::to_string(cuts.size()) + " basic cuts, " + std::to_string(edges) +
              " heavy edges");
}

// a,b separated in J - {w,x}
bool separates(const Graph& j, VertexSet outside, int a, int b, int w, int x) {
  const VertexSet allowed = j.vertices() & ~outside & ~bit(w) & ~bit(x);
  return !contains(reach(j, a, allowed), b);
}

Row check_unique_cut_structure(const Graph& g, const std::optional<UniqueCut>& uc) {
  if (!uc) return vacuous();
  const int a = uc->a, b = uc->b;
  // (i) every H_a contains b: no Kuratowski subgraph avoids both
  if (!planar_minus(g, bit(a) | bit(b))) return fail("G - a - b is non-planar, so some H_a misses b");
  // (ii)
  if (g.has_edge(a, b)) return fail("ab is an edge");
  // (iii)
  std::size_t covered = 0;
  for (const Edge& e : g.edges()) {
    if (contains(uc->light, e.u) || contains(uc->light, e.v)) continue;
    ++covered;
    if (!planar_minus(g, bit(a), e) && !planar_minus(g, bit(b), e)) {
      return fail("edge " + edge_name(e.u, e.v) + " outside E(L) is missed by some pair");
    }
  }
  // (iv)
  const VertexSet outside = uc->light;
  std::size_t separators = 0;
  const auto c = to_vector(uc->heavy);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t k = i + 1; k < c.size(); ++k) {
      if (!separates(g, outside, a, b, c[i], c[k])) continue;
      ++separators;
      if (g.has_edge(c[i], c[k])) return fail("separating 2-cut " + cut_name(c[i], c[k]) + " of J induces an edge");
    }
  }
  return pass("cut " + cut_name(a, b) + ": G-a-b planar, ab absent, " + std::to_string(covered) + " edges covered, " +
              std::to_string(separators) + " separating 2-cuts of J independent");
}

Row check_basic_lemma(const Graph& g, const std::optional<UniqueCut>& uc) {
  if (!uc) return vacuous();
  const int a = uc->a, b = uc->b;
  const Graph j = g.isolate_set(uc->light);
  std::size_t checked = 0;
  for (const Edge& e : j.edges()) {
    ++checked;
    if (!planar_minus(j, bit(a), e) && !planar_minus(j, bit(b), e)) {
      return fail("J-e-a and J-e-b both non-planar for e=" + edge_name(e.u, e.v));
    }
    // the merged vertex keeps the cut label, so J/e - s drops both ends when s is on e
    auto contracted_minus = [&](int s) {
      if (e.u == s || e.v == s) return planar_minus(j, bit(e.u) | bit(e.v));
      return planar_minus(merge(j, e.u, e.v), bit(s));
    };
    if (!contracted_minus(a) && !contracted_minus(b)) {
      return fail("J/e-a and J/e-b both non-planar for e=" + edge_name(e.u, e.v));
    }
  }
  return pass(std::to_string(checked) + " edges of J, deletion and contraction");
}

// b is non-branch in some H_a iff, keeping only two of b's edges into C, the
// graph without a is still non-planar (given G - a - b planar, any Kuratowski
// subgraph there must pass through b with degree two).
std::optional<std::string> nonbranch_witness(const Graph& g, int a, int b) {
  if (!planar_minus(g, bit(a) | bit(b))) return "G - " + std::to_string(a) + " - " + std::to_string(b) + " is non-planar";
  const Graph ga = g.isolate(a);
  const auto nb = to_vector(ga.neighbors(b));
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t k = i + 1; k < nb.size(); ++k) {
      Graph h = ga.isolate(b);
      h.add_edge(b, nb[i]);
      h.add_edge(b, nb[k]);
      if (!is_planar(h)) {
        return "some witness avoiding " + std::to_string(a) + " routes through " + std::to_string(b) + " via " +
               std::to_string(nb[i]) + "," + std::to_string(nb[k]);
      }
    }
  }
  return std::nullopt;
}

Row check_branch_vertices(const Graph& g, const std::optional<UniqueCut>& uc, WitnessCache& cache) {
  if (!uc) return vacuous();
  const int a = uc->a, b = uc->b;
  if (auto bad = nonbranch_witness(g, a, b)) return fail(*bad);
  if (auto bad = nonbranch_witness(g, b, a)) return fail(*bad);
  // the enumerated lists must agree with the exact test
  for (auto [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
    const auto& list = cache.avoiding(s).items;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!contains(list[i].branch, t)) return fail("enumerated witness " + std::to_string(i) + " avoiding " + std::to_string(s) + " has " + std::to_string(t) + " non-branch");
    }
  }
  return pass("exact: a and b branch in every witness avoiding the other; " +
              std::to_string(cache.avoiding(a).items.size()) + "+" + std::to_string(cache.avoiding(b).items.size()) +
              " enumerated witnesses agree");
}

Row check_branch_cover(const std::optional<UniqueCut>& uc, WitnessCache& cache) {
  if (!uc) return vacuous();
  const int a = uc->a, b = uc->b;
  const VertexSet target = uc->heavy | bit(a) | bit(b);
  const WitList& la = cache.avoiding(a);
  const WitList& lb = cache.avoiding(b);
  // keep the cover minimising |E(H_a)| + |E(H_b)|
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_size = 1 << 30;
  for (std::size_t i = 0; i < la.items.size(); ++i) {
    for (std::size_t k = 0; k < lb.items.size(); ++k) {
      const Wit& x = la.items[i];
      const Wit& y = lb.items[k];
      if (((x.branch | y.branch) & target) != target) continue;
      if (x.edges + y.edges < best_size) {
        best_size = x.edges + y.edges;
        best = {i, k};
      }
    }
  }
  if (best) {
    return pass("H_a #" + std::to_string(best->first) + " and H_b #" + std::to_string(best->second) + " cover C+{a,b}, " +
                std::to_string(best_size) + " edges");
  }
  if (la.truncated || lb.truncated) return {AuditStatus::Truncated, "no covering pair among capped enumeration"};
  return fail("no pair of witnesses covers C+{a,b} with branch vertices");
}

Row check_nonbranch_degree(const Graph& g, const std::optional<UniqueCut>& uc, WitnessCache& cache) {
  if (!uc) return vacuous();
  const WitList& la = cache.avoiding(uc->a);
  const WitList& lb = cache.avoiding(uc->b);
  std::size_t pairs = 0, hits = 0;
  for (const Wit& x : la.items) {
    for (const Wit& y : lb.items) {
      ++pairs;
      const VertexSet free = uc->heavy & ~x.branch & ~y.branch;
      for (int w : to_vector(free)) {
        ++hits;
        const bool ok = g.degree(w) == 4 && popcount(x.adj[w]) == 2 && popcount(y.adj[w]) == 2 && !(x.adj[w] & y.adj[w]);
        if (!ok) return fail("non-branch vertex " + std::to_string(w) + " has degree " + std::to_string(g.degree(w)));
      }
    }
  }
  std::string ev = std::to_string(pairs) + " pairs, " + std::to_string(hits) + " non-branch occurrences of degree 4";
  if (la.truncated || lb.truncated) return {AuditStatus::Truncated, ev + ", enumeration capped"};
  return pass(pairs ? ev : "vacuous");
}

}  // namespace

AuditReport audit_graph(const Graph& g, const AuditOptions& options) {
  AuditReport report;
  report.graph_id = canonical_g6(g);
  WitnessCache cache(g, options.cap);
  const std::optional<UniqueCut> uc = unique_cut(g);

  const std::vector<std::function<Row()>> checks = {
      [&] { return check_min_degree(g); },
      [&] { return check_two_components(g); },
      [&] { return check_augment_nonplanar(g); },
      [&] { return check_light_iso(g); },
      [&] { return check_witness_overlap(g, cache); },
      [&] { return check_witness_triples(g, cache, options); },
      [&] { return check_edge_cover(g); },
      [&] { return check_unique_cut_structure(g, uc); },
      [&] { return check_basic_lemma(g, uc); },
      [&] { return check_branch_vertices(g, uc, cache); },
      [&] { return check_branch_cover(uc, cache); },
      [&] { return check_nonbranch_degree(g, uc, cache); },
  };
  const auto& names = audit_check_names();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Row r;
    try {
      r = checks[i]();
    } catch (const Error& e) {
      r = fail(std::string("error: ") + e.what());
    }
    report.rows.push_back({names[i], r.status, std::move(r.evidence)});
  }
  return report;
}

}  // namespace apexkit
