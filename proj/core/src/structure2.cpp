#include "apexkit/structure2.hpp"

#include <algorithm>

#include "apexkit/apex.hpp"
#include "apexkit/canon.hpp"
#include "apexkit/connectivity.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/minors.hpp"
#include "apexkit/planarity.hpp"

namespace apexkit {

namespace {

std::string cut_name(int a, int b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

LightKind light_kind_of(const Graph& aug) {
  if (isomorphic(aug, minor_pattern("K5"))) return LightKind::K5;
  if (isomorphic(aug, minor_pattern("K33"))) return LightKind::K33;
  if (isomorphic(aug, minor_pattern("K33_plus_e"))) return LightKind::K33e;
  return LightKind::Other;
}

}  // namespace

std::string to_string(ObstructionClass c) {
  switch (c) {
    case ObstructionClass::HeavyNonplanar: return "HEAVY_NONPLANAR";
    case ObstructionClass::DisjointCuts: return "DISJOINT_CUTS";
    case ObstructionClass::MultiCutsGe3: return "MULTI_CUTS_GE3";
    case ObstructionClass::ExactlyTwoCuts: return "EXACTLY_TWO_CUTS";
    case ObstructionClass::UniqueCutSplit: return "UNIQUE_CUT_SPLIT";
    case ObstructionClass::UniqueCutNosplit: return "UNIQUE_CUT_NOSPLIT";
  }
  return "?";
}

ObstructionClass class_from_string(const std::string& s) {
  for (ObstructionClass c : {ObstructionClass::HeavyNonplanar, ObstructionClass::DisjointCuts, ObstructionClass::MultiCutsGe3,
                             ObstructionClass::ExactlyTwoCuts, ObstructionClass::UniqueCutSplit,
                             ObstructionClass::UniqueCutNosplit}) {
    if (to_string(c) == s) return c;
  }
  throw Error("unknown class " + s);
}

std::string to_string(LightKind k) {
  switch (k) {
    case LightKind::K5: return "K5";
    case LightKind::K33: return "K33";
    case LightKind::K33e: return "K33e";
    case LightKind::Other: return "other";
  }
  return "?";
}

Graph augmented_component(const Graph& g, VertexSet component, int a, int b) {
  Graph h = g.induced(component | bit(a) | bit(b));
  // a and b keep their relative order inside the compacted graph
  const int ia = popcount(component & (bit(a) - 1)) + (b < a ? 1 : 0);
  const int ib = popcount(component & (bit(b) - 1)) + (a < b ? 1 : 0);
  h.add_edge(ia, ib);
  return h;
}

VertexSet witness_side(const Graph& g, int v, int other) {
  const auto w = kuratowski_avoiding(g, v);
  if (!w) return 0;
  const VertexSet inner = w->vertex_set() & ~bit(other);
  for (VertexSet c : components(g, bit(v) | bit(other))) {
    if ((c & inner) == inner) return c;
  }
  return 0;
}

TwoCutRecord analyze_cut(const Graph& g, int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= g.order() || a == b) throw NotATwoCut("invalid cut " + cut_name(a, b));
  const VertexSet cut = bit(a) | bit(b);
  const std::vector<VertexSet> comps = components(g, cut);
  if (comps.size() < 2) throw NotATwoCut(cut_name(a, b) + " does not disconnect the graph");
  if (comps.size() > 2) throw HeavyAmbiguous(cut_name(a, b) + " leaves " + std::to_string(comps.size()) + " components");

  const VertexSet side_a = witness_side(g, a, b);
  const VertexSet side_b = witness_side(g, b, a);
  if (side_a == 0 || side_b == 0) throw HeavyAmbiguous("no Kuratowski witness avoiding a cut vertex of " + cut_name(a, b));
  if (side_a != side_b) throw HeavyAmbiguous("witnesses avoiding a and b of " + cut_name(a, b) + " lie on different sides");

  TwoCutRecord r;
  r.a = a;
  r.b = b;
  r.heavy = side_a;
  r.light = (comps[0] == side_a) ? comps[1] : comps[0];
  r.weight = popcount(r.heavy);
  r.light_aug_kind = light_kind_of(augmented_component(g, r.light, a, b));
  r.heavy_induced_planar = is_planar(g.induced(r.heavy));
  return r;
}

std::vector<TwoCutRecord> basic_cuts(const Graph& g) {
  if (connectivity(g) != 2) throw NotConnectivity2("graph does not have connectivity 2");
  std::vector<TwoCutRecord> all;
  for (const CutPartition& c : enumerate_two_cuts(g)) {
    const int a = lowest(c.cut);
    const int b = lowest(c.cut & (c.cut - 1));
    all.push_back(analyze_cut(g, a, b));
  }
  int best = g.order();
  for (const auto& r : all) best = std::min(best, r.weight);
  std::vector<TwoCutRecord> out;
  for (const auto& r : all) {
    if (r.weight == best) out.push_back(r);
  }
  return out;
}

bool has_separating_cut(const Graph& g, VertexSet heavy, int a, int b) {
  const VertexSet j = heavy | bit(a) | bit(b);
  const Graph jg = g.isolate_set(g.vertices() & ~j);
  const VertexSet removed_outside = g.vertices() & ~j;
  const std::vector<int> inside = to_vector(heavy);
  for (std::size_t p = 0; p < inside.size(); ++p) {
    for (std::size_t q = p + 1; q < inside.size(); ++q) {
      const VertexSet removed = removed_outside | bit(inside[p]) | bit(inside[q]);
      if (!contains(reach(jg, a, g.vertices() & ~removed), b)) return true;
    }
  }
  return false;
}

ObstructionClass classify_at(const Graph& g, const TwoCutRecord& cut) {
  if (!cut.heavy_induced_planar) return ObstructionClass::HeavyNonplanar;
  const std::vector<CutPartition> cuts = enumerate_two_cuts(g);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      if ((cuts[i].cut & cuts[j].cut) == 0) return ObstructionClass::DisjointCuts;
    }
  }
  if (cuts.size() >= 3) return ObstructionClass::MultiCutsGe3;
  if (cuts.size() == 2) return ObstructionClass::ExactlyTwoCuts;
  return has_separating_cut(g, cut.heavy, cut.a, cut.b) ? ObstructionClass::UniqueCutSplit
                                                        : ObstructionClass::UniqueCutNosplit;
}

Class5 classify(const Graph& g, const ClassifyOptions& options) {
  if (connectivity(g) != 2) throw NotClassifiable("connectivity is not 2");
  if (auto why = obstruction_failure(g)) throw NotClassifiable("not an obstruction: " + *why);
  Class5 out;
  try {
    out.basic = basic_cuts(g);
  } catch (const Error& e) {
    throw NotClassifiable(e.what());
  }
  const std::vector<CutPartition> cuts = enumerate_two_cuts(g);
  out.two_cut_count = static_cast<int>(cuts.size());
  for (const CutPartition& c : cuts) {
    const int a = lowest(c.cut);
    const int b = lowest(c.cut & (c.cut - 1));
    const bool basic = std::any_of(out.basic.begin(), out.basic.end(), [&](const TwoCutRecord& r) { return r.a == a && r.b == b; });
    if (!basic && !analyze_cut(g, a, b).heavy_induced_planar) out.nonplanar_heavy_elsewhere = true;
  }
  for (const auto& r : out.basic) out.per_cut.push_back(classify_at(g, r));
  out.cut = out.basic.front();
  out.label = out.per_cut.front();
  if (options.heavy_rule == HeavyRule::AnyCut && out.nonplanar_heavy_elsewhere) out.label = ObstructionClass::HeavyNonplanar;
  out.basic_cuts_agree = std::all_of(out.per_cut.begin(), out.per_cut.end(), [&](ObstructionClass c) { return c == out.label; });
  return out;
}

}  // namespace apexkit
