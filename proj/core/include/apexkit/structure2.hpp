#pragma once

#include <string>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

enum class ObstructionClass { HeavyNonplanar, DisjointCuts, MultiCutsGe3, ExactlyTwoCuts, UniqueCutSplit, UniqueCutNosplit };

/// HEAVY_NONPLANAR, DISJOINT_CUTS, ...
std::string to_string(ObstructionClass c);
ObstructionClass class_from_string(const std::string& s);

enum class LightKind { K5, K33, K33e, Other };
std::string to_string(LightKind k);

struct TwoCutRecord {
  int a = -1;  // a < b
  int b = -1;
  VertexSet heavy = 0;
  VertexSet light = 0;
  int weight = 0;  // |heavy|
  LightKind light_aug_kind = LightKind::Other;
  bool heavy_induced_planar = false;
};

/// G[component + {a, b}] plus the edge ab.
Graph augmented_component(const Graph& g, VertexSet component, int a, int b);

/// Lowest-index component holding the Kuratowski witness avoiding v, or 0
/// when g - v is planar. The cut is {v, other}.
VertexSet witness_side(const Graph& g, int v, int other);

/// Throws NotATwoCut when g - {a,b} is connected, HeavyAmbiguous when the cut
/// does not leave exactly two components or the witnesses avoiding a and b
/// fall on different sides (or do not exist).
TwoCutRecord analyze_cut(const Graph& g, int a, int b);

/// Minimum-weight 2-cuts in lexicographic order. Throws NotConnectivity2.
std::vector<TwoCutRecord> basic_cuts(const Graph& g);

enum class HeavyRule {
  BasicCut,  // step 1 looks at the chosen basic cut only
  AnyCut,    // step 1 fires if any 2-cut has a non-planar heavy side
};

struct ClassifyOptions {
  HeavyRule heavy_rule = HeavyRule::BasicCut;
};

struct Class5 {
  ObstructionClass label = ObstructionClass::HeavyNonplanar;
  TwoCutRecord cut;                     // lexicographically smallest basic cut
  std::vector<TwoCutRecord> basic;      // every basic cut
  std::vector<ObstructionClass> per_cut;  // label obtained from each basic cut
  int two_cut_count = 0;
  bool basic_cuts_agree = true;
  bool nonplanar_heavy_elsewhere = false;  // some non-basic 2-cut has a non-planar heavy side
};

/// Decision tree applied to one basic cut.
ObstructionClass classify_at(const Graph& g, const TwoCutRecord& cut);

/// Throws NotClassifiable unless g is an obstruction of connectivity 2.
Class5 classify(const Graph& g, const ClassifyOptions& options = {});

/// True iff J = G[C + {a,b}] has a 2-cut inside C separating a from b.
bool has_separating_cut(const Graph& g, VertexSet heavy, int a, int b);

}  // namespace apexkit
