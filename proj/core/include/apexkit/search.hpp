#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apexkit/graph.hpp"
#include "apexkit/structure2.hpp"

namespace apexkit {

struct SearchConfig {
  int heavy_min = 5;
  int heavy_max = 9;
  std::vector<LightKind> light_kinds{LightKind::K5, LightKind::K33, LightKind::K33e};
  int min_attach_degree = 3;
  int workers = 1;
  std::string source;      // graph6 file of heavy sides; empty means the internal generator
  std::string checkpoint;  // resume file; empty disables checkpointing
  bool symmetry = true;    // reduce attachment pairs by Aut(H) and the a<->b swap
  // called after every finished unit with (done, total)
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Throws ConfigInvalid.
void validate(const SearchConfig& cfg);

/// Stable text form of the fields that influence results.
std::string fingerprint(const SearchConfig& cfg);

struct SearchStats {
  std::uint64_t graphs_generated = 0;
  std::uint64_t candidates_tested = 0;  // graphs handed to the obstruction test
  std::map<std::string, std::uint64_t> pruned;

  SearchStats& operator+=(const SearchStats& o);
  bool operator==(const SearchStats&) const = default;
};

struct SearchResult {
  std::vector<std::string> obstructions;  // canonical graph6, sorted, unique
  SearchStats stats;
};

/// A light side ready to glue: L = L+ - {a,b}; to_a/to_b are the L vertices
/// adjacent to a and b.
struct LightVariant {
  LightKind kind = LightKind::K5;
  std::string name;
  Graph light{0};
  VertexSet to_a = 0;
  VertexSet to_b = 0;
};

/// Designations of (a,b) on K5, K3,3 and K3,3+e up to automorphism, ordered
/// so that reversing a and b is always another listed variant (or the same).
std::vector<LightVariant> light_variants(const std::vector<LightKind>& kinds);

/// Heavy side h on 0..k-1, a = k, b = k+1, light vertices after that. No ab edge.
Graph glue(const Graph& h, VertexSet na, VertexSet nb, const LightVariant& light);

/// Per heavy side, the attachment sets that survive the single-set rules:
/// |S| >= min_attach, h + S non-planar, and every attachment edge essential
/// (h + (S - x) planar for each x in S).
std::vector<VertexSet> admissible_attachments(const Graph& h, int min_attach);

/// Name of the first pair rule rejecting (na, nb) on heavy side h, or nullopt.
/// Rules, in order: "min_degree", "basic_delete", "basic_contract".
std::optional<std::string> pair_rejection(const Graph& h, VertexSet na, VertexSet nb);

/// Name of the first rule rejecting the glued graph, or nullopt if it passes
/// every rule and is an obstruction. Rules: "connectivity", "cut_not_unique",
/// "not_obstruction".
std::optional<std::string> glued_rejection(const Graph& g);

SearchResult unique_cut_search(const SearchConfig& cfg = {});

/// Kuratowski heavy side with at most one subdividing vertex, a and b with two
/// neighbours each in it, light side K5 or K3,3. `filter` applies is_obstruction.
SearchResult heavy_nonplanar_search(bool filter = true);

/// Disjoint unions of two Kuratowski graphs that are obstructions.
SearchResult disconnected_search(int max_order = 12);

struct CatalogRow {
  int line = 0;
  std::string g6;
  std::string canon_g6;
  bool obstruction = false;
  std::string failure;  // why it is not an obstruction (or cert/connectivity problem)
  int connectivity = -1;
  std::string label;    // classification label, empty if not classifiable
  bool duplicate = false;
};

struct CatalogReport {
  std::vector<CatalogRow> rows;
  std::map<std::string, int> census;  // label -> count over distinct passing graphs
  std::vector<std::pair<int, int>> minor_violations;  // (i, j): row j has row i as a proper minor
  int passed = 0;
  int failed = 0;
  int duplicates = 0;
};

/// Checks every line: obstruction with a valid certificate, connectivity 2,
/// classification. Duplicates are flagged and excluded from the census.
/// Throws MalformedGraph6 naming the line.
CatalogReport verify_catalog(const std::vector<std::string>& lines, bool minor_check = true);

}  // namespace apexkit
