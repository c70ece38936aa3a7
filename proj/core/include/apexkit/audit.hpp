#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

enum class AuditStatus { Pass, Fail, Truncated };

/// "pass", "fail", "truncated"
std::string to_string(AuditStatus s);

struct AuditRow {
  std::string check;
  AuditStatus status = AuditStatus::Pass;
  std::string evidence;
};

struct AuditReport {
  std::string graph_id;  // canonical graph6
  std::vector<AuditRow> rows;

  int count(AuditStatus s) const;
  bool has_failures() const { return count(AuditStatus::Fail) > 0; }
};

struct AuditOptions {
  std::size_t cap = 10000;             // per-vertex Kuratowski enumeration cap
  std::size_t triple_samples = 256;    // sampled witness triples
  std::uint64_t seed = 0x5eed;
};

/// Check names in report order.
const std::vector<std::string>& audit_check_names();

/// Runs every check once; checks whose hypotheses do not hold pass as vacuous.
/// Never throws for a valid graph: internal errors become fail rows.
AuditReport audit_graph(const Graph& g, const AuditOptions& options = {});

}  // namespace apexkit
