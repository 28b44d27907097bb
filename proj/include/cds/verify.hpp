#pragma once

#include <cstdint>
#include <vector>

#include "cds/graph.hpp"

namespace cds {

struct ValidityReport {
  bool dominating = false;
  bool connected = false;
  std::vector<NodeId> uncovered;  // empty iff dominating

  bool valid() const { return dominating && connected; }
};

/// Checks the two CDS properties: every node is in s or adjacent to a member
/// of s (cover), and the subgraph induced by s is connected (connectivity).
/// An empty s is valid only for the empty graph.
ValidityReport check_cds(const Graph& g, const std::vector<NodeId>& s);

struct OracleResult {
  int min_size = 0;
  std::vector<NodeId> witness;  // one minimum CDS, sorted ascending
  std::uint64_t subsets_examined = 0;
};

/// Exhaustive minimum-CDS search. Subsets are enumerated in increasing size,
/// lexicographic within a size, and the first valid one is returned, so the
/// witness is deterministic. Throws too_large_error when node_count exceeds
/// node_limit and precondition_error on disconnected input.
OracleResult exact_min_cds(const Graph& g, int node_limit = 12);

/// C / C*: approximate size over the exact minimum. Throws
/// oracle_violation_error when approx_size < exact_size (an algorithm bug)
/// and precondition_error when exact_size < 1.
double performance_ratio(int approx_size, int exact_size);

}  // namespace cds
