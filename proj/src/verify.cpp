#include "cds/verify.hpp"

#include <algorithm>
#include <string>

namespace cds {

ValidityReport check_cds(const Graph& g, const std::vector<NodeId>& s) {
  const int n = g.node_count();
  std::vector<char> member(static_cast<size_t>(n), 0);
  for (NodeId u : s) {
    g.check_node(u);
    member[static_cast<size_t>(u)] = 1;
  }
  std::vector<char> covered = member;
  for (NodeId u : s)
    for (NodeId v : g.neighbors(u)) covered[static_cast<size_t>(v)] = 1;

  ValidityReport report;
  for (NodeId u = 0; u < n; ++u)
    if (!covered[static_cast<size_t>(u)]) report.uncovered.push_back(u);
  report.dominating = report.uncovered.empty();

  std::vector<NodeId> members;
  for (NodeId u = 0; u < n; ++u)
    if (member[static_cast<size_t>(u)]) members.push_back(u);
  // An empty set induces a connected (empty) subgraph, but only the empty
  // graph accepts an empty CDS.
  report.connected = members.empty() ? (n == 0) : induced_connected(g, members);
  return report;
}

namespace {

bool mask_dominating(const std::vector<std::uint64_t>& closed, std::uint64_t mask,
                     std::uint64_t all) {
  std::uint64_t covered = 0;
  std::uint64_t rest = mask;
  while (rest) {
    int b = __builtin_ctzll(rest);
    rest &= rest - 1;
    covered |= closed[static_cast<size_t>(b)];
  }
  return covered == all;
}

bool mask_connected(const std::vector<std::uint64_t>& open, std::uint64_t mask) {
  if (mask == 0) return true;
  std::uint64_t reached = mask & (~mask + 1);  // lowest member
  std::uint64_t frontier = reached;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t rest = frontier;
    while (rest) {
      int b = __builtin_ctzll(rest);
      rest &= rest - 1;
      next |= open[static_cast<size_t>(b)];
    }
    next &= mask & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

}  // namespace

OracleResult exact_min_cds(const Graph& g, int node_limit) {
  const int n = g.node_count();
  if (n > node_limit)
    throw too_large_error("exact_min_cds: " + std::to_string(n) + " nodes over limit " +
                          std::to_string(node_limit));
  if (n > 62) throw too_large_error("exact_min_cds: subset masks support at most 62 nodes");
  if (!is_connected(g)) throw precondition_error("exact_min_cds: graph is disconnected");

  OracleResult result;
  if (n == 0) {
    result.subsets_examined = 1;  // the empty subset, trivially valid
    return result;
  }

  std::vector<std::uint64_t> open(static_cast<size_t>(n), 0);
  std::vector<std::uint64_t> closed(static_cast<size_t>(n), 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) open[static_cast<size_t>(u)] |= 1ULL << v;
    closed[static_cast<size_t>(u)] = open[static_cast<size_t>(u)] | (1ULL << u);
  }
  const std::uint64_t all = (n == 62) ? ~0ULL >> 2 : (1ULL << n) - 1;

  std::vector<int> pick;
  for (int k = 0; k <= n; ++k) {
    // Lexicographic k-combinations of 0..n-1.
    pick.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
      ++result.subsets_examined;
      std::uint64_t mask = 0;
      for (int id : pick) mask |= 1ULL << id;
      if (mask_dominating(closed, mask, all) && mask_connected(open, mask)) {
        result.min_size = k;
        result.witness.assign(pick.begin(), pick.end());
        return result;
      }
      int i = k - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  // Unreachable: the full node set of a connected graph is always valid.
  throw error("exact_min_cds: no valid subset found");
}

double performance_ratio(int approx_size, int exact_size) {
  if (exact_size < 1) throw precondition_error("performance_ratio: exact size must be >= 1");
  if (approx_size < exact_size)
    throw oracle_violation_error("performance_ratio: approximate size " +
                                 std::to_string(approx_size) + " below exact minimum " +
                                 std::to_string(exact_size));
  return static_cast<double>(approx_size) / static_cast<double>(exact_size);
}

}  // namespace cds
