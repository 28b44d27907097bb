#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "cds/graph.hpp"

namespace cds {

enum class NodeRole { dominatee, dominator, connector };

/// One algorithm's output. cds is sorted ascending; roles has one entry per
/// graph node; repaired is true when a fallback or repair pass ran.
struct CdsResult {
  std::string algorithm;
  std::vector<NodeId> cds;
  std::vector<NodeRole> roles;
  bool repaired = false;
  bool is_valid_cds = false;
  int size = 0;
  std::chrono::duration<double, std::micro> wall_time{0.0};
};

/// Shared selection state for the greedy constructions. A node is marked once
/// it is in the set or adjacent to it; delta(u) counts the unmarked neighbors
/// of u. in_set(u) implies marked(u).
class EffectiveDegreeState {
 public:
  explicit EffectiveDegreeState(const Graph& g);

  bool in_set(NodeId u) const { return in_set_[u] != 0; }
  bool marked(NodeId u) const { return marked_[u] != 0; }
  int delta(NodeId u) const { return delta_[u]; }
  int unmarked_count() const { return unmarked_count_; }

  /// Puts u in the set, marking u and its neighbors and updating deltas.
  void add_to_set(NodeId u);

 private:
  void mark(NodeId u);

  const Graph* g_;
  std::vector<char> in_set_;
  std::vector<char> marked_;
  std::vector<int> delta_;
  int unmarked_count_;
};

/// Round-based greedy dominating set. Each round every node u with delta > 0
/// (plus unmarked isolated nodes, which join vacuously) joins iff it beats
/// every v in its two-hop neighborhood: delta(u) > delta(v), ties to the
/// smaller id. Winners of a round join simultaneously; rounds repeat until
/// every node is marked. Handles disconnected graphs component by component.
std::vector<NodeId> greedy_dominating_set(const Graph& g);

struct ConnectorResult {
  std::vector<NodeId> connectors;  // sorted ascending
  bool repaired = false;           // a join beyond three hops was needed
};

/// Joins the dominators into one induced component. Dominator pairs are
/// scanned in ascending order; pairs within three hops and currently in
/// different components contribute the interior of their shortest path as
/// connectors. Components still apart afterwards are joined through
/// unrestricted shortest paths, closest pair first, and the result is
/// flagged repaired. Throws precondition_error on disconnected graphs.
ConnectorResult connect_dominators(const Graph& g,
                                   const std::vector<NodeId>& dominators);

/// Removes redundant members in ascending id order: a node goes iff the rest
/// still covers every node, stays connected, and stays nonempty. Removals
/// take effect immediately, so later checks see the shrunken set. The result
/// is 1-minimal. Throws precondition_error unless cds is a valid CDS.
std::vector<NodeId> prune_cds(const Graph& g, const std::vector<NodeId>& cds);

/// Greedy dominating set, three-hop connection, then pruning.
CdsResult mmcds(const Graph& g);

/// Marking process: phase 1 selects nodes with two non-adjacent neighbors;
/// phase 2 applies both pruning rules simultaneously against the phase-1
/// marking (rule 1: one marked larger-id neighbor covers N(v); rule 2: two
/// adjacent marked larger-id neighbors cover N(v)). If the survivors are not
/// a valid CDS the result falls back to {0} when that suffices, else to the
/// greedy set plus connectors, with repaired set.
CdsResult wuli_mcds1(const Graph& g);

/// How the MCDS2 coverage rule reads "covered by neighbors of a neighbor".
enum class Mcds2Rule {
  single_neighbor,  // drop i iff one neighbor j alone covers N(i) minus j
  neighbor_union,   // drop i iff every neighbor of i is adjacent to another
};

/// Coverage-rule selection in BFS order from the minimum-id node. If the
/// selected set is not a valid CDS, a repair pass restores cover (greedy, by
/// largest uncovered gain, ties to the smaller id) and connectivity (via
/// connect_dominators), with repaired set.
CdsResult mcds2(const Graph& g, Mcds2Rule rule = Mcds2Rule::single_neighbor);

/// Two-stage weighted greedy: stage 1 repeatedly adds the node covering the
/// most not-yet-dominated nodes (closed neighborhood, ties to the smaller
/// id); stage 2 joins the spanning-forest components through the lightest
/// cross links, weighted by endpoints outside the set.
CdsResult das_cds(const Graph& g);

/// Dispatch by CLI name: "mmcds", "mcds1", "mcds2" or "das".
/// Throws config_error for anything else.
CdsResult run_algorithm(const Graph& g, const std::string& name,
                        Mcds2Rule rule = Mcds2Rule::single_neighbor);

}  // namespace cds
