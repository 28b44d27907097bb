#include "cds/algorithms.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <queue>

#include "cds/verify.hpp"

namespace cds {

using Clock = std::chrono::steady_clock;

EffectiveDegreeState::EffectiveDegreeState(const Graph& g)
    : g_(&g),
      in_set_(static_cast<size_t>(g.node_count()), 0),
      marked_(static_cast<size_t>(g.node_count()), 0),
      delta_(static_cast<size_t>(g.node_count()), 0),
      unmarked_count_(g.node_count()) {
  for (NodeId u = 0; u < g.node_count(); ++u) delta_[static_cast<size_t>(u)] = g.degree(u);
}

void EffectiveDegreeState::mark(NodeId u) {
  if (marked_[static_cast<size_t>(u)]) return;
  marked_[static_cast<size_t>(u)] = 1;
  --unmarked_count_;
  for (NodeId w : g_->neighbors(u)) --delta_[static_cast<size_t>(w)];
}

void EffectiveDegreeState::add_to_set(NodeId u) {
  if (in_set_[static_cast<size_t>(u)]) return;
  in_set_[static_cast<size_t>(u)] = 1;
  mark(u);
  for (NodeId v : g_->neighbors(u)) mark(v);
}

std::vector<NodeId> greedy_dominating_set(const Graph& g) {
  const int n = g.node_count();
  EffectiveDegreeState state(g);
  std::vector<std::vector<NodeId>> two_hop(static_cast<size_t>(n));
  for (NodeId u = 0; u < n; ++u) two_hop[static_cast<size_t>(u)] = two_hop_neighborhood(g, u);

  std::vector<NodeId> set;
  while (state.unmarked_count() > 0) {
    std::vector<NodeId> winners;
    for (NodeId u = 0; u < n; ++u) {
      // Only nodes that still cover something compete; an unmarked isolated
      // node has an empty two-hop neighborhood and joins vacuously.
      const bool isolated_unmarked = !state.marked(u) && g.degree(u) == 0;
      if (state.delta(u) == 0 && !isolated_unmarked) continue;
      bool wins = true;
      for (NodeId v : two_hop[static_cast<size_t>(u)]) {
        if (state.delta(v) > state.delta(u) ||
            (state.delta(v) == state.delta(u) && v < u)) {
          wins = false;
          break;
        }
      }
      if (wins) winners.push_back(u);
    }
    // The maximum-delta node with minimum id always wins its own two-hop
    // comparison, so every round makes progress.
    if (winners.empty()) throw error("greedy_dominating_set: round made no progress");
    for (NodeId u : winners) state.add_to_set(u);
    set.insert(set.end(), winners.begin(), winners.end());
  }
  std::sort(set.begin(), set.end());
  return set;
}

namespace {

/// Component label per node of the subgraph induced by member; -1 outside.
/// Labels are assigned 0,1,2,... in ascending order of the lowest member id.
std::vector<int> induced_components(const Graph& g, const std::vector<char>& member) {
  std::vector<int> label(static_cast<size_t>(g.node_count()), -1);
  int next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (!member[static_cast<size_t>(s)] || label[static_cast<size_t>(s)] >= 0) continue;
    label[static_cast<size_t>(s)] = next;
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      for (NodeId y : g.neighbors(x)) {
        if (member[static_cast<size_t>(y)] && label[static_cast<size_t>(y)] < 0) {
          label[static_cast<size_t>(y)] = next;
          q.push(y);
        }
      }
    }
    ++next;
  }
  label.push_back(next);  // component count rides in the back slot
  return label;
}

int component_count(const std::vector<int>& label) { return label.back(); }

void require_connected_nonempty(const Graph& g, const char* who) {
  if (g.node_count() < 1)
    throw precondition_error(std::string(who) + ": graph must have at least one node");
  if (!is_connected(g))
    throw precondition_error(std::string(who) + ": graph must be connected");
}

std::vector<NodeId> sorted_unique(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

ConnectorResult connect_dominators(const Graph& g, const std::vector<NodeId>& dominators) {
  for (NodeId d : dominators) g.check_node(d);
  if (!is_connected(g)) throw precondition_error("connect_dominators: graph is disconnected");

  const int n = g.node_count();
  std::vector<NodeId> doms = sorted_unique(dominators);
  std::vector<char> member(static_cast<size_t>(n), 0);
  for (NodeId d : doms) member[static_cast<size_t>(d)] = 1;

  ConnectorResult out;
  auto add_interior = [&](const std::vector<NodeId>& path) {
    for (size_t k = 1; k + 1 < path.size(); ++k) {
      NodeId x = path[k];
      if (!member[static_cast<size_t>(x)]) {
        member[static_cast<size_t>(x)] = 1;
        out.connectors.push_back(x);
      }
    }
  };

  // Three-hop pass: dominator pairs in ascending order; a pair in different
  // induced components within distance three contributes its shortest path's
  // interior.
  auto label = induced_components(g, member);
  for (size_t i = 0; i < doms.size(); ++i) {
    for (size_t j = i + 1; j < doms.size(); ++j) {
      NodeId a = doms[i], b = doms[j];
      if (label[static_cast<size_t>(a)] == label[static_cast<size_t>(b)]) continue;
      auto path = shortest_path(g, a, b, 3);
      if (!path) continue;
      add_interior(*path);
      label = induced_components(g, member);
    }
  }

  // Whatever is still apart gets joined through the closest member pair,
  // smallest (a, b) first on distance ties.
  while (component_count(label) > 1) {
    out.repaired = true;
    int best_dist = INT_MAX;
    NodeId best_a = -1, best_b = -1;
    for (NodeId a = 0; a < n; ++a) {
      if (!member[static_cast<size_t>(a)]) continue;
      auto dist = bfs_distances(g, a);
      for (NodeId b = a + 1; b < n; ++b) {
        if (!member[static_cast<size_t>(b)]) continue;
        if (label[static_cast<size_t>(a)] == label[static_cast<size_t>(b)]) continue;
        if (dist[static_cast<size_t>(b)] >= 0 && dist[static_cast<size_t>(b)] < best_dist) {
          best_dist = dist[static_cast<size_t>(b)];
          best_a = a;
          best_b = b;
        }
      }
    }
    auto path = shortest_path(g, best_a, best_b, n);
    add_interior(*path);
    label = induced_components(g, member);
  }

  std::sort(out.connectors.begin(), out.connectors.end());
  return out;
}

namespace {

bool set_dominates(const Graph& g, const std::vector<char>& member) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (member[static_cast<size_t>(u)]) continue;
    bool covered = false;
    for (NodeId v : g.neighbors(u)) {
      if (member[static_cast<size_t>(v)]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool members_connected(const Graph& g, const std::vector<char>& member) {
  return component_count(induced_components(g, member)) <= 1;
}

}  // namespace

std::vector<NodeId> prune_cds(const Graph& g, const std::vector<NodeId>& cds) {
  if (!check_cds(g, cds).valid())
    throw precondition_error("prune_cds: input is not a valid CDS");

  std::vector<NodeId> candidates = sorted_unique(cds);
  std::vector<char> member(static_cast<size_t>(g.node_count()), 0);
  for (NodeId x : candidates) member[static_cast<size_t>(x)] = 1;
  int size = static_cast<int>(candidates.size());

  for (NodeId x : candidates) {
    if (size == 1) break;  // the last member always stays
    member[static_cast<size_t>(x)] = 0;
    if (set_dominates(g, member) && members_connected(g, member)) {
      --size;  // removal sticks; later checks see the shrunken set
    } else {
      member[static_cast<size_t>(x)] = 1;
    }
  }

  std::vector<NodeId> out;
  out.reserve(static_cast<size_t>(size));
  for (NodeId x : candidates)
    if (member[static_cast<size_t>(x)]) out.push_back(x);
  return out;
}

namespace {

void finish_result(const Graph& g, CdsResult& res) {
  std::sort(res.cds.begin(), res.cds.end());
  res.size = static_cast<int>(res.cds.size());
  res.is_valid_cds = check_cds(g, res.cds).valid();
}

}  // namespace

CdsResult mmcds(const Graph& g) {
  require_connected_nonempty(g, "mmcds");
  CdsResult res;
  res.algorithm = "mmcds";
  res.roles.assign(static_cast<size_t>(g.node_count()), NodeRole::dominatee);

  const auto t0 = Clock::now();
  auto dominators = greedy_dominating_set(g);
  auto conn = connect_dominators(g, dominators);
  std::vector<NodeId> cds = dominators;
  cds.insert(cds.end(), conn.connectors.begin(), conn.connectors.end());
  res.cds = prune_cds(g, sorted_unique(cds));
  res.wall_time = Clock::now() - t0;

  res.repaired = conn.repaired;
  std::vector<char> from_step1(static_cast<size_t>(g.node_count()), 0);
  for (NodeId d : dominators) from_step1[static_cast<size_t>(d)] = 1;
  for (NodeId x : res.cds)
    res.roles[static_cast<size_t>(x)] =
        from_step1[static_cast<size_t>(x)] ? NodeRole::dominator : NodeRole::connector;
  finish_result(g, res);
  return res;
}

namespace {

// N(v) subset of N[u]
bool closed_covers(const Graph& g, NodeId u, NodeId v) {
  for (NodeId x : g.neighbors(v))
    if (x != u && !g.has_edge(u, x)) return false;
  return true;
}

// N(v) subset of N(u) union N(w)
bool pair_covers(const Graph& g, NodeId u, NodeId w, NodeId v) {
  for (NodeId x : g.neighbors(v))
    if (!g.has_edge(u, x) && !g.has_edge(w, x)) return false;
  return true;
}

}  // namespace

CdsResult wuli_mcds1(const Graph& g) {
  require_connected_nonempty(g, "wuli_mcds1");
  const int n = g.node_count();
  CdsResult res;
  res.algorithm = "mcds1";
  res.roles.assign(static_cast<size_t>(n), NodeRole::dominatee);

  const auto t0 = Clock::now();

  // Phase 1: mark every node with two non-adjacent neighbors.
  std::vector<char> marked(static_cast<size_t>(n), 0);
  for (NodeId u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    for (size_t i = 0; i < nb.size() && !marked[static_cast<size_t>(u)]; ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (!g.has_edge(nb[i], nb[j])) {
          marked[static_cast<size_t>(u)] = 1;
          break;
        }
  }

  // Phase 2: both rules are evaluated against the phase-1 marking, so the
  // order of examination cannot matter.
  std::vector<char> keep = marked;
  for (NodeId v = 0; v < n; ++v) {
    if (!marked[static_cast<size_t>(v)]) continue;
    const auto& nb = g.neighbors(v);
    bool drop = false;
    // Rule 1: one marked neighbor with larger id covers the whole of N(v).
    for (NodeId u : nb) {
      if (u > v && marked[static_cast<size_t>(u)] && closed_covers(g, u, v)) {
        drop = true;
        break;
      }
    }
    // Rule 2: two adjacent marked neighbors, both with larger ids, cover N(v).
    for (size_t i = 0; i < nb.size() && !drop; ++i) {
      NodeId u = nb[i];
      if (u < v || !marked[static_cast<size_t>(u)]) continue;
      for (size_t j = i + 1; j < nb.size(); ++j) {
        NodeId w = nb[j];
        if (w < v || !marked[static_cast<size_t>(w)]) continue;
        if (g.has_edge(u, w) && pair_covers(g, u, w, v)) {
          drop = true;
          break;
        }
      }
    }
    if (drop) keep[static_cast<size_t>(v)] = 0;
  }

  std::vector<NodeId> survivors;
  for (NodeId v = 0; v < n; ++v)
    if (keep[static_cast<size_t>(v)]) survivors.push_back(v);

  if (!survivors.empty() && check_cds(g, survivors).valid()) {
    res.cds = survivors;
    for (NodeId v : res.cds) res.roles[static_cast<size_t>(v)] = NodeRole::dominator;
  } else {
    // Marking found nothing usable (complete graphs mark no node at all).
    res.repaired = true;
    std::vector<NodeId> single{0};
    if (check_cds(g, single).valid()) {
      res.cds = single;
      res.roles[0] = NodeRole::dominator;
    } else {
      auto dominators = greedy_dominating_set(g);
      auto conn = connect_dominators(g, dominators);
      res.cds = dominators;
      res.cds.insert(res.cds.end(), conn.connectors.begin(), conn.connectors.end());
      for (NodeId d : dominators) res.roles[static_cast<size_t>(d)] = NodeRole::dominator;
      for (NodeId c : conn.connectors) res.roles[static_cast<size_t>(c)] = NodeRole::connector;
    }
  }
  res.wall_time = Clock::now() - t0;
  finish_result(g, res);
  return res;
}

namespace {

bool mcds2_selects(const Graph& g, NodeId i, Mcds2Rule rule) {
  const auto& nb = g.neighbors(i);
  if (rule == Mcds2Rule::single_neighbor) {
    // i stays out iff one neighbor j alone covers every other neighbor of i.
    for (NodeId j : nb) {
      bool covers = true;
      for (NodeId k : nb) {
        if (k != j && !g.has_edge(j, k)) {
          covers = false;
          break;
        }
      }
      if (covers) return false;
    }
    return true;
  }
  // neighbor_union: i stays out iff every neighbor of i is adjacent to some
  // other neighbor of i.
  for (NodeId k : nb) {
    bool covered = false;
    for (NodeId j : nb) {
      if (j != k && g.has_edge(j, k)) {
        covered = true;
        break;
      }
    }
    if (!covered) return true;
  }
  return false;
}

}  // namespace

CdsResult mcds2(const Graph& g, Mcds2Rule rule) {
  require_connected_nonempty(g, "mcds2");
  const int n = g.node_count();
  CdsResult res;
  res.algorithm = "mcds2";
  res.roles.assign(static_cast<size_t>(n), NodeRole::dominatee);

  const auto t0 = Clock::now();

  // Visit in BFS order from the minimum-id node. The rule itself is a pure
  // per-node test, so the order fixes only the construction sequence.
  std::vector<char> selected(static_cast<size_t>(n), 0);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<NodeId> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    NodeId i = q.front();
    q.pop();
    if (mcds2_selects(g, i, rule)) selected[static_cast<size_t>(i)] = 1;
    for (NodeId j : g.neighbors(i)) {
      if (!seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = 1;
        q.push(j);
      }
    }
  }

  std::vector<NodeId> members;
  for (NodeId i = 0; i < n; ++i)
    if (selected[static_cast<size_t>(i)]) members.push_back(i);
  for (NodeId i : members) res.roles[static_cast<size_t>(i)] = NodeRole::dominator;

  if (!check_cds(g, members).valid()) {
    res.repaired = true;
    // Cover repair: greedily add the node covering the most uncovered nodes
    // (closed neighborhood), smaller id on ties.
    std::vector<char> member(static_cast<size_t>(n), 0);
    for (NodeId i : members) member[static_cast<size_t>(i)] = 1;
    while (true) {
      std::vector<char> covered = member;
      for (NodeId i = 0; i < n; ++i)
        if (member[static_cast<size_t>(i)])
          for (NodeId j : g.neighbors(i)) covered[static_cast<size_t>(j)] = 1;
      int uncovered_total = 0;
      for (NodeId i = 0; i < n; ++i)
        if (!covered[static_cast<size_t>(i)]) ++uncovered_total;
      if (uncovered_total == 0) break;

      int best_gain = 0;
      NodeId best = -1;
      for (NodeId c = 0; c < n; ++c) {
        if (member[static_cast<size_t>(c)]) continue;
        int gain = covered[static_cast<size_t>(c)] ? 0 : 1;
        for (NodeId j : g.neighbors(c))
          if (!covered[static_cast<size_t>(j)]) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      member[static_cast<size_t>(best)] = 1;
      members.push_back(best);
      res.roles[static_cast<size_t>(best)] = NodeRole::dominator;
    }
    // Connectivity repair.
    members = sorted_unique(members);
    auto conn = connect_dominators(g, members);
    for (NodeId c : conn.connectors) {
      members.push_back(c);
      res.roles[static_cast<size_t>(c)] = NodeRole::connector;
    }
  }

  res.cds = sorted_unique(members);
  res.wall_time = Clock::now() - t0;
  finish_result(g, res);
  return res;
}

CdsResult das_cds(const Graph& g) {
  require_connected_nonempty(g, "das_cds");
  const int n = g.node_count();
  CdsResult res;
  res.algorithm = "das";
  res.roles.assign(static_cast<size_t>(n), NodeRole::dominatee);

  const auto t0 = Clock::now();

  // Stage 1: add the node with the largest weight until everything is
  // dominated. Weight is the not-yet-dominated closed neighborhood, which is
  // delta(u) plus one while u itself is uncovered. dom(x) remembers the first
  // set member that covered x; the (x, dom(x)) edges form a spanning forest.
  EffectiveDegreeState state(g);
  std::vector<NodeId> dom(static_cast<size_t>(n), -1);
  std::vector<char> in_set(static_cast<size_t>(n), 0);
  std::vector<NodeId> stage1;
  while (state.unmarked_count() > 0) {
    NodeId best = -1;
    int best_weight = -1;
    for (NodeId u = 0; u < n; ++u) {
      if (in_set[static_cast<size_t>(u)]) continue;
      const int weight = state.delta(u) + (state.marked(u) ? 0 : 1);
      if (weight > best_weight) {  // ascending scan keeps the minimum id on ties
        best_weight = weight;
        best = u;
      }
    }
    if (!state.marked(best)) dom[static_cast<size_t>(best)] = best;
    for (NodeId x : g.neighbors(best))
      if (!state.marked(x)) dom[static_cast<size_t>(x)] = best;
    in_set[static_cast<size_t>(best)] = 1;
    stage1.push_back(best);
    state.add_to_set(best);
  }

  // Stage 2: join the forest components through the lightest cross link;
  // weight counts endpoints outside the set, ties go to the smaller (u, v).
  std::vector<int> parent(static_cast<size_t>(n));
  for (NodeId x = 0; x < n; ++x) parent[static_cast<size_t>(x)] = x;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  int components = n;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[static_cast<size_t>(b)] = a;
      --components;
    }
  };
  for (NodeId x = 0; x < n; ++x)
    if (dom[static_cast<size_t>(x)] != x) unite(x, dom[static_cast<size_t>(x)]);

  const auto all_edges = g.edges();
  std::vector<NodeId> stage2;
  while (components > 1) {
    int best_weight = INT_MAX;
    NodeId best_u = -1, best_v = -1;
    for (auto [u, v] : all_edges) {
      if (find(u) == find(v)) continue;
      const int weight = (in_set[static_cast<size_t>(u)] ? 0 : 1) +
                         (in_set[static_cast<size_t>(v)] ? 0 : 1);
      if (weight < best_weight) {  // edges() is ascending, ties keep the first
        best_weight = weight;
        best_u = u;
        best_v = v;
      }
    }
    for (NodeId x : {best_u, best_v}) {
      if (!in_set[static_cast<size_t>(x)]) {
        in_set[static_cast<size_t>(x)] = 1;
        stage2.push_back(x);
      }
    }
    unite(best_u, best_v);
  }

  res.cds = stage1;
  res.cds.insert(res.cds.end(), stage2.begin(), stage2.end());
  res.wall_time = Clock::now() - t0;
  for (NodeId d : stage1) res.roles[static_cast<size_t>(d)] = NodeRole::dominator;
  for (NodeId c : stage2) res.roles[static_cast<size_t>(c)] = NodeRole::connector;
  finish_result(g, res);
  return res;
}

CdsResult run_algorithm(const Graph& g, const std::string& name, Mcds2Rule rule) {
  if (name == "mmcds") return mmcds(g);
  if (name == "mcds1") return wuli_mcds1(g);
  if (name == "mcds2") return mcds2(g, rule);
  if (name == "das") return das_cds(g);
  throw config_error("unknown algorithm: " + name);
}

}  // namespace cds
