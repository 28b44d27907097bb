#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cds/errors.hpp"

namespace cds {

/// Dense node id in [0, n). All algorithms break ties by id, so inputs with
/// arbitrary labels must be remapped to dense ids before constructing a Graph.
using NodeId = int;

/// Immutable simple undirected graph. Adjacency lists are sorted, symmetric,
/// self-loop free and duplicate free. Safe for concurrent reads; there is no
/// mutation after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Endpoint order within an edge and the order of
  /// the list itself do not affect the result. Throws invalid_node_error for
  /// out-of-range endpoints, precondition_error for self loops or duplicates.
  Graph(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edge_list);

  int node_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  /// Neighbor ids of u, sorted ascending. The graph cannot be mutated
  /// through the returned reference.
  const std::vector<NodeId>& neighbors(NodeId u) const;

  int degree(NodeId u) const { return static_cast<int>(neighbors(u).size()); }
  bool has_edge(NodeId u, NodeId v) const;
  int max_degree() const;

  /// Edges as (u, v) with u < v, sorted ascending.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

  /// Throws invalid_node_error unless 0 <= u < node_count().
  void check_node(NodeId u) const;

 private:
  std::vector<std::vector<NodeId>> adj_;
  int edge_count_ = 0;
};

/// All nodes at graph distance 1 or 2 from u, sorted ascending; u itself is
/// never included.
std::vector<NodeId> two_hop_neighborhood(const Graph& g, NodeId u);

/// True iff every node is reachable from node 0. The empty graph counts as
/// connected.
bool is_connected(const Graph& g);

/// True iff the subgraph induced by s is connected. Sets with at most one
/// node count as connected.
bool induced_connected(const Graph& g, const std::vector<NodeId>& s);

/// Shortest u-to-v path with at most max_hops edges, or nullopt if none
/// exists. Among equal-length shortest paths returns the lexicographically
/// smallest node sequence, so results are reproducible.
std::optional<std::vector<NodeId>> shortest_path(const Graph& g, NodeId u,
                                                 NodeId v, int max_hops);

/// BFS hop counts from u; -1 marks unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, NodeId u);

// Graph text format: header line "n m", then m lines "u v" with
// 0 <= u < v < n, whitespace separated, LF endings. Lines starting with '#'
// are ignored. Duplicate edges, self loops, out-of-range endpoints and
// malformed lines are load errors (io_error).
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);

/// FNV-1a over the node count and the sorted edge list. Used to assert that
/// paired experiment trials saw identical graphs.
std::uint64_t graph_hash(const Graph& g);

}  // namespace cds
