#include "cds/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace cds {

namespace {

std::string node_range_message(NodeId u, int n) {
  std::ostringstream os;
  os << "node " << u << " out of range [0, " << n << ")";
  return os.str();
}

}  // namespace

Graph::Graph(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edge_list) {
  if (node_count < 0) throw precondition_error("node count must be non-negative");
  adj_.resize(static_cast<size_t>(node_count));
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= node_count) throw invalid_node_error(node_range_message(u, node_count));
    if (v < 0 || v >= node_count) throw invalid_node_error(node_range_message(v, node_count));
    if (u == v) throw precondition_error("self loop on node " + std::to_string(u));
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (size_t u = 0; u < adj_.size(); ++u) {
    auto& nbrs = adj_[u];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw precondition_error("duplicate edge at node " + std::to_string(u));
  }
  edge_count_ = static_cast<int>(edge_list.size());
}

const std::vector<NodeId>& Graph::neighbors(NodeId u) const {
  check_node(u);
  return adj_[static_cast<size_t>(u)];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& nbrs = adj_[static_cast<size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_node(NodeId u) const {
  if (u < 0 || u >= node_count()) throw invalid_node_error(node_range_message(u, node_count()));
}

std::vector<NodeId> two_hop_neighborhood(const Graph& g, NodeId u) {
  g.check_node(u);
  std::vector<char> seen(static_cast<size_t>(g.node_count()), 0);
  for (NodeId v : g.neighbors(u)) {
    seen[static_cast<size_t>(v)] = 1;
    for (NodeId w : g.neighbors(v)) seen[static_cast<size_t>(w)] = 1;
  }
  seen[static_cast<size_t>(u)] = 0;
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (seen[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, NodeId u) {
  g.check_node(u);
  std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
  std::queue<NodeId> q;
  dist[static_cast<size_t>(u)] = 0;
  q.push(u);
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop();
    for (NodeId y : g.neighbors(x)) {
      if (dist[static_cast<size_t>(y)] < 0) {
        dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return true;  // vacuous by convention
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool induced_connected(const Graph& g, const std::vector<NodeId>& s) {
  std::vector<char> member(static_cast<size_t>(g.node_count()), 0);
  int count = 0;
  for (NodeId u : s) {
    g.check_node(u);
    if (!member[static_cast<size_t>(u)]) {
      member[static_cast<size_t>(u)] = 1;
      ++count;
    }
  }
  if (count <= 1) return true;
  NodeId start = s.front();
  std::queue<NodeId> q;
  std::vector<char> seen(static_cast<size_t>(g.node_count()), 0);
  seen[static_cast<size_t>(start)] = 1;
  q.push(start);
  int reached = 1;
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop();
    for (NodeId y : g.neighbors(x)) {
      if (member[static_cast<size_t>(y)] && !seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++reached;
        q.push(y);
      }
    }
  }
  return reached == count;
}

std::optional<std::vector<NodeId>> shortest_path(const Graph& g, NodeId u,
                                                 NodeId v, int max_hops) {
  g.check_node(u);
  g.check_node(v);
  if (max_hops < 0) throw precondition_error("max_hops must be non-negative");
  if (u == v) return std::vector<NodeId>{u};
  auto dist_to_v = bfs_distances(g, v);
  int d = dist_to_v[static_cast<size_t>(u)];
  if (d < 0 || d > max_hops) return std::nullopt;
  // Walking toward v and always taking the smallest eligible neighbor yields
  // the lexicographically smallest shortest path.
  std::vector<NodeId> path{u};
  NodeId cur = u;
  while (cur != v) {
    for (NodeId w : g.neighbors(cur)) {
      if (dist_to_v[static_cast<size_t>(w)] == dist_to_v[static_cast<size_t>(cur)] - 1) {
        path.push_back(w);
        cur = w;
        break;
      }
    }
  }
  return path;
}

namespace {

// Data lines with '#' comments and blanks skipped.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) throw io_error("graph file: missing header line");
  std::istringstream header(line);
  long long n = 0, m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra))
    throw io_error("graph file line " + std::to_string(line_no) + ": header must be 'n m'");
  if (n < 0 || m < 0) throw io_error("graph file: negative counts in header");

  std::vector<std::pair<NodeId, NodeId>> edge_list;
  edge_list.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no))
      throw io_error("graph file: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra))
      throw io_error("graph file line " + std::to_string(line_no) + ": edge must be 'u v'");
    if (u < 0 || v >= n || v < 0 || u >= n)
      throw io_error("graph file line " + std::to_string(line_no) + ": endpoint out of range");
    if (u == v) throw io_error("graph file line " + std::to_string(line_no) + ": self loop");
    if (u > v) throw io_error("graph file line " + std::to_string(line_no) + ": edges must satisfy u < v");
    edge_list.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (next_data_line(in, line, line_no))
    throw io_error("graph file line " + std::to_string(line_no) + ": unexpected trailing data");
  try {
    return Graph(static_cast<int>(n), edge_list);
  } catch (const error& e) {
    throw io_error(std::string("graph file: ") + e.what());
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open graph file: " + path);
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  save_graph(g, out);
  if (!out.good()) throw io_error("write failed: " + path);
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  auto absorb = [&h](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      h ^= (value >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  absorb(static_cast<std::uint64_t>(g.node_count()));
  for (auto [u, v] : g.edges()) {
    absorb(static_cast<std::uint64_t>(u));
    absorb(static_cast<std::uint64_t>(v));
  }
  return h;
}

}  // namespace cds
