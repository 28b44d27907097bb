#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cds/graph.hpp"
#include "cds/prng.hpp"
#include "test_util.hpp"

using namespace cds;
using namespace cds_test;

TEST_CASE("neighbors") {
  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.neighbors(0) == std::vector<NodeId>{1, 2});

  Graph single(1, {});
  CHECK(single.neighbors(0).empty());

  Graph p3 = path_graph(3);
  CHECK(p3.neighbors(1) == std::vector<NodeId>{0, 2});

  CHECK_THROWS_AS(p3.neighbors(3), invalid_node_error);
  CHECK_THROWS_AS(p3.neighbors(-1), invalid_node_error);
}

TEST_CASE("construction rejects bad edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), precondition_error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), precondition_error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), invalid_node_error);
  CHECK_THROWS_AS(Graph(2, {{-1, 0}}), invalid_node_error);
}

TEST_CASE("two_hop_neighborhood") {
  Graph p5 = path_graph(5);
  CHECK(two_hop_neighborhood(p5, 1) == std::vector<NodeId>{0, 2, 3});
  CHECK(two_hop_neighborhood(p5, 2) == std::vector<NodeId>{0, 1, 3, 4});

  Graph single(1, {});
  CHECK(two_hop_neighborhood(single, 0).empty());

  CHECK_THROWS_AS(two_hop_neighborhood(p5, 7), invalid_node_error);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path_graph(3)));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(is_connected(Graph(0, {})));
  CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("induced_connected") {
  Graph p5 = path_graph(5);
  CHECK(induced_connected(p5, {1, 2, 3}));
  CHECK_FALSE(induced_connected(p5, {1, 3}));
  CHECK(induced_connected(p5, {}));
  CHECK(induced_connected(p5, {2}));
  CHECK_THROWS_AS(induced_connected(p5, {5}), invalid_node_error);
}

TEST_CASE("shortest_path") {
  Graph p4 = path_graph(4);
  auto p = shortest_path(p4, 0, 3, 3);
  REQUIRE(p.has_value());
  CHECK(*p == std::vector<NodeId>{0, 1, 2, 3});

  Graph p5 = path_graph(5);
  CHECK_FALSE(shortest_path(p5, 0, 4, 3).has_value());

  auto self = shortest_path(p5, 2, 2, 0);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<NodeId>{2});

  CHECK_THROWS_AS(shortest_path(p5, 0, 9, 3), invalid_node_error);
}

TEST_CASE("shortest_path takes the lexicographically smallest route") {
  // Diamond: 0-1, 0-2, 1-3, 2-3. Both routes to 3 have two hops.
  Graph diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto p = shortest_path(diamond, 0, 3, 5);
  REQUIRE(p.has_value());
  CHECK(*p == std::vector<NodeId>{0, 1, 3});
}

TEST_CASE("two-hop properties on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(12, 0.25, 1000 + seed);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      auto two = two_hop_neighborhood(g, u);
      CHECK_FALSE(std::binary_search(two.begin(), two.end(), u));
      for (NodeId v : g.neighbors(u)) CHECK(std::binary_search(two.begin(), two.end(), v));
    }
  }
}

TEST_CASE("shortest_path length matches an independent distance matrix") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 17);
    Graph g = random_graph(n, 0.3, 2000 + seed);
    // Floyd-Warshall, nothing shared with the BFS path code.
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v) {
        auto p = shortest_path(g, u, v, n);
        if (d[u][v] >= inf) {
          CHECK_FALSE(p.has_value());
        } else {
          REQUIRE(p.has_value());
          CHECK(static_cast<int>(p->size()) - 1 == d[u][v]);
          // Consecutive path nodes must be adjacent.
          for (size_t i = 1; i < p->size(); ++i) CHECK(g.has_edge((*p)[i - 1], (*p)[i]));
        }
      }
  }
}

TEST_CASE("induced_connected on the full node set agrees with is_connected") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(10, 0.2, 3000 + seed);
    std::vector<NodeId> all;
    for (NodeId u = 0; u < g.node_count(); ++u) all.push_back(u);
    CHECK(induced_connected(g, all) == is_connected(g));
  }
}

TEST_CASE("construction is edge-order independent") {
  std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}};
  Graph a(4, edges);
  SplitMix64 rng(99);
  for (int round = 0; round < 10; ++round) {
    for (size_t i = edges.size() - 1; i > 0; --i)
      std::swap(edges[i], edges[rng.next() % (i + 1)]);
    // Flip some endpoint orders too.
    auto flipped = edges;
    for (auto& e : flipped)
      if (rng.next() & 1) std::swap(e.first, e.second);
    CHECK(Graph(4, flipped) == a);
  }
}

TEST_CASE("graph file round trip") {
  Graph g = random_connected_graph(9, 0.2, 42);
  std::ostringstream out;
  save_graph(g, out);
  std::istringstream in(out.str());
  Graph back = load_graph(in);
  CHECK(back == g);
  CHECK(graph_hash(back) == graph_hash(g));
}

TEST_CASE("graph file format accepts comments and rejects violations") {
  {
    std::istringstream in("# comment\n3 2\n0 1\n# middle\n1 2\n");
    Graph g = load_graph(in);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
  }
  auto load_from = [](const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
  };
  CHECK_THROWS_AS(load_from(""), io_error);
  CHECK_THROWS_AS(load_from("3\n"), io_error);
  CHECK_THROWS_AS(load_from("3 2\n0 1\n"), io_error);              // missing edge
  CHECK_THROWS_AS(load_from("3 1\n1 1\n"), io_error);              // self loop
  CHECK_THROWS_AS(load_from("3 2\n0 1\n0 1\n"), io_error);         // duplicate
  CHECK_THROWS_AS(load_from("3 1\n1 0\n"), io_error);              // u >= v
  CHECK_THROWS_AS(load_from("3 1\n0 3\n"), io_error);              // out of range
  CHECK_THROWS_AS(load_from("3 1\n0 1\n0 2\n"), io_error);         // trailing data
  CHECK_THROWS_AS(load_from("3 1\n0 1 2\n"), io_error);            // malformed edge line
  CHECK_THROWS_AS(load_graph_file("/nonexistent/x.graph"), io_error);
}
