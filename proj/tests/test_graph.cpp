#include <doctest.h>

#include <random>

#include "faultloc/error.hpp"
#include "faultloc/graph.hpp"
#include "faultloc/topology.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace faultloc;
using namespace faultloc::testing;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (NodeId v = 0; v < n; ++v) g.add_edge(v, static_cast<NodeId>((v + 1) % n));
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (u(rng) < p) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
  Graph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, dup), InputError);
  CHECK_THROWS_AS(Topology::create(2, std::vector<Edge>{{0, 1}}, std::vector<NodeId>{}), InputError);
}

TEST_CASE("topology partitions nodes into monitors and non-monitors") {
  const Topology t = path4();
  CHECK(t.monitors() == NodeSet{0, 3});
  CHECK(t.non_monitors() == NodeSet{1, 2});
  CHECK(t.sigma() == 2);
  CHECK(t.monitor_neighbors(1) == NodeSet{0});
  CHECK_THROWS_AS(t.check_non_monitor(0), InputError);
}

TEST_CASE("connected_components") {
  SUBCASE("deleting a cut vertex of a path") {
    const auto p = connected_components(path4().graph(), {1});
    REQUIRE(p.components.size() == 2);
    CHECK(p.components[0] == NodeSet{0});
    CHECK(p.components[1] == NodeSet{2, 3});
    CHECK(p.label[1] == -1);
  }
  SUBCASE("nothing removed from a connected graph") {
    const auto p = connected_components(cycle(5));
    REQUIRE(p.components.size() == 1);
    CHECK(p.components[0] == NodeSet{0, 1, 2, 3, 4});
  }
  SUBCASE("5-cycle minus two non-adjacent nodes") {
    CHECK(connected_components(cycle(5), {0, 2}).components.size() == 2);
  }
  SUBCASE("unknown id") { CHECK_THROWS_AS(connected_components(cycle(3), {7}), InputError); }

  SUBCASE("always a partition") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 2 + rng() % 9;
      const Graph g = random_graph(rng, n, 0.35);
      NodeSet removed;
      for (NodeId v = 0; v < n; ++v)
        if (rng() % 4 == 0) removed.push_back(v);
      const auto p = connected_components(g, removed);
      std::vector<int> hits(n, 0);
      for (NodeId v : removed) ++hits[v];
      for (std::size_t c = 0; c < p.components.size(); ++c) {
        if (c > 0) CHECK(p.components[c - 1].front() < p.components[c].front());
        for (NodeId v : p.components[c]) {
          ++hits[v];
          for (NodeId w : g.adjacent(v)) {
            CHECK((p.label[w] == -1 || p.label[w] == static_cast<int>(c)));
          }
        }
      }
      for (int h : hits) CHECK(h == 1);
    }
  }
}

TEST_CASE("neighbors and neighborhood_of_set") {
  const Topology star = star_monitor_center();
  CHECK(neighbors(star.graph(), 0) == NodeSet{1, 2, 3});
  CHECK(neighbors(Graph(2), 1).empty());
  CHECK(neighbors(path4().graph(), 1) == NodeSet{0, 2});
  CHECK_THROWS_AS(neighbors(Graph(2), 2), InputError);

  CHECK(neighborhood_of_set(path4().graph(), {0, 3}) == NodeSet{1, 2});
  CHECK(neighborhood_of_set(path4().graph(), {0, 1, 2, 3}).empty());
  CHECK(neighborhood_of_set(star.graph(), {0}) == NodeSet{1, 2, 3});
}

TEST_CASE("max_disjoint_paths") {
  CHECK(max_disjoint_paths(path3().graph(), 1, {0, 2}) == 2);
  CHECK(max_disjoint_paths(path4().graph(), 2, {0, 3}, {1}) == 1);
  // Frozen from brute_max_disjoint_paths.
  const Graph square = square_two_monitors().graph();
  REQUIRE(brute_max_disjoint_paths(square, 1, {0, 2}, {}) == 2);
  CHECK(max_disjoint_paths(square, 1, {0, 2}) == 2);

  CHECK_THROWS_AS(max_disjoint_paths(square, 1, {0, 2}, {1}), InputError);
  CHECK_THROWS_AS(max_disjoint_paths(square, 1, {0, 2}, {2}), InputError);
  CHECK_THROWS_AS(max_disjoint_paths(square, 0, {0, 2}), InputError);

  SUBCASE("matches exhaustive path-family search") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 3 + rng() % 6;
      const Graph g = random_graph(rng, n, 0.45);
      const NodeId source = static_cast<NodeId>(rng() % n);
      NodeSet targets, forbidden;
      for (NodeId v = 0; v < n; ++v) {
        if (v == source) continue;
        const auto roll = rng() % 5;
        if (roll < 2) targets.push_back(v);
        else if (roll == 2) forbidden.push_back(v);
      }
      const std::size_t fast = max_disjoint_paths(g, source, targets, forbidden);
      CHECK(fast == brute_max_disjoint_paths(g, source, targets, forbidden));

      const auto paths = disjoint_paths(g, source, targets, forbidden, targets.size());
      CHECK(paths.size() == fast);
      std::vector<int> used(n, 0);
      for (const auto& p : paths) {
        CHECK(p.front() == source);
        CHECK(std::binary_search(targets.begin(), targets.end(), p.back()));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
        for (std::size_t i = 1; i < p.size(); ++i) {
          ++used[p[i]];
          CHECK_FALSE(std::binary_search(forbidden.begin(), forbidden.end(), p[i]));
        }
      }
      for (int u : used) CHECK(u <= 1);
    }
  }
}

TEST_CASE("two disjoint monitor paths <=> a simple monitor path through v") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    Graph g = random_graph(rng, n, 0.45);
    std::vector<bool> flags(n, false);
    const std::size_t monitors = 1 + rng() % 3;
    for (std::size_t i = 0; i < monitors && i + 1 < n; ++i) flags[i] = true;
    const Topology t(std::move(g), flags);
    for (NodeId v : t.non_monitors()) {
      const std::vector<bool> none(n, false);
      const bool flow = max_disjoint_paths(t.graph(), v, t.monitors()) >= 2;
      CHECK(flow == simple_monitor_path_through(t, v, none));
    }
  }
}

TEST_CASE("vertex_connectivity") {
  CHECK(vertex_connectivity(complete(4)) == 3);
  CHECK(vertex_connectivity(path3().graph()) == 1);
  REQUIRE(brute_vertex_connectivity(cycle(5)) == 2);
  CHECK(vertex_connectivity(cycle(5)) == 2);
  CHECK(vertex_connectivity(Graph(2)) == 0);
  CHECK(vertex_connectivity(complete(2)) == 1);
  CHECK_THROWS_AS(vertex_connectivity(Graph(1)), InputError);

  SUBCASE("matches exhaustive minimum cut on graphs up to 8 nodes") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 600; ++trial) {
      const std::size_t n = 2 + rng() % 7;
      const double p = 0.2 + 0.1 * static_cast<double>(rng() % 8);
      const Graph g = random_graph(rng, n, p);
      const std::size_t kappa = vertex_connectivity(g);
      CHECK(kappa == brute_vertex_connectivity(g));
      for (std::size_t k = 0; k <= n; ++k) CHECK(is_k_connected(g, k) == brute_is_k_connected(g, k));
    }
  }
}

TEST_CASE("is_k_connected") {
  CHECK(is_k_connected(cycle(5), 2));
  CHECK_FALSE(is_k_connected(cycle(5), 3));
  CHECK(is_k_connected(Graph(3), 0));
  CHECK(is_k_connected(Graph(1), 0));
  CHECK_FALSE(is_k_connected(Graph(1), 1));
  CHECK(is_k_connected(complete(4), 3));
  CHECK_FALSE(is_k_connected(complete(4), 4));
}

TEST_CASE("remove_non_monitors renumbers survivors") {
  const SubTopology sub = remove_non_monitors(cycle4_one_monitor(), {1, 3});
  CHECK(sub.topology.node_count() == 2);
  CHECK(sub.to_old == std::vector<NodeId>{0, 2});
  CHECK_FALSE(sub.to_new[1].has_value());
  CHECK(sub.topology.monitors() == NodeSet{0});
  CHECK(sub.topology.graph().edge_count() == 0);
  CHECK_THROWS_AS(remove_non_monitors(cycle4_one_monitor(), {0}), InputError);
}
