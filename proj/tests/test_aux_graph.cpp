#include <doctest.h>

#include <random>

#include "faultloc/aux_graph.hpp"
#include "faultloc/error.hpp"
#include "faultloc/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace faultloc;
using namespace faultloc::testing;

namespace {

// Raw component condition: for every V' of at most s non-monitors (plus `extra`
// when given), each component of G - V' holds a monitor other than `extra`.
bool components_monitored(const Topology& t, std::size_t s, std::optional<NodeId> extra) {
  const NodeSet& n = t.non_monitors();
  const std::uint32_t limit = 1u << n.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > s) continue;
    NodeSet removed;
    for (std::size_t i = 0; i < n.size(); ++i)
      if (mask >> i & 1u) removed.push_back(n[i]);
    if (extra) removed.push_back(*extra);
    const auto p = connected_components(t.graph(), make_node_set(removed));
    for (const auto& comp : p.components) {
      bool monitored = false;
      for (NodeId v : comp) monitored = monitored || t.is_monitor(v);
      if (!monitored) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("build_gstar examples") {
  SUBCASE("path m1-v1-v2-m2 gives a triangle") {
    const AuxiliaryGraph g = build_gstar(path4());
    CHECK(g.graph.node_count() == 3);
    CHECK(g.virtual_monitor == 2);
    CHECK(g.origin == std::vector<NodeId>{1, 2});
    CHECK(g.graph.edge_count() == 3);
    REQUIRE(brute_vertex_connectivity(g.graph) == 2);
    CHECK(vertex_connectivity(g.graph) == 2);
    // v1v2 was already real; only the two m' links are virtual.
    CHECK(g.virtual_edges.size() == 2);
  }
  SUBCASE("monitor-centered star gives K4") {
    const AuxiliaryGraph g = build_gstar(star_monitor_center());
    CHECK(g.graph.node_count() == 4);
    CHECK(g.graph.edge_count() == 6);
    CHECK(vertex_connectivity(g.graph) == 3);
  }
  SUBCASE("single non-monitor") {
    const AuxiliaryGraph g = build_gstar(Topology::create(2, std::vector<Edge>{{0, 1}}, std::vector<NodeId>{0}));
    CHECK(g.graph.node_count() == 2);
    CHECK(g.graph.has_edge(0, 1));
    CHECK(vertex_connectivity(g.graph) == 1);
  }
  SUBCASE("no non-monitors") {
    CHECK_THROWS_AS(build_gstar(Topology::create(2, std::vector<Edge>{{0, 1}}, std::vector<NodeId>{0, 1})),
                    InputError);
  }
}

TEST_CASE("build_gm examples") {
  SUBCASE("path m1-v-m2 without m1") {
    const AuxiliaryGraph g = build_gm(path3(), 0);
    CHECK(g.excluded_monitor == NodeId{0});
    CHECK(g.graph.node_count() == 2);
    CHECK(g.graph.has_edge(0, 1));
    CHECK(vertex_connectivity(g.graph) == 1);
  }
  SUBCASE("path m1-v1-v2-m2 without m2 is a path v2-v1-m'") {
    const AuxiliaryGraph g = build_gm(path4(), 3);
    const NodeId v1 = *g.aux_id(1);
    const NodeId v2 = *g.aux_id(2);
    CHECK(g.graph.has_edge(g.virtual_monitor, v1));
    CHECK_FALSE(g.graph.has_edge(g.virtual_monitor, v2));
    CHECK(g.graph.has_edge(v1, v2));
    CHECK(vertex_connectivity(g.graph) == 1);
  }
  SUBCASE("node seen only by the excluded monitor keeps its peer edges") {
    // m1=0 - v1=1 - v2=2 - m2=3, plus v3=4 hanging off m1 and v2.
    const Topology t = Topology::create(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}},
                                        std::vector<NodeId>{0, 3});
    const AuxiliaryGraph g = build_gm(t, 0);
    const NodeId v3 = *g.aux_id(4);
    CHECK(g.graph.degree(v3) == 1);
    CHECK(g.graph.has_edge(v3, *g.aux_id(2)));
  }
  SUBCASE("sole monitor leaves m' isolated") {
    const AuxiliaryGraph g = build_gm(cycle4_one_monitor(), 0);
    CHECK(g.graph.degree(g.virtual_monitor) == 0);
    CHECK(vertex_connectivity(g.graph) == 0);
  }
  CHECK_THROWS_AS(build_gm(path4(), 1), InputError);
}

TEST_CASE("delta_min examples") {
  CHECK(delta_min(path3()) == 1);
  CHECK(delta_min(square_two_monitors()) == 2);
  CHECK(delta_min(cycle4_one_monitor()) == vertex_connectivity(build_gm(cycle4_one_monitor(), 0).graph));
}

TEST_CASE("auxiliary graph structure and component conditions on the corpus") {
  const auto corpus = make_corpus(150);
  for (const auto& inst : corpus) {
    const Topology& t = inst.topology;
    CAPTURE(inst.label);
    const NodeSet& monitors = t.monitors();

    const AuxiliaryGraph star = build_gstar(t);
    CHECK(star.graph.node_count() == t.sigma() + 1);
    CHECK(star.graph.degree(star.virtual_monitor) == neighborhood_of_set(t.graph(), monitors).size());
    for (NodeId a : t.non_monitors())
      for (NodeId b : t.non_monitors())
        if (a < b && t.graph().has_edge(a, b)) CHECK(star.graph.has_edge(*star.aux_id(a), *star.aux_id(b)));

    for (std::size_t s = 0; s + 1 <= t.sigma(); ++s) {
      CHECK(components_monitored(t, s, std::nullopt) == brute_is_k_connected(star.graph, s + 1));
    }
    for (NodeId m : monitors) {
      const AuxiliaryGraph gm = build_gm(t, m);
      NodeSet others;
      for (NodeId o : monitors)
        if (o != m) others.push_back(o);
      NodeSet expect_adj;
      for (NodeId w : neighborhood_of_set(t.graph(), others))
        if (!t.is_monitor(w)) expect_adj.push_back(w);
      CHECK(gm.graph.degree(gm.virtual_monitor) == expect_adj.size());
      for (std::size_t s = 0; s + 1 <= t.sigma(); ++s) {
        CHECK(components_monitored(t, s, m) == brute_is_k_connected(gm.graph, s + 1));
      }
    }
  }
}

TEST_CASE("relabeling the topology gives an isomorphic G*") {
  std::mt19937_64 rng(3);
  for (const auto& inst : make_corpus(40)) {
    const Topology& t = inst.topology;
    const std::size_t n = t.node_count();
    std::vector<NodeId> perm(n);
    for (NodeId v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : t.graph().edges()) edges.push_back({perm[e.a], perm[e.b]});
    NodeSet monitors;
    for (NodeId m : t.monitors()) monitors.push_back(perm[m]);
    const Topology relabeled = Topology::create(n, edges, monitors);
    const AuxiliaryGraph a = build_gstar(t);
    const AuxiliaryGraph b = build_gstar(relabeled);
    CHECK(a.graph.edge_count() == b.graph.edge_count());
    CHECK(vertex_connectivity(a.graph) == vertex_connectivity(b.graph));
    CHECK(a.graph.degree(a.virtual_monitor) == b.graph.degree(b.virtual_monitor));
    // Every original non-monitor keeps its aux degree under the relabeling.
    for (NodeId v : t.non_monitors())
      CHECK(a.graph.degree(*a.aux_id(v)) == b.graph.degree(*b.aux_id(perm[v])));
  }
}
