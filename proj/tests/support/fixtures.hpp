#pragma once

#include <string>
#include <vector>

#include "faultloc/document.hpp"
#include "faultloc/generate.hpp"
#include "faultloc/topology.hpp"

namespace faultloc::testing {

// m1 - v1 - v2 - m2            ids: m1=0 v1=1 v2=2 m2=3
inline Topology path4() { return Topology::create(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}, std::vector<NodeId>{0, 3}); }

// m - v1 - v2 - v3 - m         ids: m=0 v1=1 v2=2 v3=3
inline Topology cycle4_one_monitor() {
  return Topology::create(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}, std::vector<NodeId>{0});
}

// m1 - v - m2                  ids: m1=0 v=1 m2=2
inline Topology path3() { return Topology::create(3, std::vector<Edge>{{0, 1}, {1, 2}}, std::vector<NodeId>{0, 2}); }

// m1 - v1 - m2 - v2 - m1       ids: m1=0 v1=1 m2=2 v2=3
inline Topology square_two_monitors() {
  return Topology::create(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}, std::vector<NodeId>{0, 2});
}

// monitor m=0 at the center, leaves v1..v3 = 1..3
inline Topology star_monitor_center() {
  return Topology::create(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}, std::vector<NodeId>{0});
}

// Edges m1-v1, v1-m2, v1-v2, v2-m2; ids m1=0 v1=1 v2=2 m2=3. Carries the
// two-path ensemble p0 = (m1,v1,m2), p1 = (m1,v1,v2,m2).
inline Topology up_example() {
  return Topology::create(4, std::vector<Edge>{{0, 1}, {1, 3}, {1, 2}, {2, 3}}, std::vector<NodeId>{0, 3});
}
inline std::vector<std::vector<NodeId>> up_example_paths() { return {{0, 1, 3}, {0, 1, 2, 3}}; }

inline TopologyDocument named(const Topology& t, std::vector<std::string> names) {
  return make_document(t, std::move(names));
}

struct CorpusInstance {
  std::string label;
  TopologyDocument document;
  Topology topology;
};

// Deterministic acceptance corpus: 4..8 nodes, 1..3 monitors, a mix of
// Erdos-Renyi densities, preferential attachment and small grids.
inline std::vector<CorpusInstance> make_corpus(std::size_t count) {
  static const double kDensity[] = {0.3, 0.45, 0.6, 0.75};
  static const Grid kGrids[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}};
  std::vector<CorpusInstance> corpus;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 4 + i % 5;
    const std::size_t monitors = 1 + (i / 5) % 3;
    TopologySpec spec;
    spec.seed = 1000 + i;
    spec.monitors = monitors;
    std::string label;
    if (i % 10 == 7) {
      spec.model = BarabasiAlbert{n, 1 + i % 2};
      label = "ba";
    } else if (i % 10 == 9) {
      const Grid g = kGrids[(i / 10) % 5];
      spec.model = g;
      label = "grid";
    } else {
      spec.model = ErdosRenyi{n, kDensity[(i / 3) % 4]};
      label = "er";
    }
    TopologyDocument doc = generate_topology(spec);
    Topology topo = to_topology(doc);
    corpus.push_back({label + "#" + std::to_string(i), std::move(doc), std::move(topo)});
  }
  return corpus;
}

}  // namespace faultloc::testing
