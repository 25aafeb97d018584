#pragma once

#include <optional>
#include <vector>

#include "faultloc/graph.hpp"
#include "faultloc/topology.hpp"

namespace faultloc {

enum class AuxKind {
  // Every monitor collapsed into one virtual monitor.
  AllMonitors,
  // Every monitor except `excluded_monitor` collapsed into the virtual monitor.
  AllButOneMonitor,
};

// Auxiliary graph on N + {m'}: monitors are deleted, a virtual monitor m' is
// joined to the non-monitor neighbors of the represented monitors, and those
// neighbors are pairwise joined by virtual links.
//
// Node numbering: non-monitors in ascending original id, then m'.
struct AuxiliaryGraph {
  Graph graph;
  NodeId virtual_monitor = 0;
  AuxKind kind = AuxKind::AllMonitors;
  std::optional<NodeId> excluded_monitor;
  // Links that were not already edges between non-monitors: every m'-link
  // and every clique link not suppressed as a duplicate.
  std::vector<Edge> virtual_edges;
  // Original id of every aux node except m'.
  std::vector<NodeId> origin;

  // Aux id of an original non-monitor, nullopt for monitors.
  std::optional<NodeId> aux_id(NodeId original) const;
};

// G*: the virtual monitor stands for all of M.
AuxiliaryGraph build_gstar(const Topology& topology);

// G_m: the virtual monitor stands for M \ {m}.
AuxiliaryGraph build_gm(const Topology& topology, NodeId monitor);

// Minimum vertex connectivity of G_m over all monitors m.
std::size_t delta_min(const Topology& topology);

}  // namespace faultloc
