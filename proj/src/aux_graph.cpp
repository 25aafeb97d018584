#include "faultloc/aux_graph.hpp"

#include <algorithm>
#include <string>

#include "faultloc/error.hpp"

namespace faultloc {

namespace {

AuxiliaryGraph build_aux(const Topology& topology, const NodeSet& represented, AuxKind kind,
                         std::optional<NodeId> excluded) {
  if (topology.sigma() == 0) throw InputError("auxiliary graph needs at least one non-monitor");

  AuxiliaryGraph aux;
  aux.kind = kind;
  aux.excluded_monitor = excluded;
  aux.origin = topology.non_monitors();
  aux.virtual_monitor = static_cast<NodeId>(aux.origin.size());
  aux.graph = Graph(aux.origin.size() + 1);

  std::vector<std::optional<NodeId>> to_aux(topology.node_count());
  for (NodeId i = 0; i < aux.origin.size(); ++i) to_aux[aux.origin[i]] = i;

  for (const Edge& e : topology.graph().edges()) {
    if (to_aux[e.a] && to_aux[e.b]) aux.graph.add_edge(*to_aux[e.a], *to_aux[e.b]);
  }

  NodeSet attached;
  for (NodeId v : neighborhood_of_set(topology.graph(), represented)) {
    if (to_aux[v]) attached.push_back(*to_aux[v]);
  }
  for (NodeId x : attached) {
    aux.graph.add_edge(x, aux.virtual_monitor);
    aux.virtual_edges.push_back(Edge::normalized(x, aux.virtual_monitor));
  }
  for (std::size_t i = 0; i < attached.size(); ++i) {
    for (std::size_t j = i + 1; j < attached.size(); ++j) {
      if (aux.graph.add_edge(attached[i], attached[j])) {
        aux.virtual_edges.push_back(Edge::normalized(attached[i], attached[j]));
      }
    }
  }
  std::sort(aux.virtual_edges.begin(), aux.virtual_edges.end());
  return aux;
}

}  // namespace

std::optional<NodeId> AuxiliaryGraph::aux_id(NodeId original) const {
  auto it = std::lower_bound(origin.begin(), origin.end(), original);
  if (it == origin.end() || *it != original) return std::nullopt;
  return static_cast<NodeId>(it - origin.begin());
}

AuxiliaryGraph build_gstar(const Topology& topology) {
  return build_aux(topology, topology.monitors(), AuxKind::AllMonitors, std::nullopt);
}

AuxiliaryGraph build_gm(const Topology& topology, NodeId monitor) {
  if (!topology.is_monitor(monitor)) {
    throw InputError("node " + std::to_string(monitor) + " is not a monitor");
  }
  NodeSet others;
  for (NodeId m : topology.monitors()) {
    if (m != monitor) others.push_back(m);
  }
  return build_aux(topology, others, AuxKind::AllButOneMonitor, monitor);
}

std::size_t delta_min(const Topology& topology) {
  std::optional<std::size_t> best;
  for (NodeId m : topology.monitors()) {
    const std::size_t kappa = vertex_connectivity(build_gm(topology, m).graph);
    if (!best || kappa < *best) best = kappa;
  }
  return *best;
}

}  // namespace faultloc
