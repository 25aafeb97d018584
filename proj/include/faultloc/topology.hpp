#pragma once

#include <optional>
#include <span>
#include <vector>

#include "faultloc/graph.hpp"

namespace faultloc {

// A monitored network: an undirected graph whose nodes are split into
// monitors M and non-monitors N. Only non-monitors can fail.
class Topology {
 public:
  // Throws InputError if the flag vector does not match the graph or if no
  // node is a monitor.
  Topology(Graph graph, std::vector<bool> is_monitor);

  static Topology create(std::size_t node_count, std::span<const Edge> edges,
                         std::span<const NodeId> monitors);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t node_count() const noexcept { return graph_.node_count(); }
  bool is_monitor(NodeId v) const;
  const NodeSet& monitors() const noexcept { return monitors_; }
  const NodeSet& non_monitors() const noexcept { return non_monitors_; }

  // Number of non-monitors.
  std::size_t sigma() const noexcept { return non_monitors_.size(); }

  // Monitors adjacent to v.
  NodeSet monitor_neighbors(NodeId v) const;

  // Throws InputError unless v is a non-monitor of this topology.
  void check_non_monitor(NodeId v) const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  Graph graph_;
  std::vector<bool> is_monitor_;
  NodeSet monitors_;
  NodeSet non_monitors_;
};

// Topology with a set of non-monitors deleted, plus the id translation.
struct SubTopology {
  Topology topology;
  // old id -> new id, nullopt for deleted nodes.
  std::vector<std::optional<NodeId>> to_new;
  // new id -> old id.
  std::vector<NodeId> to_old;
};

// Deletes the given non-monitors; monitors keep their relative order.
SubTopology remove_non_monitors(const Topology& topology, const NodeSet& removed);

}  // namespace faultloc
