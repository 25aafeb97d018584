#include "faultloc/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "faultloc/error.hpp"
#include "faultloc/topology.hpp"
#include "max_flow.hpp"

namespace faultloc {

NodeSet make_node_set(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

namespace {

std::vector<bool> membership(const Graph& graph, const NodeSet& set) {
  std::vector<bool> in(graph.node_count(), false);
  for (NodeId v : set) {
    graph.check_node(v);
    in[v] = true;
  }
  return in;
}

}  // namespace

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  Graph graph(node_count);
  for (const Edge& e : edges) {
    if (!graph.add_edge(e.a, e.b)) {
      throw InputError("duplicate edge {" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                       "}");
    }
  }
  return graph;
}

bool Graph::add_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (a == b) throw InputError("self-loop on node " + std::to_string(a));
  auto& row_a = adjacency_[a];
  auto pos = std::lower_bound(row_a.begin(), row_a.end(), b);
  if (pos != row_a.end() && *pos == b) return false;
  row_a.insert(pos, b);
  auto& row_b = adjacency_[b];
  row_b.insert(std::lower_bound(row_b.begin(), row_b.end(), a), a);
  ++edge_count_;
  return true;
}

std::size_t Graph::degree(NodeId v) const {
  check_node(v);
  return adjacency_[v].size();
}

std::span<const NodeId> Graph::adjacent(NodeId v) const {
  check_node(v);
  return adjacency_[v];
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId a = 0; a < adjacency_.size(); ++a) {
    for (NodeId b : adjacency_[a]) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

void Graph::check_node(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw InputError("unknown node id " + std::to_string(v) + " (graph has " +
                     std::to_string(adjacency_.size()) + " nodes)");
  }
}

ComponentPartition connected_components(const Graph& graph, const NodeSet& removed) {
  const std::vector<bool> gone = membership(graph, removed);
  ComponentPartition partition;
  partition.removed = make_node_set(removed);
  partition.label.assign(graph.node_count(), -1);
  // Scanning seeds in id order yields components sorted by smallest member.
  for (NodeId seed = 0; seed < graph.node_count(); ++seed) {
    if (gone[seed] || partition.label[seed] != -1) continue;
    const int id = static_cast<int>(partition.components.size());
    NodeSet members;
    std::deque<NodeId> queue{seed};
    partition.label[seed] = id;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (NodeId w : graph.adjacent(u)) {
        if (gone[w] || partition.label[w] != -1) continue;
        partition.label[w] = id;
        queue.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    partition.components.push_back(std::move(members));
  }
  return partition;
}

NodeSet neighbors(const Graph& graph, NodeId v) {
  const auto adj = graph.adjacent(v);
  return NodeSet(adj.begin(), adj.end());
}

NodeSet neighborhood_of_set(const Graph& graph, const NodeSet& set) {
  const std::vector<bool> inside = membership(graph, set);
  NodeSet out;
  for (NodeId s : set) {
    for (NodeId w : graph.adjacent(s)) {
      if (!inside[w]) out.push_back(w);
    }
  }
  return make_node_set(std::move(out));
}

namespace {

// Node-split network: v enters at 2v, leaves at 2v+1. The internal arc
// carries the vertex capacity.
constexpr std::size_t in_half(NodeId v) { return 2 * static_cast<std::size_t>(v); }
constexpr std::size_t out_half(NodeId v) { return 2 * static_cast<std::size_t>(v) + 1; }

struct SplitNetwork {
  detail::FlowNetwork network;
  std::size_t sink;
};

SplitNetwork build_path_network(const Graph& graph, NodeId source, const NodeSet& targets,
                                const NodeSet& forbidden) {
  graph.check_node(source);
  const std::vector<bool> blocked = membership(graph, forbidden);
  const std::vector<bool> is_target = membership(graph, targets);
  if (blocked[source]) throw InputError("source node is forbidden");
  if (is_target[source]) throw InputError("source node is also a target");
  for (NodeId t : targets) {
    if (blocked[t]) throw InputError("target node " + std::to_string(t) + " is forbidden");
  }

  const std::size_t n = graph.node_count();
  SplitNetwork split{detail::FlowNetwork(2 * n + 1), 2 * n};
  for (NodeId v = 0; v < n; ++v) {
    if (blocked[v] || v == source) continue;
    split.network.add_arc(in_half(v), out_half(v), 1);
    if (is_target[v]) split.network.add_arc(out_half(v), split.sink, 1);
  }
  for (const Edge& e : graph.edges()) {
    if (blocked[e.a] || blocked[e.b]) continue;
    if (e.b != source) split.network.add_arc(out_half(e.a), in_half(e.b), 1);
    if (e.a != source) split.network.add_arc(out_half(e.b), in_half(e.a), 1);
  }
  return split;
}

}  // namespace

std::size_t max_disjoint_paths(const Graph& graph, NodeId source, const NodeSet& targets,
                               const NodeSet& forbidden, std::size_t limit) {
  SplitNetwork split = build_path_network(graph, source, targets, forbidden);
  const int cap = static_cast<int>(std::min(limit, targets.size()));
  return static_cast<std::size_t>(split.network.max_flow(out_half(source), split.sink, cap));
}

std::vector<std::vector<NodeId>> disjoint_paths(const Graph& graph, NodeId source,
                                                const NodeSet& targets, const NodeSet& forbidden,
                                                std::size_t limit) {
  SplitNetwork split = build_path_network(graph, source, targets, forbidden);
  const int pushed = split.network.max_flow(out_half(source), split.sink,
                                            static_cast<int>(std::min(limit, targets.size())));
  const std::vector<bool> is_target = membership(graph, targets);

  // Decompose the flow into unit paths by following saturated forward arcs.
  auto& net = split.network;
  std::vector<std::vector<NodeId>> paths;
  std::vector<std::vector<int>> used(net.vertex_count());
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    for (std::size_t index : net.out_arcs(v)) {
      if (index % 2 == 0) used[v].push_back(net.flow(index));
      else used[v].push_back(0);
    }
  }
  for (int p = 0; p < pushed; ++p) {
    std::vector<NodeId> path{source};
    std::size_t at = out_half(source);
    while (at != split.sink) {
      const auto& arcs = net.out_arcs(at);
      std::size_t next = split.sink;
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (used[at][i] > 0) {
          --used[at][i];
          next = net.arc(arcs[i]).to;
          break;
        }
      }
      if (next != split.sink && next % 2 == 0) path.push_back(static_cast<NodeId>(next / 2));
      at = next;
    }
    // Stop at the first target on the way.
    auto first = std::find_if(path.begin() + 1, path.end(), [&](NodeId v) { return is_target[v]; });
    path.erase(first + 1, path.end());
    paths.push_back(std::move(path));
  }
  return paths;
}

std::size_t local_vertex_connectivity(const Graph& graph, NodeId s, NodeId t) {
  graph.check_node(s);
  graph.check_node(t);
  if (s == t || graph.has_edge(s, t)) {
    throw InputError("local vertex connectivity needs two distinct non-adjacent nodes");
  }
  const std::size_t n = graph.node_count();
  detail::FlowNetwork network(2 * n);
  const int unbounded = static_cast<int>(n);
  for (NodeId v = 0; v < n; ++v) {
    if (v != s && v != t) network.add_arc(in_half(v), out_half(v), 1);
  }
  for (const Edge& e : graph.edges()) {
    if (e.b != s && e.a != t) network.add_arc(out_half(e.a), in_half(e.b), unbounded);
    if (e.a != s && e.b != t) network.add_arc(out_half(e.b), in_half(e.a), unbounded);
  }
  return static_cast<std::size_t>(network.max_flow(out_half(s), in_half(t), unbounded));
}

std::size_t vertex_connectivity(const Graph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 2) throw InputError("vertex connectivity needs at least 2 nodes");
  if (graph.edge_count() == n * (n - 1) / 2) return n - 1;

  // Any minimum cut either separates a minimum-degree vertex v from some
  // non-neighbor, or leaves v on one side with two non-adjacent neighbors
  // of v split apart.
  NodeId anchor = 0;
  for (NodeId v = 1; v < n; ++v) {
    if (graph.degree(v) < graph.degree(anchor)) anchor = v;
  }
  std::size_t best = graph.degree(anchor);
  for (NodeId w = 0; w < n && best > 0; ++w) {
    if (w == anchor || graph.has_edge(anchor, w)) continue;
    best = std::min(best, local_vertex_connectivity(graph, anchor, w));
  }
  const auto around = graph.adjacent(anchor);
  for (std::size_t i = 0; i < around.size() && best > 0; ++i) {
    for (std::size_t j = i + 1; j < around.size(); ++j) {
      if (graph.has_edge(around[i], around[j])) continue;
      best = std::min(best, local_vertex_connectivity(graph, around[i], around[j]));
    }
  }
  return best;
}

bool connectivity_at_least(std::size_t node_count, std::size_t connectivity, std::size_t k) {
  if (k == 0) return true;
  return node_count > k && connectivity >= k;
}

bool is_k_connected(const Graph& graph, std::size_t k) {
  if (k == 0) return true;
  if (graph.node_count() <= k) return false;
  return vertex_connectivity(graph) >= k;
}

// ---------------------------------------------------------------------------
// Topology

Topology::Topology(Graph graph, std::vector<bool> is_monitor)
    : graph_(std::move(graph)), is_monitor_(std::move(is_monitor)) {
  if (is_monitor_.size() != graph_.node_count()) {
    throw InputError("monitor flags cover " + std::to_string(is_monitor_.size()) +
                     " nodes, graph has " + std::to_string(graph_.node_count()));
  }
  for (NodeId v = 0; v < graph_.node_count(); ++v) {
    (is_monitor_[v] ? monitors_ : non_monitors_).push_back(v);
  }
  if (monitors_.empty()) throw InputError("topology has no monitor");
}

Topology Topology::create(std::size_t node_count, std::span<const Edge> edges,
                          std::span<const NodeId> monitors) {
  Graph graph = Graph::from_edges(node_count, edges);
  std::vector<bool> flags(node_count, false);
  for (NodeId m : monitors) {
    graph.check_node(m);
    flags[m] = true;
  }
  return Topology(std::move(graph), std::move(flags));
}

bool Topology::is_monitor(NodeId v) const {
  graph_.check_node(v);
  return is_monitor_[v];
}

NodeSet Topology::monitor_neighbors(NodeId v) const {
  NodeSet out;
  for (NodeId w : graph_.adjacent(v)) {
    if (is_monitor_[w]) out.push_back(w);
  }
  return out;
}

void Topology::check_non_monitor(NodeId v) const {
  if (is_monitor(v)) throw InputError("node " + std::to_string(v) + " is a monitor");
}

SubTopology remove_non_monitors(const Topology& topology, const NodeSet& removed) {
  std::vector<bool> gone(topology.node_count(), false);
  for (NodeId v : removed) {
    topology.check_non_monitor(v);
    gone[v] = true;
  }
  std::vector<std::optional<NodeId>> to_new(topology.node_count());
  std::vector<NodeId> to_old;
  for (NodeId v = 0; v < topology.node_count(); ++v) {
    if (gone[v]) continue;
    to_new[v] = static_cast<NodeId>(to_old.size());
    to_old.push_back(v);
  }
  Graph graph(to_old.size());
  std::vector<bool> flags(to_old.size(), false);
  for (const Edge& e : topology.graph().edges()) {
    if (gone[e.a] || gone[e.b]) continue;
    graph.add_edge(*to_new[e.a], *to_new[e.b]);
  }
  for (NodeId m : topology.monitors()) flags[*to_new[m]] = true;
  return SubTopology{Topology(std::move(graph), std::move(flags)), std::move(to_new),
                     std::move(to_old)};
}

}  // namespace faultloc
