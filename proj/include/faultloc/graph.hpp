#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace faultloc {

// Dense node index, 0..node_count-1 within the graph it belongs to.
using NodeId = std::uint32_t;

// Sorted, duplicate-free list of node ids. Every function taking a NodeSet
// also accepts unsorted input; every function returning one returns it sorted.
using NodeSet = std::vector<NodeId>;

NodeSet make_node_set(std::vector<NodeId> nodes);

struct Edge {
  NodeId a = 0;
  NodeId b = 0;

  // Orders the endpoints so that a < b.
  static Edge normalized(NodeId x, NodeId y) { return x < y ? Edge{x, y} : Edge{y, x}; }

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph: no self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  // Strict construction: self-loops, duplicate edges and out-of-range
  // endpoints are input errors.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  // Adds {a, b}. Returns false if the edge already exists. Throws InputError
  // on a self-loop or an invalid id.
  bool add_edge(NodeId a, NodeId b);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(NodeId v) const;
  std::span<const NodeId> adjacent(NodeId v) const;
  bool has_edge(NodeId a, NodeId b) const;
  bool contains(NodeId v) const noexcept { return v < adjacency_.size(); }

  // All edges, normalized and sorted.
  std::vector<Edge> edges() const;

  // Throws InputError if v is not a node of this graph.
  void check_node(NodeId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Connected components of a vertex-deleted subgraph.
struct ComponentPartition {
  // Sorted by smallest member; each component is itself sorted.
  std::vector<NodeSet> components;
  NodeSet removed;

  // Index into `components` for every node, -1 for removed nodes.
  std::vector<int> label;
};

ComponentPartition connected_components(const Graph& graph, const NodeSet& removed = {});

// Open neighborhood N(v).
NodeSet neighbors(const Graph& graph, NodeId v);

// Nodes outside S adjacent to some member of S.
NodeSet neighborhood_of_set(const Graph& graph, const NodeSet& set);

// Maximum number of paths from `source` to distinct members of `targets`
// that share no vertex other than `source` and avoid `forbidden`. The search
// stops early once `limit` paths are found.
std::size_t max_disjoint_paths(const Graph& graph, NodeId source, const NodeSet& targets,
                               const NodeSet& forbidden = {},
                               std::size_t limit = static_cast<std::size_t>(-1));

// Same computation, returning up to `limit` explicit paths. Each path starts
// at `source` and ends at the first target it reaches.
std::vector<std::vector<NodeId>> disjoint_paths(const Graph& graph, NodeId source,
                                                const NodeSet& targets, const NodeSet& forbidden,
                                                std::size_t limit);

// Minimum number of vertices (other than s and t) whose removal separates
// two non-adjacent vertices s and t.
std::size_t local_vertex_connectivity(const Graph& graph, NodeId s, NodeId t);

// Vertex connectivity: node_count-1 for complete graphs, 0 for disconnected
// graphs, otherwise the size of a minimum vertex cut. Requires >= 2 nodes.
std::size_t vertex_connectivity(const Graph& graph);

// true iff node_count > k and vertex_connectivity >= k; always true for k = 0.
bool is_k_connected(const Graph& graph, std::size_t k);

// The same predicate evaluated from a precomputed connectivity value.
bool connectivity_at_least(std::size_t node_count, std::size_t connectivity, std::size_t k);

}  // namespace faultloc
