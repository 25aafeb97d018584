#pragma once

#include <cstddef>
#include <vector>

namespace faultloc::detail {

// Integer max-flow by BFS augmenting paths. Capacities in this library are
// bounded by the node count, so the O(flow * E) bound is the relevant one.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t vertex_count);

  // Adds a directed arc and its zero-capacity residual twin. Returns the arc
  // index.
  std::size_t add_arc(std::size_t from, std::size_t to, int capacity);

  // Pushes flow from source to sink, stopping once `limit` is reached.
  int max_flow(std::size_t source, std::size_t sink, int limit);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  int flow(std::size_t arc) const { return arcs_[arc].flow; }

  struct Arc {
    std::size_t to;
    int capacity;
    int flow;
  };
  const std::vector<std::size_t>& out_arcs(std::size_t v) const { return out_[v]; }
  const Arc& arc(std::size_t index) const { return arcs_[index]; }

 private:
  bool augment(std::size_t source, std::size_t sink);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace faultloc::detail
