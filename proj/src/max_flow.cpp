#include "max_flow.hpp"

#include <deque>
#include <limits>

namespace faultloc::detail {

FlowNetwork::FlowNetwork(std::size_t vertex_count) : out_(vertex_count) {}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, int capacity) {
  const std::size_t index = arcs_.size();
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  out_[from].push_back(index);
  out_[to].push_back(index + 1);
  return index;
}

int FlowNetwork::max_flow(std::size_t source, std::size_t sink, int limit) {
  int total = 0;
  while (total < limit && augment(source, sink)) ++total;
  return total;
}

// Pushes a single unit along a shortest residual path.
bool FlowNetwork::augment(std::size_t source, std::size_t sink) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> via(out_.size(), kNone);
  std::vector<bool> seen(out_.size(), false);
  std::deque<std::size_t> queue{source};
  seen[source] = true;
  while (!queue.empty() && !seen[sink]) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t index : out_[u]) {
      const Arc& a = arcs_[index];
      if (seen[a.to] || a.capacity - a.flow <= 0) continue;
      seen[a.to] = true;
      via[a.to] = index;
      queue.push_back(a.to);
    }
  }
  if (!seen[sink]) return false;
  for (std::size_t v = sink; v != source;) {
    const std::size_t index = via[v];
    arcs_[index].flow += 1;
    arcs_[index ^ 1].flow -= 1;
    v = arcs_[index ^ 1].to;
  }
  return true;
}

}  // namespace faultloc::detail
