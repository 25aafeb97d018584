#include "faultloc/generate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

#include "faultloc/error.hpp"

namespace faultloc {

namespace {

// Portable draws on top of mt19937_64: the standard distributions are
// implementation-defined, the raw engine output is not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(bound));
  }

 private:
  std::mt19937_64 engine_;
};

Graph erdos_renyi(const ErdosRenyi& spec, Draw& draw) {
  if (spec.n < 2) throw UsageError("ER: n must be at least 2");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw UsageError("ER: p must lie in [0, 1]");
  Graph graph(spec.n);
  for (NodeId a = 0; a < spec.n; ++a) {
    for (NodeId b = a + 1; b < spec.n; ++b) {
      if (draw.unit() < spec.p) graph.add_edge(a, b);
    }
  }
  return graph;
}

Graph barabasi_albert(const BarabasiAlbert& spec, Draw& draw) {
  if (spec.n < 2) throw UsageError("BA: n must be at least 2");
  if (spec.m0 < 1 || spec.m0 >= spec.n) throw UsageError("BA: m0 must lie in [1, n-1]");
  Graph graph(spec.n);
  for (NodeId a = 0; a < spec.m0; ++a) {
    for (NodeId b = a + 1; b < spec.m0; ++b) graph.add_edge(a, b);
  }
  for (NodeId u = static_cast<NodeId>(spec.m0); u < spec.n; ++u) {
    const std::size_t links = std::min<std::size_t>(spec.m0, u);
    std::size_t total_weight = 0;
    for (NodeId w = 0; w < u; ++w) total_weight += graph.degree(w) + 1;
    while (graph.degree(u) < links) {
      std::size_t ticket = draw.below(total_weight);
      NodeId pick = 0;
      for (; pick < u; ++pick) {
        const std::size_t weight = graph.degree(pick) + 1;
        if (ticket < weight) break;
        ticket -= weight;
      }
      graph.add_edge(u, pick);
    }
  }
  return graph;
}

Graph grid(const Grid& spec) {
  const std::size_t n = spec.width * spec.height;
  if (spec.width == 0 || spec.height == 0 || n < 2) {
    throw UsageError("grid: needs at least two cells");
  }
  Graph graph(n);
  for (std::size_t r = 0; r < spec.height; ++r) {
    for (std::size_t c = 0; c < spec.width; ++c) {
      const auto id = static_cast<NodeId>(r * spec.width + c);
      if (c + 1 < spec.width) graph.add_edge(id, id + 1);
      if (r + 1 < spec.height) graph.add_edge(id, static_cast<NodeId>(id + spec.width));
    }
  }
  return graph;
}

std::size_t monitor_count(const MonitorRule& rule, std::size_t n) {
  std::size_t count = 0;
  if (const auto* fixed = std::get_if<std::size_t>(&rule)) {
    count = *fixed;
  } else {
    const double fraction = std::get<double>(rule);
    if (!(fraction > 0.0 && fraction < 1.0)) {
      throw UsageError("monitor fraction must lie in (0, 1)");
    }
    count = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(fraction * n)));
  }
  if (count == 0) throw UsageError("at least one monitor is required");
  if (count >= n) throw UsageError("monitor count must leave at least one non-monitor");
  return count;
}

// Lexicographically smallest shortest paths from `from` to `to`, up to
// `limit` of them.
std::vector<std::vector<NodeId>> shortest_paths(const Graph& graph, NodeId from, NodeId to,
                                                std::size_t limit) {
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(graph.node_count(), kFar);
  std::deque<NodeId> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : graph.adjacent(u)) {
      if (dist[w] != kFar) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  std::vector<std::vector<NodeId>> out;
  if (dist[from] == kFar) return out;
  std::vector<NodeId> path{from};
  auto extend = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    const NodeId at = path.back();
    if (at == to) {
      out.push_back(path);
      return;
    }
    for (NodeId w : graph.adjacent(at)) {  // adjacency is sorted
      if (dist[w] + 1 != dist[at]) continue;
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace

TopologyDocument generate_topology(const TopologySpec& spec) {
  Draw draw(spec.seed);
  Graph graph = std::visit(
      [&](const auto& model) -> Graph {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, ErdosRenyi>) return erdos_renyi(model, draw);
        else if constexpr (std::is_same_v<T, BarabasiAlbert>) return barabasi_albert(model, draw);
        else return grid(model);
      },
      spec.model);

  const std::size_t n = graph.node_count();
  const std::size_t count = monitor_count(spec.monitors, n);
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(order[i], order[i + draw.below(n - i)]);
  }
  std::vector<bool> flags(n, false);
  for (std::size_t i = 0; i < count; ++i) flags[order[i]] = true;
  return make_document(Topology(std::move(graph), std::move(flags)));
}

GeneratedPaths generate_paths(const TopologyDocument& document, const PathSpec& spec) {
  const Topology topology = to_topology(document);
  const NodeSet& monitors = topology.monitors();
  if (monitors.size() < 2) throw UsageError("path generation needs at least two monitors");
  if (spec.per_pair == 0) throw UsageError("per_pair must be at least 1");

  GeneratedPaths result{document, {}};
  std::vector<std::vector<NodeId>> paths;
  for (NodeId a : monitors) {
    for (NodeId b : monitors) {
      if (a == b) continue;
      auto found = shortest_paths(topology.graph(), a, b, spec.per_pair);
      if (found.empty() && a < b) {
        result.warnings.push_back("monitors " + document.names[a] + " and " + document.names[b] +
                                  " are disconnected");
      }
      for (auto& p : found) {
        if (p.front() > p.back()) std::reverse(p.begin(), p.end());
        if (std::find(paths.begin(), paths.end(), p) == paths.end()) paths.push_back(std::move(p));
      }
    }
  }
  if (paths.empty()) result.warnings.push_back("generated path set is empty");
  result.document.paths = std::move(paths);
  return result;
}

}  // namespace faultloc
