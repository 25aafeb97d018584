#pragma once

// Exhaustive reference implementations used only by tests. None of them
// share code with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "faultloc/graph.hpp"
#include "faultloc/topology.hpp"
#include "faultloc/up_model.hpp"

namespace faultloc::testing {

// Is the graph minus `removed` (bitmask) connected? Graphs with fewer than
// two surviving nodes count as connected.
inline bool connected_without(const Graph& g, std::uint32_t removed) {
  const std::size_t n = g.node_count();
  int start = -1;
  std::size_t alive = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(removed >> v & 1)) {
      ++alive;
      if (start < 0) start = static_cast<int>(v);
    }
  }
  if (alive < 2) return true;
  std::uint32_t seen = 1u << start;
  std::vector<NodeId> stack{static_cast<NodeId>(start)};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : g.adjacent(u)) {
      if ((removed >> w & 1) || (seen >> w & 1)) continue;
      seen |= 1u << w;
      stack.push_back(w);
    }
  }
  return static_cast<std::size_t>(__builtin_popcount(seen)) == alive;
}

// Smallest vertex set whose deletion leaves >= 2 nodes disconnected;
// n-1 if none exists (complete graphs).
inline std::size_t brute_vertex_connectivity(const Graph& g) {
  const std::size_t n = g.node_count();
  std::size_t best = n - 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size >= best || n - size < 2) continue;
    if (!connected_without(g, s)) best = size;
  }
  return best;
}

// Does every set of at most k-1 deleted vertices leave the graph connected,
// with more than k nodes overall?
inline bool brute_is_k_connected(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  if (g.node_count() <= k) return false;
  for (std::uint32_t s = 0; s < (1u << g.node_count()); ++s) {
    if (static_cast<std::size_t>(__builtin_popcount(s)) <= k - 1 && !connected_without(g, s)) {
      return false;
    }
  }
  return true;
}

// MSC by trying every subset of the other non-monitors in increasing size.
inline Msc brute_msc(const PathEnsemble& ensemble, NodeId v) {
  const auto target = ensemble.paths_through(v);
  std::vector<NodeId> others;
  for (NodeId w : ensemble.non_monitors()) {
    if (w != v) others.push_back(w);
  }
  const std::size_t n = others.size();
  std::optional<std::size_t> best;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (best && size >= *best) continue;
    bool covered = true;
    for (PathId p : target) {
      bool hit = false;
      for (std::size_t i = 0; i < n && !hit; ++i) {
        if (!(s >> i & 1)) continue;
        const auto through = ensemble.paths_through(others[i]);
        hit = std::find(through.begin(), through.end(), p) != through.end();
      }
      if (!hit) {
        covered = false;
        break;
      }
    }
    if (covered) best = size;
  }
  return best ? Msc::finite(*best) : Msc::infinite();
}

// Enumerates every simple path between two distinct monitors avoiding
// `avoid`, reporting whether one traverses v.
inline bool simple_monitor_path_through(const Topology& t, NodeId v, const std::vector<bool>& avoid) {
  const Graph& g = t.graph();
  std::vector<bool> on_path(g.node_count(), false);
  std::vector<NodeId> path;
  bool found = false;
  std::function<void(NodeId, NodeId)> dfs = [&](NodeId start, NodeId at) {
    if (found) return;
    if (at != start && t.is_monitor(at)) {
      if (std::find(path.begin(), path.end(), v) != path.end()) found = true;
      return;
    }
    for (NodeId w : g.adjacent(at)) {
      if (on_path[w] || avoid[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (NodeId m : t.monitors()) {
    on_path[m] = true;
    path = {m};
    dfs(m, m);
    on_path[m] = false;
    if (found) return true;
  }
  return false;
}

// Is there a walk that starts at a monitor, visits v, and ends at a
// (possibly different) monitor, avoiding `avoid`? BFS over (node, visited v).
inline bool monitor_walk_through(const Topology& t, NodeId v, const std::vector<bool>& avoid) {
  const Graph& g = t.graph();
  const std::size_t n = g.node_count();
  std::vector<bool> seen(2 * n, false);
  std::vector<std::size_t> queue;
  for (NodeId m : t.monitors()) {
    seen[2 * m] = true;
    queue.push_back(2 * m);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = static_cast<NodeId>(queue[head] / 2);
    const bool visited = queue[head] % 2 == 1;
    if (visited && t.is_monitor(u)) return true;
    for (NodeId w : g.adjacent(u)) {
      if (avoid[w]) continue;
      const std::size_t state = 2 * w + ((visited || w == v) ? 1 : 0);
      if (seen[state]) continue;
      seen[state] = true;
      queue.push_back(state);
    }
  }
  return false;
}

// Largest family of simple source->target paths (each stopping at its first
// target) that are pairwise disjoint apart from the source, by enumerating
// every path and every family.
inline std::size_t brute_max_disjoint_paths(const Graph& g, NodeId source, const NodeSet& targets,
                                            const NodeSet& forbidden) {
  std::vector<bool> is_target(g.node_count(), false), blocked(g.node_count(), false);
  for (NodeId t : targets) is_target[t] = true;
  for (NodeId f : forbidden) blocked[f] = true;
  std::vector<std::uint32_t> paths;  // vertex masks without the source
  std::vector<bool> on(g.node_count(), false);
  std::function<void(NodeId, std::uint32_t)> dfs = [&](NodeId at, std::uint32_t mask) {
    if (at != source && is_target[at]) {
      paths.push_back(mask);
      return;
    }
    for (NodeId w : g.adjacent(at)) {
      if (on[w] || blocked[w] || w == source) continue;
      on[w] = true;
      dfs(w, mask | (1u << w));
      on[w] = false;
    }
  };
  dfs(source, 0);
  std::size_t best = 0;
  std::function<void(std::size_t, std::uint32_t, std::size_t)> pick = [&](std::size_t i,
                                                                         std::uint32_t used,
                                                                         std::size_t count) {
    best = std::max(best, count);
    for (std::size_t j = i; j < paths.size(); ++j) {
      if (paths[j] & used) continue;
      pick(j + 1, used | paths[j], count + 1);
    }
  };
  pick(0, 0, 0);
  return best;
}

// Random monitor-to-monitor walks (used to build UP ensembles that include
// repeated nodes and single-monitor round trips).
inline std::vector<std::vector<NodeId>> random_walk_paths(const Topology& t, std::uint64_t seed,
                                                          std::size_t count, std::size_t max_len) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<NodeId>> out;
  const Graph& g = t.graph();
  for (std::size_t attempt = 0; attempt < count * 20 && out.size() < count; ++attempt) {
    NodeId at = t.monitors()[rng() % t.monitors().size()];
    if (g.degree(at) == 0) continue;
    std::vector<NodeId> walk{at};
    for (std::size_t step = 0; step < max_len; ++step) {
      const auto adj = g.adjacent(at);
      at = adj[rng() % adj.size()];
      walk.push_back(at);
      if (t.is_monitor(at) && rng() % 2 == 0) break;
    }
    if (!t.is_monitor(walk.back())) continue;
    out.push_back(std::move(walk));
  }
  return out;
}

}  // namespace faultloc::testing
