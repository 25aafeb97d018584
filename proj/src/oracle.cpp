#include "faultloc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>

#include "faultloc/error.hpp"

namespace faultloc {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Cap:
      return "CAP";
    case ModelKind::Csp:
      return "CSP";
    case ModelKind::Up:
      return "UP";
  }
  return "CAP";
}

ModelKind parse_model_kind(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "CAP") return ModelKind::Cap;
  if (upper == "CSP") return ModelKind::Csp;
  if (upper == "UP") return ModelKind::Up;
  throw FormatError("unknown probing model '" + std::string(text) + "'");
}

const PathEnsemble& ProbingModel::ensemble() const {
  if (!ensemble_) throw UsageError("probing model " + to_string(kind_) + " has no path set");
  return *ensemble_;
}

bool FailureSet::contains(NodeId v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

std::string to_string(const FailureSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set.nodes()[i]);
  }
  return out + "}";
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxMaskWidth = 62;

std::vector<bool> as_flags(std::size_t node_count, const NodeSet& nodes) {
  std::vector<bool> flags(node_count, false);
  for (NodeId v : nodes) flags[v] = true;
  return flags;
}

void check_failure_set(const Topology& topology, const FailureSet& set) {
  for (NodeId v : set.nodes()) topology.check_non_monitor(v);
}

void check_model(const Topology& topology, const ProbingModel& model) {
  if (model.kind() == ModelKind::Up && model.ensemble().node_count() != topology.node_count()) {
    throw InputError("path set was built for a different topology");
  }
}

// Shortest path from v to the nearest monitor in G - blocked, v first.
std::optional<std::vector<NodeId>> path_to_monitor(const Topology& topology, NodeId v,
                                                   const std::vector<bool>& blocked) {
  const Graph& graph = topology.graph();
  std::vector<std::optional<NodeId>> parent(graph.node_count());
  std::vector<bool> seen(graph.node_count(), false);
  std::deque<NodeId> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    if (topology.is_monitor(u)) {
      std::vector<NodeId> path{u};
      for (NodeId at = u; parent[at]; at = *parent[at]) path.push_back(*parent[at]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (NodeId w : graph.adjacent(u)) {
      if (seen[w] || blocked[w]) continue;
      seen[w] = true;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

bool probe_fast(const Topology& topology, const ProbingModel& model, NodeId v,
                const std::vector<bool>& blocked, const NodeSet& blocked_set) {
  switch (model.kind()) {
    case ModelKind::Cap:
      return path_to_monitor(topology, v, blocked).has_value();
    case ModelKind::Csp:
      return max_disjoint_paths(topology.graph(), v, topology.monitors(), blocked_set, 2) >= 2;
    case ModelKind::Up: {
      const PathEnsemble& ensemble = model.ensemble();
      for (PathId id : ensemble.paths_through(v)) {
        if (!ensemble.path_hits(id, blocked)) return true;
      }
      return false;
    }
  }
  return false;
}

std::optional<DistinguishingPath> probe_path(const Topology& topology, const ProbingModel& model,
                                             NodeId v, const FailureSet& avoid) {
  const std::vector<bool> blocked = as_flags(topology.node_count(), avoid.nodes());
  switch (model.kind()) {
    case ModelKind::Cap: {
      auto out = path_to_monitor(topology, v, blocked);
      if (!out) return std::nullopt;
      // Walk monitor -> v -> same monitor.
      std::vector<NodeId> walk(out->rbegin(), out->rend());
      walk.insert(walk.end(), out->begin() + 1, out->end());
      return DistinguishingPath{std::move(walk), std::nullopt};
    }
    case ModelKind::Csp: {
      auto legs = disjoint_paths(topology.graph(), v, topology.monitors(), avoid.nodes(), 2);
      if (legs.size() < 2) return std::nullopt;
      std::vector<NodeId> path(legs[0].rbegin(), legs[0].rend());
      path.insert(path.end(), legs[1].begin() + 1, legs[1].end());
      return DistinguishingPath{std::move(path), std::nullopt};
    }
    case ModelKind::Up: {
      const PathEnsemble& ensemble = model.ensemble();
      for (PathId id : ensemble.paths_through(v)) {
        if (!ensemble.path_hits(id, blocked)) {
          return DistinguishingPath{ensemble.paths()[id].nodes, id};
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void for_each_combination(std::size_t n, std::size_t size, const auto& visit) {
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  if (size > n) return;
  while (true) {
    visit(pick);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Exhaustive engine over failure sets encoded as bitmasks on the
// non-monitor list. Probe results are memoized per failure set.
class FailureSpace {
 public:
  FailureSpace(const Topology& topology, const ProbingModel& model, const OracleConfig& config)
      : topology_(topology), model_(model), nodes_(topology.non_monitors()) {
    check_model(topology, model);
    const std::size_t limit = std::min(config.max_sigma, kMaxMaskWidth);
    if (nodes_.size() > limit) {
      throw CapacityError("exhaustive analysis limited to " + std::to_string(limit) +
                          " non-monitors, topology has " + std::to_string(nodes_.size()));
    }
  }

  std::size_t sigma() const { return nodes_.size(); }
  Mask all() const { return (Mask{1} << nodes_.size()) - 1; }

  // Failure sets of size <= k in enumeration order.
  std::vector<Mask> sets_up_to(std::size_t k) const {
    std::vector<Mask> out;
    for (std::size_t size = 0; size <= std::min(k, sigma()); ++size) {
      for_each_combination(sigma(), size, [&](const std::vector<std::size_t>& pick) {
        Mask m = 0;
        for (std::size_t i : pick) m |= Mask{1} << i;
        out.push_back(m);
      });
    }
    return out;
  }

  // Surviving non-monitors with a measurable path that avoids `failed`.
  Mask measurable(Mask failed) {
    if (auto it = memo_.find(failed); it != memo_.end()) return it->second;
    std::vector<bool> blocked(topology_.node_count(), false);
    NodeSet blocked_set;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (failed >> i & 1) {
        blocked[nodes_[i]] = true;
        blocked_set.push_back(nodes_[i]);
      }
    }
    Mask result = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (failed >> i & 1) continue;
      if (probe_fast(topology_, model_, nodes_[i], blocked, blocked_set)) result |= Mask{1} << i;
    }
    memo_.emplace(failed, result);
    return result;
  }

  bool distinguishable(Mask a, Mask b) {
    return (measurable(a) & b & ~a) != 0 || (measurable(b) & a & ~b) != 0;
  }

  FailureSet to_set(Mask m) const {
    NodeSet out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (m >> i & 1) out.push_back(nodes_[i]);
    }
    return FailureSet(std::move(out));
  }

 private:
  const Topology& topology_;
  const ProbingModel& model_;
  NodeSet nodes_;
  std::unordered_map<Mask, Mask> memo_;
};

bool components_all_monitored(const Topology& topology, const NodeSet& removed) {
  const ComponentPartition partition = connected_components(topology.graph(), removed);
  return std::all_of(partition.components.begin(), partition.components.end(),
                     [&](const NodeSet& c) {
                       return std::any_of(c.begin(), c.end(),
                                          [&](NodeId v) { return topology.is_monitor(v); });
                     });
}

void check_guard(const Topology& topology, const OracleConfig& config) {
  const std::size_t limit = std::min(config.max_sigma, kMaxMaskWidth);
  if (topology.sigma() > limit) {
    throw CapacityError("exhaustive analysis limited to " + std::to_string(limit) +
                        " non-monitors, topology has " + std::to_string(topology.sigma()));
  }
}

void check_k(const Topology& topology, std::size_t k) {
  if (k > topology.sigma()) {
    throw InputError("k = " + std::to_string(k) + " exceeds the number of non-monitors (" +
                     std::to_string(topology.sigma()) + ")");
  }
}

}  // namespace

Probe measurable_path_exists(const Topology& topology, const ProbingModel& model, NodeId v,
                             const FailureSet& avoid) {
  check_model(topology, model);
  topology.check_non_monitor(v);
  check_failure_set(topology, avoid);
  if (avoid.contains(v)) throw InputError("probed node " + std::to_string(v) + " is in the avoid set");
  if (auto path = probe_path(topology, model, v, avoid)) return Probe{true, std::move(*path)};
  return Probe{false, UnprobeableNode{v, avoid}};
}

bool abstract_sufficient(const Topology& topology, const ProbingModel& model, std::size_t k,
                         const OracleConfig& config) {
  check_k(topology, k);
  FailureSpace space(topology, model, config);
  for (Mask failed : space.sets_up_to(k)) {
    if (space.measurable(failed) != (space.all() & ~failed)) return false;
  }
  return true;
}

Outcomes simulate_measurements(const Topology& topology, const ProbingModel& model,
                               const FailureSet& truth) {
  check_model(topology, model);
  check_failure_set(topology, truth);
  const std::vector<bool> failed = as_flags(topology.node_count(), truth.nodes());
  Outcomes outcomes;
  outcomes.model = model.kind();
  if (model.kind() == ModelKind::Up) {
    const PathEnsemble& ensemble = model.ensemble();
    for (PathId id = 0; id < ensemble.size(); ++id) {
      outcomes.observations.push_back({id, !ensemble.path_hits(id, failed)});
    }
    return outcomes;
  }
  for (NodeId v : topology.non_monitors()) {
    const bool up = !failed[v] && probe_fast(topology, model, v, failed, truth.nodes());
    outcomes.observations.push_back({v, up});
  }
  return outcomes;
}

Distinction distinguishable(const Topology& topology, const ProbingModel& model,
                            const FailureSet& first, const FailureSet& second) {
  check_model(topology, model);
  check_failure_set(topology, first);
  check_failure_set(topology, second);
  if (first == second) throw InputError("failure sets are identical");
  // A path through v in one set that avoids the other set entirely.
  auto separate = [&](const FailureSet& has, const FailureSet& avoid) -> std::optional<Witness> {
    for (NodeId v : has.nodes()) {
      if (avoid.contains(v)) continue;
      if (auto path = probe_path(topology, model, v, avoid)) return Witness{std::move(*path)};
    }
    return std::nullopt;
  };
  if (auto w = separate(second, first)) return {true, std::move(*w)};
  if (auto w = separate(first, second)) return {true, std::move(*w)};
  return {false, IndistinguishablePair{first, second}};
}

OracleResult k_identifiable_oracle(const Topology& topology, const ProbingModel& model,
                                   std::size_t k, const OracleConfig& config) {
  check_k(topology, k);
  FailureSpace space(topology, model, config);
  const std::vector<Mask> sets = space.sets_up_to(k);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!space.distinguishable(sets[i], sets[j])) {
        return {false, IndistinguishablePair{space.to_set(sets[i]), space.to_set(sets[j])}};
      }
    }
  }
  return {true, std::nullopt};
}

bool abstract_necessary(const Topology& topology, const ProbingModel& model, std::size_t k,
                        const OracleConfig& config) {
  check_k(topology, k);
  check_guard(topology, config);
  check_model(topology, model);
  const NodeSet& nodes = topology.non_monitors();
  for (std::size_t size = 0; size < k; ++size) {
    bool holds = true;
    for_each_combination(nodes.size(), size, [&](const std::vector<std::size_t>& pick) {
      if (!holds) return;
      NodeSet removed;
      for (std::size_t i : pick) removed.push_back(nodes[i]);
      const SubTopology sub = remove_non_monitors(topology, removed);
      const ProbingModel reduced = model.kind() == ModelKind::Up
                                       ? ProbingModel::up(model.ensemble().restricted(sub))
                                       : model;
      holds = k_identifiable_oracle(sub.topology, reduced, k - size, config).identifiable;
    });
    if (!holds) return false;
  }
  return true;
}

std::size_t omega_oracle(const Topology& topology, const ProbingModel& model,
                         const OracleConfig& config) {
  FailureSpace space(topology, model, config);
  // k-identifiability is inherited by every smaller k, so the first failing
  // k ends the scan. Pairs of the larger universe include all smaller pairs.
  const std::vector<Mask> sets = space.sets_up_to(space.sigma());
  std::size_t size_end = 0;
  for (std::size_t k = 0; k <= space.sigma(); ++k) {
    const std::size_t begin = size_end;
    while (size_end < sets.size() && static_cast<std::size_t>(std::popcount(sets[size_end])) <= k) {
      ++size_end;
    }
    // New pairs at this k: at least one member of size exactly k.
    for (std::size_t j = begin; j < size_end; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!space.distinguishable(sets[i], sets[j])) return k - 1;
      }
    }
  }
  return space.sigma();
}

std::vector<FailureSet> localize(const Topology& topology, const ProbingModel& model,
                                 const Outcomes& observed, std::size_t k_max,
                                 const OracleConfig& config) {
  check_model(topology, model);
  if (observed.model != model.kind()) {
    throw FormatError("outcomes were recorded under " + to_string(observed.model) +
                      ", analysis uses " + to_string(model.kind()));
  }
  std::vector<std::size_t> expected_probes;
  if (model.kind() == ModelKind::Up) {
    for (PathId id = 0; id < model.ensemble().size(); ++id) expected_probes.push_back(id);
  } else {
    expected_probes.assign(topology.non_monitors().begin(), topology.non_monitors().end());
  }
  std::vector<Observation> sorted = observed.observations;
  std::sort(sorted.begin(), sorted.end(),
            [](const Observation& a, const Observation& b) { return a.probe < b.probe; });
  std::vector<std::size_t> probes;
  for (const Observation& o : sorted) probes.push_back(o.probe);
  if (probes != expected_probes) {
    throw FormatError("outcome map must list each of the " +
                      std::to_string(expected_probes.size()) + " probes exactly once");
  }

  FailureSpace space(topology, model, config);
  std::vector<FailureSet> consistent;
  for (Mask m : space.sets_up_to(std::min(k_max, space.sigma()))) {
    const FailureSet candidate = space.to_set(m);
    if (simulate_measurements(topology, model, candidate).observations == sorted) {
      consistent.push_back(candidate);
    }
  }
  return consistent;
}

bool exhaustive_component_condition(const Topology& topology, std::size_t s,
                                    const MonitorChoice& with_monitor,
                                    const OracleConfig& config) {
  check_guard(topology, config);
  const bool any = std::holds_alternative<AnyMonitor>(with_monitor);
  const std::size_t s_limit = topology.sigma() + (any ? 1 : 0);
  if (s > s_limit) {
    throw InputError("s = " + std::to_string(s) + " exceeds " + std::to_string(s_limit));
  }
  if (const NodeId* m = std::get_if<NodeId>(&with_monitor); m && !topology.is_monitor(*m)) {
    throw InputError("node " + std::to_string(*m) + " is not a monitor");
  }

  const NodeSet& nodes = topology.non_monitors();
  // Every V' = extra + (up to `budget` non-monitors).
  auto holds_for = [&](std::optional<NodeId> extra, std::size_t budget) {
    for (std::size_t size = 0; size <= std::min(budget, nodes.size()); ++size) {
      bool ok = true;
      for_each_combination(nodes.size(), size, [&](const std::vector<std::size_t>& pick) {
        if (!ok) return;
        NodeSet removed;
        if (extra) removed.push_back(*extra);
        for (std::size_t i : pick) removed.push_back(nodes[i]);
        ok = components_all_monitored(topology, make_node_set(std::move(removed)));
      });
      if (!ok) return false;
    }
    return true;
  };

  if (const NodeId* m = std::get_if<NodeId>(&with_monitor)) return holds_for(*m, s);
  if (!holds_for(std::nullopt, s)) return false;
  if (!any || s == 0) return true;
  return std::all_of(topology.monitors().begin(), topology.monitors().end(),
                     [&](NodeId m) { return holds_for(m, s - 1); });
}

}  // namespace faultloc
