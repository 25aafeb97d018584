#include "faultloc/up_model.hpp"

#include <algorithm>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "faultloc/error.hpp"

namespace faultloc {

std::string Msc::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(*count_);
}

PathEnsemble PathEnsemble::build(const Topology& topology,
                                 std::vector<std::vector<NodeId>> paths) {
  PathEnsemble ensemble;
  ensemble.incidence_.resize(topology.node_count());
  ensemble.is_monitor_.resize(topology.node_count());
  for (NodeId v = 0; v < topology.node_count(); ++v) {
    ensemble.is_monitor_[v] = topology.is_monitor(v);
  }
  ensemble.non_monitors_ = topology.non_monitors();

  const Graph& graph = topology.graph();
  for (PathId id = 0; id < paths.size(); ++id) {
    auto& nodes = paths[id];
    const std::string where = "path " + std::to_string(id);
    if (nodes.size() < 2) throw FormatError(where + ": needs at least two nodes");
    for (NodeId v : nodes) {
      if (!graph.contains(v)) throw FormatError(where + ": unknown node id " + std::to_string(v));
    }
    if (!topology.is_monitor(nodes.front()) || !topology.is_monitor(nodes.back())) {
      throw FormatError(where + ": endpoints must be monitors");
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (!graph.has_edge(nodes[i], nodes[i + 1])) {
        throw FormatError(where + ": nodes " + std::to_string(nodes[i]) + " and " +
                          std::to_string(nodes[i + 1]) + " are not adjacent");
      }
    }
    for (NodeId v : make_node_set(nodes)) {
      if (!ensemble.is_monitor_[v]) ensemble.incidence_[v].push_back(id);
    }
    ensemble.paths_.push_back({id, std::move(nodes)});
  }
  return ensemble;
}

std::span<const PathId> PathEnsemble::paths_through(NodeId v) const {
  if (v >= incidence_.size()) throw InputError("unknown node id " + std::to_string(v));
  if (is_monitor_[v]) throw InputError("node " + std::to_string(v) + " is a monitor");
  return incidence_[v];
}

NodeSet PathEnsemble::unobserved() const {
  NodeSet out;
  for (NodeId v : non_monitors_) {
    if (incidence_[v].empty()) out.push_back(v);
  }
  return out;
}

bool PathEnsemble::path_hits(PathId id, const std::vector<bool>& set) const {
  for (NodeId v : paths_.at(id).nodes) {
    if (v < set.size() && set[v]) return true;
  }
  return false;
}

PathEnsemble PathEnsemble::restricted(const SubTopology& sub) const {
  std::vector<std::vector<NodeId>> kept;
  for (const MeasurementPath& path : paths_) {
    std::vector<NodeId> mapped;
    mapped.reserve(path.nodes.size());
    bool survives = true;
    for (NodeId v : path.nodes) {
      if (!sub.to_new.at(v)) {
        survives = false;
        break;
      }
      mapped.push_back(*sub.to_new[v]);
    }
    if (survives) kept.push_back(std::move(mapped));
  }
  return build(sub.topology, std::move(kept));
}

PathEnsemble build_ensemble(const Topology& topology, std::vector<std::vector<NodeId>> paths) {
  return PathEnsemble::build(topology, std::move(paths));
}

namespace {

using Bits = boost::dynamic_bitset<>;

class SetCoverSearch {
 public:
  SetCoverSearch(std::size_t universe, std::vector<Bits> sets)
      : universe_(universe), sets_(std::move(sets)), best_(sets_.size() + 1) {}

  std::size_t solve() {
    Bits covered(universe_);
    search(covered, 0);
    return best_;
  }

 private:
  void search(const Bits& covered, std::size_t depth) {
    const std::size_t remaining = universe_ - covered.count();
    if (remaining == 0) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + 1 >= best_) return;

    std::size_t max_gain = 0;
    for (const Bits& s : sets_) max_gain = std::max(max_gain, (s - covered).count());
    if (max_gain == 0) return;
    if (depth + (remaining + max_gain - 1) / max_gain >= best_) return;

    // Branch on the uncovered element with the fewest covering sets.
    std::size_t pivot = universe_;
    std::size_t pivot_options = sets_.size() + 1;
    for (std::size_t e = 0; e < universe_; ++e) {
      if (covered.test(e)) continue;
      std::size_t options = 0;
      for (const Bits& s : sets_) options += s.test(e) ? 1 : 0;
      if (options < pivot_options) {
        pivot = e;
        pivot_options = options;
      }
    }
    std::vector<std::size_t> choices;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (sets_[i].test(pivot)) choices.push_back(i);
    }
    std::sort(choices.begin(), choices.end(), [&](std::size_t a, std::size_t b) {
      return (sets_[a] - covered).count() > (sets_[b] - covered).count();
    });
    for (std::size_t i : choices) search(covered | sets_[i], depth + 1);
  }

  std::size_t universe_;
  std::vector<Bits> sets_;
  std::size_t best_;
};

// Drops empty, duplicate and strictly dominated sets; none of them can be
// needed in a minimum cover.
std::vector<Bits> reduce_candidates(std::vector<Bits> sets) {
  std::vector<Bits> kept;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].none()) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool subset = sets[i].is_subset_of(sets[j]);
      if (subset && (sets[i] != sets[j] || j < i)) dominated = true;
    }
    if (!dominated) kept.push_back(sets[i]);
  }
  return kept;
}

}  // namespace

Msc msc(const PathEnsemble& ensemble, NodeId v, const MscOptions& options) {
  const auto universe = ensemble.paths_through(v);
  if (universe.empty()) return Msc::finite(0);

  std::vector<Bits> sets;
  Bits reachable(universe.size());
  for (NodeId w : ensemble.non_monitors()) {
    if (w == v) continue;
    const auto through_w = ensemble.paths_through(w);
    Bits s(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (std::binary_search(through_w.begin(), through_w.end(), universe[i])) s.set(i);
    }
    reachable |= s;
    sets.push_back(std::move(s));
  }
  if (!reachable.all()) return Msc::infinite();

  sets = reduce_candidates(std::move(sets));
  if (sets.size() > options.max_candidates) {
    throw CapacityError("exact set cover for node " + std::to_string(v) + " has " +
                        std::to_string(sets.size()) + " candidate sets (limit " +
                        std::to_string(options.max_candidates) + ")");
  }
  return Msc::finite(SetCoverSearch(universe.size(), std::move(sets)).solve());
}

MscProfile msc_profile(const PathEnsemble& ensemble, const MscOptions& options) {
  MscProfile profile;
  profile.unobserved = ensemble.unobserved();
  for (NodeId v : ensemble.non_monitors()) {
    profile.entries.push_back({v, msc(ensemble, v, options)});
  }
  for (const MscEntry& e : profile.entries) {
    if (e.msc < profile.big_delta) profile.big_delta = e.msc;
  }
  return profile;
}

}  // namespace faultloc
