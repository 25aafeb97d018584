#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "faultloc/graph.hpp"
#include "faultloc/topology.hpp"

namespace faultloc {

using PathId = std::size_t;

// A fixed monitor-to-monitor walk. Interior nodes may repeat.
struct MeasurementPath {
  PathId id = 0;
  std::vector<NodeId> nodes;

  friend bool operator==(const MeasurementPath&, const MeasurementPath&) = default;
};

// The path set P of uncontrollable probing, indexed by the non-monitors each
// path traverses (P_v).
class PathEnsemble {
 public:
  // Validates every sequence against the topology: at least two nodes,
  // monitor endpoints, consecutive nodes adjacent. Violations are
  // FormatErrors naming the offending path.
  static PathEnsemble build(const Topology& topology, std::vector<std::vector<NodeId>> paths);

  const std::vector<MeasurementPath>& paths() const noexcept { return paths_; }
  std::size_t size() const noexcept { return paths_.size(); }

  // P_v, sorted. Throws InputError for monitors and unknown ids.
  std::span<const PathId> paths_through(NodeId v) const;

  const NodeSet& non_monitors() const noexcept { return non_monitors_; }
  std::size_t node_count() const noexcept { return incidence_.size(); }

  // Non-monitors that no path traverses.
  NodeSet unobserved() const;

  // True iff path `id` traverses some node in `set`.
  bool path_hits(PathId id, const std::vector<bool>& set) const;

  // The ensemble seen in the topology with `sub`'s removed nodes deleted:
  // paths through a removed node are dropped, the rest are renumbered.
  PathEnsemble restricted(const SubTopology& sub) const;

 private:
  std::vector<MeasurementPath> paths_;
  std::vector<std::vector<PathId>> incidence_;
  std::vector<bool> is_monitor_;
  NodeSet non_monitors_;
};

// A minimum set cover size, or infinity when no cover exists.
class Msc {
 public:
  constexpr Msc() = default;
  static constexpr Msc finite(std::size_t count) { return Msc(count); }
  static constexpr Msc infinite() { return Msc(); }

  constexpr bool is_infinite() const { return !count_.has_value(); }
  // Precondition: !is_infinite().
  constexpr std::size_t count() const { return *count_; }

  // MSC > k, for any signed k (k may be -1 when evaluating k-1 at k = 0).
  constexpr bool exceeds(long long k) const {
    return is_infinite() || static_cast<long long>(*count_) > k;
  }

  std::string to_string() const;

  friend constexpr bool operator==(const Msc&, const Msc&) = default;
  friend constexpr std::strong_ordering operator<=>(const Msc& a, const Msc& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.count_ <=> *b.count_;
  }

 private:
  constexpr explicit Msc(std::size_t count) : count_(count) {}
  std::optional<std::size_t> count_;
};

struct MscOptions {
  // Exact set cover is refused (CapacityError) when more than this many
  // distinct, non-dominated covering sets remain after reduction.
  std::size_t max_candidates = 20;
};

struct MscEntry {
  NodeId node = 0;
  Msc msc;
};

struct MscProfile {
  // One entry per non-monitor, ascending node id.
  std::vector<MscEntry> entries;
  // Minimum over all entries.
  Msc big_delta;
  // Non-monitors with empty P_v; their MSC is 0.
  NodeSet unobserved;

  std::size_t sigma() const noexcept { return entries.size(); }
};

PathEnsemble build_ensemble(const Topology& topology, std::vector<std::vector<NodeId>> paths);

// Minimum number of other non-monitors whose path sets jointly cover P_v.
// 0 when P_v is empty; infinite when some path in P_v traverses no other
// non-monitor.
Msc msc(const PathEnsemble& ensemble, NodeId v, const MscOptions& options = {});

MscProfile msc_profile(const PathEnsemble& ensemble, const MscOptions& options = {});

}  // namespace faultloc
