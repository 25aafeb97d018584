#pragma once

// Brute-force ground truth for k-identifiability: enumerates failure sets
// and decides distinguishability directly from Boolean path semantics (a
// path fails iff it traverses a failed node). Exponential in the number of
// non-monitors, so every entry point enforces OracleConfig::max_sigma.

#include <cstddef>
#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "faultloc/topology.hpp"
#include "faultloc/up_model.hpp"

namespace faultloc {

enum class ModelKind { Cap, Csp, Up };

std::string to_string(ModelKind kind);
// Accepts "CAP", "CSP", "UP" (case-insensitive). Throws FormatError.
ModelKind parse_model_kind(std::string_view text);

// How measurement paths are formed:
//   CAP  any monitor-anchored walk,
//   CSP  simple paths between two distinct monitors,
//   UP   a fixed, externally given path set.
class ProbingModel {
 public:
  static ProbingModel cap() { return ProbingModel(ModelKind::Cap, std::nullopt); }
  static ProbingModel csp() { return ProbingModel(ModelKind::Csp, std::nullopt); }
  static ProbingModel up(PathEnsemble ensemble) {
    return ProbingModel(ModelKind::Up, std::move(ensemble));
  }

  ModelKind kind() const noexcept { return kind_; }
  // Throws UsageError unless kind() == ModelKind::Up.
  const PathEnsemble& ensemble() const;

 private:
  ProbingModel(ModelKind kind, std::optional<PathEnsemble> ensemble)
      : kind_(kind), ensemble_(std::move(ensemble)) {}

  ModelKind kind_;
  std::optional<PathEnsemble> ensemble_;
};

// A set of simultaneously failed non-monitors. Ordered by size, then
// lexicographically.
class FailureSet {
 public:
  FailureSet() = default;
  explicit FailureSet(NodeSet nodes) : nodes_(make_node_set(std::move(nodes))) {}
  FailureSet(std::initializer_list<NodeId> nodes) : FailureSet(NodeSet(nodes)) {}

  const NodeSet& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  bool contains(NodeId v) const;

  friend bool operator==(const FailureSet&, const FailureSet&) = default;
  friend std::strong_ordering operator<=>(const FailureSet& a, const FailureSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.nodes_ <=> b.nodes_;
  }

 private:
  NodeSet nodes_;
};

std::string to_string(const FailureSet& set);

struct DistinguishingPath {
  std::vector<NodeId> nodes;
  // Set under UP, where the path comes from the ensemble.
  std::optional<PathId> path_id;

  friend bool operator==(const DistinguishingPath&, const DistinguishingPath&) = default;
};

struct UnprobeableNode {
  NodeId node = 0;
  FailureSet trapped_by;

  friend bool operator==(const UnprobeableNode&, const UnprobeableNode&) = default;
};

struct IndistinguishablePair {
  FailureSet first;
  FailureSet second;

  friend bool operator==(const IndistinguishablePair&, const IndistinguishablePair&) = default;
};

using Witness = std::variant<DistinguishingPath, UnprobeableNode, IndistinguishablePair>;

struct OracleConfig {
  // Largest number of non-monitors the exhaustive routines accept.
  std::size_t max_sigma = 7;
};

struct Probe {
  bool measurable = false;
  // DistinguishingPath when measurable, UnprobeableNode otherwise.
  Witness witness;
};

// Is there a measurement path through non-monitor v that avoids `avoid`?
//   CAP: v's component in G - avoid contains a monitor.
//   CSP: v has two vertex-disjoint paths to distinct monitors in G - avoid.
//   UP:  some path in P_v misses `avoid`.
Probe measurable_path_exists(const Topology& topology, const ProbingModel& model, NodeId v,
                             const FailureSet& avoid);

// For every non-monitor v and failure set F (|F| <= k, v not in F), a
// measurement path traverses v but no node of F.
bool abstract_sufficient(const Topology& topology, const ProbingModel& model, std::size_t k,
                         const OracleConfig& config = {});

struct Observation {
  // Path id under UP, non-monitor node id under CAP/CSP.
  std::size_t probe = 0;
  bool up = false;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct Outcomes {
  ModelKind model = ModelKind::Cap;
  // Sorted by probe id.
  std::vector<Observation> observations;

  friend bool operator==(const Outcomes&, const Outcomes&) = default;
};

// Observed path states when exactly `truth` has failed. Under CAP/CSP the
// probe battery has one probe per non-monitor v, up iff v survives and some
// measurable path through v avoids `truth`.
Outcomes simulate_measurements(const Topology& topology, const ProbingModel& model,
                               const FailureSet& truth);

struct Distinction {
  bool distinguishable = false;
  // DistinguishingPath when distinguishable, IndistinguishablePair otherwise.
  Witness witness;
};

Distinction distinguishable(const Topology& topology, const ProbingModel& model,
                            const FailureSet& first, const FailureSet& second);

struct OracleResult {
  bool identifiable = false;
  // First indistinguishable pair in enumeration order (size ascending,
  // lexicographic within a size).
  std::optional<IndistinguishablePair> counterexample;
};

OracleResult k_identifiable_oracle(const Topology& topology, const ProbingModel& model,
                                   std::size_t k, const OracleConfig& config = {});

// For every set V' of fewer than k non-monitors, the network with V'
// deleted (UP: paths through V' dropped) is (k - |V'|)-identifiable.
bool abstract_necessary(const Topology& topology, const ProbingModel& model, std::size_t k,
                        const OracleConfig& config = {});

// Largest k for which k_identifiable_oracle holds.
std::size_t omega_oracle(const Topology& topology, const ProbingModel& model,
                         const OracleConfig& config = {});

// Every failure set of size <= k_max whose simulated outcomes equal
// `observed`, sorted by size then lexicographically.
std::vector<FailureSet> localize(const Topology& topology, const ProbingModel& model,
                                 const Outcomes& observed, std::size_t k_max,
                                 const OracleConfig& config = {});

struct AnyMonitor {};

// Which node sets V' the component condition ranges over:
//   monostate   up to s non-monitors,
//   NodeId m    m plus up to s non-monitors,
//   AnyMonitor  up to s nodes, at most one of them a monitor.
using MonitorChoice = std::variant<std::monostate, NodeId, AnyMonitor>;

// Every connected component of G - V' contains a monitor, for every V' the
// choice ranges over. s may reach sigma + 1 for AnyMonitor, sigma otherwise.
bool exhaustive_component_condition(const Topology& topology, std::size_t s,
                                    const MonitorChoice& with_monitor,
                                    const OracleConfig& config = {});

}  // namespace faultloc
