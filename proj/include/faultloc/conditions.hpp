#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "faultloc/topology.hpp"
#include "faultloc/up_model.hpp"

namespace faultloc {

enum class Identifiability { Identifiable, NotIdentifiable, Indeterminate };

std::string to_string(Identifiability value);

// Outcome of evaluating one sufficient/necessary condition pair at one k.
struct Verdict {
  Identifiability value = Identifiability::Indeterminate;
  bool sufficient_holds = false;
  bool necessary_holds = false;
  // Names the characterization that produced the verdict, e.g.
  // "cap.gstar-connectivity".
  std::string rationale;

  // Derives `value` from the two flags. Throws InvariantError if the
  // sufficient condition holds while the necessary one does not.
  static Verdict from_conditions(bool sufficient, bool necessary, std::string rationale);

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Bounds on the maximum identifiability Omega of one probing model.
struct OmegaBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  // Whether the closed-form bound's precondition held.
  bool applicable = false;
  std::string guard_note;

  friend bool operator==(const OmegaBounds&, const OmegaBounds&) = default;
};

// Everything the CAP/CSP conditions need from a topology, computed once.
struct StructuralSummary {
  std::size_t sigma = 0;
  std::size_t gstar_nodes = 0;
  std::size_t gstar_connectivity = 0;
  // Parallel to topology.monitors().
  std::vector<std::size_t> gm_connectivity;
  std::size_t gm_nodes = 0;
  // Per non-monitor (ascending id): number of adjacent monitors.
  std::vector<std::size_t> monitor_degree;
  // Per non-monitor (ascending id): number of adjacent non-monitors.
  std::vector<std::size_t> peer_degree;

  std::size_t delta_min() const;
};

StructuralSummary summarize(const Topology& topology);

// Every non-monitor has at least one monitor neighbor.
bool every_non_monitor_monitor_adjacent(const StructuralSummary& summary);
// Every non-monitor has at least two monitor neighbors.
bool every_non_monitor_two_monitor_neighbors(const StructuralSummary& summary);
// All but at most one non-monitor v have two or more monitor neighbors, and
// v has either two or more monitor neighbors, or exactly one monitor neighbor
// and every other non-monitor as a neighbor.
bool csp_sigma_minus_one_characterization(const StructuralSummary& summary);

Verdict cap_verdict(const StructuralSummary& summary, std::size_t k);
Verdict cap_verdict(const Topology& topology, std::size_t k);

Verdict csp_verdict(const StructuralSummary& summary, std::size_t k);
Verdict csp_verdict(const Topology& topology, std::size_t k);

Verdict up_verdict(const MscProfile& profile, std::size_t k);

OmegaBounds omega_cap(const StructuralSummary& summary);
OmegaBounds omega_cap(const Topology& topology);

OmegaBounds omega_csp(const StructuralSummary& summary);
OmegaBounds omega_csp(const Topology& topology);

OmegaBounds omega_up(const MscProfile& profile);

}  // namespace faultloc
