#include "faultloc/conditions.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "faultloc/aux_graph.hpp"
#include "faultloc/error.hpp"

namespace faultloc {

std::string to_string(Identifiability value) {
  switch (value) {
    case Identifiability::Identifiable:
      return "IDENTIFIABLE";
    case Identifiability::NotIdentifiable:
      return "NOT_IDENTIFIABLE";
    case Identifiability::Indeterminate:
      return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

Verdict Verdict::from_conditions(bool sufficient, bool necessary, std::string rationale) {
  if (sufficient && !necessary) {
    throw InvariantError("sufficient condition holds but necessary condition fails (" +
                         rationale + ")");
  }
  Verdict v;
  v.sufficient_holds = sufficient;
  v.necessary_holds = necessary;
  v.rationale = std::move(rationale);
  if (sufficient) {
    v.value = Identifiability::Identifiable;
  } else if (!necessary) {
    v.value = Identifiability::NotIdentifiable;
  } else {
    v.value = Identifiability::Indeterminate;
  }
  return v;
}

std::size_t StructuralSummary::delta_min() const {
  return gm_connectivity.empty() ? 0 : *std::min_element(gm_connectivity.begin(),
                                                         gm_connectivity.end());
}

StructuralSummary summarize(const Topology& topology) {
  if (topology.sigma() == 0) throw InputError("topology has no non-monitor");
  StructuralSummary s;
  s.sigma = topology.sigma();
  const AuxiliaryGraph gstar = build_gstar(topology);
  s.gstar_nodes = gstar.graph.node_count();
  s.gstar_connectivity = vertex_connectivity(gstar.graph);
  s.gm_nodes = s.gstar_nodes;
  for (NodeId m : topology.monitors()) {
    s.gm_connectivity.push_back(vertex_connectivity(build_gm(topology, m).graph));
  }
  for (NodeId v : topology.non_monitors()) {
    const std::size_t monitors = topology.monitor_neighbors(v).size();
    s.monitor_degree.push_back(monitors);
    s.peer_degree.push_back(topology.graph().degree(v) - monitors);
  }
  return s;
}

bool every_non_monitor_monitor_adjacent(const StructuralSummary& summary) {
  return std::all_of(summary.monitor_degree.begin(), summary.monitor_degree.end(),
                     [](std::size_t d) { return d >= 1; });
}

bool every_non_monitor_two_monitor_neighbors(const StructuralSummary& summary) {
  return std::all_of(summary.monitor_degree.begin(), summary.monitor_degree.end(),
                     [](std::size_t d) { return d >= 2; });
}

bool csp_sigma_minus_one_characterization(const StructuralSummary& summary) {
  std::size_t exceptions = 0;
  for (std::size_t i = 0; i < summary.sigma; ++i) {
    if (summary.monitor_degree[i] >= 2) continue;
    ++exceptions;
    const bool adjacent_to_all_peers = summary.peer_degree[i] == summary.sigma - 1;
    if (exceptions > 1 || summary.monitor_degree[i] != 1 || !adjacent_to_all_peers) return false;
  }
  return true;
}

namespace {

constexpr const char* kTrivial = "k0-trivial";

void check_k(const StructuralSummary& summary, std::size_t k) {
  if (k > summary.sigma) {
    throw InputError("k = " + std::to_string(k) + " exceeds the number of non-monitors (" +
                     std::to_string(summary.sigma) + ")");
  }
}

bool gstar_at_least(const StructuralSummary& s, std::size_t k) {
  return connectivity_at_least(s.gstar_nodes, s.gstar_connectivity, k);
}

bool every_gm_at_least(const StructuralSummary& s, std::size_t k) {
  return std::all_of(s.gm_connectivity.begin(), s.gm_connectivity.end(),
                     [&](std::size_t kappa) { return connectivity_at_least(s.gm_nodes, kappa, k); });
}

// Bounds read off a per-k verdict table: the longest identifiable prefix
// below, the first non-identifiable k above.
OmegaBounds scan_bounds(std::size_t sigma, const std::function<Verdict(std::size_t)>& verdict_at) {
  OmegaBounds bounds;
  bool prefix = true;
  bounds.upper = sigma;
  for (std::size_t k = 0; k <= sigma; ++k) {
    const Verdict v = verdict_at(k);
    if (prefix && v.value == Identifiability::Identifiable) bounds.lower = k;
    if (v.value != Identifiability::Identifiable) prefix = false;
    if (v.value == Identifiability::NotIdentifiable) {
      bounds.upper = k - 1;
      break;
    }
  }
  if (bounds.lower == bounds.upper) bounds.exact = bounds.lower;
  return bounds;
}

}  // namespace

Verdict cap_verdict(const StructuralSummary& summary, std::size_t k) {
  check_k(summary, k);
  if (k == 0) return Verdict::from_conditions(true, true, kTrivial);
  if (k == summary.sigma) {
    const bool adjacent = every_non_monitor_monitor_adjacent(summary);
    return Verdict::from_conditions(adjacent, adjacent && gstar_at_least(summary, k),
                                    "cap.sigma-monitor-neighbor");
  }
  return Verdict::from_conditions(gstar_at_least(summary, k + 1), gstar_at_least(summary, k),
                                  "cap.gstar-connectivity");
}

Verdict cap_verdict(const Topology& topology, std::size_t k) {
  return cap_verdict(summarize(topology), k);
}

Verdict csp_verdict(const StructuralSummary& summary, std::size_t k) {
  check_k(summary, k);
  if (k == 0) return Verdict::from_conditions(true, true, kTrivial);
  if (k == summary.sigma) {
    const bool two = every_non_monitor_two_monitor_neighbors(summary);
    return Verdict::from_conditions(two, two, "csp.sigma-two-monitor-neighbors");
  }
  if (k + 1 == summary.sigma) {
    const bool holds = csp_sigma_minus_one_characterization(summary);
    return Verdict::from_conditions(holds, holds, "csp.sigma-minus-one-characterization");
  }
  const bool sufficient = gstar_at_least(summary, k + 2) && every_gm_at_least(summary, k + 1);
  const bool necessary = gstar_at_least(summary, k + 1) && every_gm_at_least(summary, k);
  return Verdict::from_conditions(sufficient, necessary, "csp.gstar-gm-connectivity");
}

Verdict csp_verdict(const Topology& topology, std::size_t k) {
  return csp_verdict(summarize(topology), k);
}

Verdict up_verdict(const MscProfile& profile, std::size_t k) {
  if (k == 0) return Verdict::from_conditions(true, true, kTrivial);
  const auto kk = static_cast<long long>(k);
  const bool sufficient = std::all_of(profile.entries.begin(), profile.entries.end(),
                                      [&](const MscEntry& e) { return e.msc.exceeds(kk); });
  const bool necessary = std::all_of(profile.entries.begin(), profile.entries.end(),
                                     [&](const MscEntry& e) { return e.msc.exceeds(kk - 1); });
  return Verdict::from_conditions(sufficient, necessary, "up.msc");
}

OmegaBounds omega_cap(const StructuralSummary& summary) {
  const auto d = static_cast<long long>(summary.gstar_connectivity);
  const auto sigma = static_cast<long long>(summary.sigma);
  if (d <= sigma - 1) {
    OmegaBounds bounds;
    bounds.applicable = true;
    bounds.lower = static_cast<std::size_t>(std::max(d - 1, 0LL));
    bounds.upper = static_cast<std::size_t>(d);
    if (bounds.lower == bounds.upper) bounds.exact = bounds.lower;
    return bounds;
  }
  OmegaBounds bounds;
  if (every_non_monitor_monitor_adjacent(summary)) {
    bounds.lower = bounds.upper = summary.sigma;
    bounds.exact = summary.sigma;
  } else {
    bounds = scan_bounds(summary.sigma, [&](std::size_t k) { return cap_verdict(summary, k); });
  }
  bounds.applicable = false;
  bounds.guard_note = "connectivity of G* (" + std::to_string(d) + ") exceeds sigma-1 (" +
                      std::to_string(sigma - 1) + ")";
  return bounds;
}

OmegaBounds omega_cap(const Topology& topology) { return omega_cap(summarize(topology)); }

OmegaBounds omega_csp(const StructuralSummary& summary) {
  const auto d = static_cast<long long>(summary.gstar_connectivity);
  const auto dm = static_cast<long long>(summary.delta_min());
  const auto sigma = static_cast<long long>(summary.sigma);
  if (std::min(dm, d - 1) <= sigma - 2) {
    OmegaBounds bounds;
    bounds.applicable = true;
    bounds.lower = static_cast<std::size_t>(std::max(std::min(dm - 1, d - 2), 0LL));
    bounds.upper = static_cast<std::size_t>(std::max(std::min(dm, d - 1), 0LL));
    if (bounds.lower == bounds.upper) bounds.exact = bounds.lower;
    return bounds;
  }
  OmegaBounds bounds;
  if (every_non_monitor_two_monitor_neighbors(summary)) {
    bounds.lower = bounds.upper = summary.sigma;
    bounds.exact = summary.sigma;
  } else if (summary.sigma >= 2 && csp_sigma_minus_one_characterization(summary)) {
    bounds.lower = bounds.upper = summary.sigma - 1;
    bounds.exact = summary.sigma - 1;
  } else {
    bounds = scan_bounds(summary.sigma, [&](std::size_t k) { return csp_verdict(summary, k); });
  }
  bounds.applicable = false;
  bounds.guard_note = "min(delta_min, connectivity of G* - 1) = " +
                      std::to_string(std::min(dm, d - 1)) + " exceeds sigma-2 (" +
                      std::to_string(sigma - 2) + ")";
  return bounds;
}

OmegaBounds omega_csp(const Topology& topology) { return omega_csp(summarize(topology)); }

OmegaBounds omega_up(const MscProfile& profile) {
  if (profile.entries.empty()) throw InputError("MSC profile is empty");
  OmegaBounds bounds;
  bounds.applicable = true;
  if (profile.big_delta.is_infinite()) {
    bounds.lower = bounds.upper = profile.sigma();
    bounds.exact = profile.sigma();
    return bounds;
  }
  const std::size_t delta = profile.big_delta.count();
  bounds.lower = delta == 0 ? 0 : delta - 1;
  bounds.upper = delta;
  if (bounds.lower == bounds.upper) bounds.exact = delta;
  return bounds;
}

}  // namespace faultloc
