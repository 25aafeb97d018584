#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faultloc/graph.hpp"
#include "faultloc/oracle.hpp"
#include "faultloc/topology.hpp"
#include "faultloc/up_model.hpp"

namespace faultloc {

// On-disk topology, JSON:
//   {"version": 1,
//    "nodes": [{"name": "m1", "monitor": true}, ...],
//    "edges": [["m1", "v1"], ...],
//    "paths": [["m1", "v1", "m2"], ...]}        <- optional
struct TopologyDocument {
  int version = 1;
  std::vector<std::string> names;
  std::vector<bool> monitor;
  // Endpoint order as written.
  std::vector<Edge> edges;
  std::optional<std::vector<std::vector<NodeId>>> paths;

  std::optional<NodeId> find(std::string_view name) const;
  // Throws FormatError naming `context` when the name is unknown.
  NodeId require(std::string_view name, std::string_view context) const;

  friend bool operator==(const TopologyDocument&, const TopologyDocument&) = default;
};

TopologyDocument parse_topology(std::string_view json_text);
std::string emit_topology(const TopologyDocument& document);

// Builds a document with the given node names (defaults to m0.. / v0..).
TopologyDocument make_document(const Topology& topology,
                               std::optional<std::vector<std::string>> names = std::nullopt);

Topology to_topology(const TopologyDocument& document);

// Throws UsageError when the document carries no "paths" key.
PathEnsemble to_ensemble(const TopologyDocument& document, const Topology& topology);

// Plain-text path list: one path per line, whitespace-separated node names.
// Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<NodeId>> parse_path_lines(std::string_view text,
                                                  const TopologyDocument& document);

// Outcome map, JSON:
//   {"model": "CAP"|"CSP"|"UP",
//    "observations": [{"probe": <id>, "state": "up"|"down"}, ...]}
// A probe is a path index under UP and a non-monitor under CAP/CSP; the
// latter may be given by id or by node name.
Outcomes parse_outcomes(std::string_view json_text, const TopologyDocument& document);
std::string emit_outcomes(const Outcomes& outcomes);

// Display helper: "{v1,v2}" using document names.
std::string describe(const FailureSet& set, const TopologyDocument& document);

}  // namespace faultloc
