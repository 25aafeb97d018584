#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "faultloc/document.hpp"

namespace faultloc {

struct ErdosRenyi {
  std::size_t n = 0;
  double p = 0.0;
};

// Preferential attachment: a clique on m0 seed nodes, then every new node
// links to min(m0, existing) distinct nodes chosen proportionally to degree+1.
struct BarabasiAlbert {
  std::size_t n = 0;
  std::size_t m0 = 1;
};

struct Grid {
  std::size_t width = 0;
  std::size_t height = 0;
};

using GraphModel = std::variant<ErdosRenyi, BarabasiAlbert, Grid>;

// Monitor count, or a fraction of the nodes (rounded, at least one).
using MonitorRule = std::variant<std::size_t, double>;

struct TopologySpec {
  GraphModel model;
  MonitorRule monitors = std::size_t{1};
  std::uint64_t seed = 0;
};

// Monitors are drawn uniformly without replacement. Monitors are named m0..,
// non-monitors v0.., both in node order. The same spec always yields the
// same document.
TopologyDocument generate_topology(const TopologySpec& spec);

struct PathSpec {
  std::size_t per_pair = 1;
};

struct GeneratedPaths {
  TopologyDocument document;
  std::vector<std::string> warnings;
};

// Replaces the document's path list with up to `per_pair` shortest paths per
// ordered monitor pair, lexicographically smallest first, each stored with
// its smaller endpoint first and deduplicated.
GeneratedPaths generate_paths(const TopologyDocument& document, const PathSpec& spec);

}  // namespace faultloc
