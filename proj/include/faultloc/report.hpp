#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faultloc/conditions.hpp"
#include "faultloc/document.hpp"
#include "faultloc/oracle.hpp"

namespace faultloc {

inline constexpr const char* kToolName = "faultloc";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisOptions {
  // Empty: CAP and CSP, plus UP when the document carries paths.
  std::vector<ModelKind> models;
  // Verdict table covers k = 0..min(k_max, sigma).
  std::optional<std::size_t> k_max;
  bool oracle = false;
  OracleConfig guard;
  MscOptions msc;
};

struct VerdictRow {
  std::size_t k = 0;
  Verdict verdict;
  std::optional<bool> oracle;

  friend bool operator==(const VerdictRow&, const VerdictRow&) = default;
};

struct MscRow {
  std::string node;
  Msc msc;

  friend bool operator==(const MscRow&, const MscRow&) = default;
};

struct ModelSection {
  ModelKind model = ModelKind::Cap;
  std::vector<VerdictRow> rows;
  OmegaBounds omega;

  std::optional<std::size_t> oracle_omega;
  // Names of the first indistinguishable pair at k = oracle_omega + 1.
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> counterexample;

  // CAP/CSP structure.
  std::optional<std::size_t> gstar_connectivity;
  std::optional<std::size_t> delta_min;
  // UP structure.
  std::vector<MscRow> msc;
  std::optional<Msc> big_delta;
  std::vector<std::string> unobserved;

  friend bool operator==(const ModelSection&, const ModelSection&) = default;
};

struct AnalysisReport {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::string input_hash;
  // Echo of the options that shaped the report.
  std::vector<ModelKind> models;
  std::optional<std::size_t> k_max;
  bool oracle = false;
  std::size_t guard = 0;
  std::size_t msc_max_candidates = 0;

  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t sigma = 0;
  std::vector<std::string> monitors;
  std::optional<std::size_t> path_count;

  std::vector<ModelSection> sections;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Runs every requested model. The result has passed check_report.
AnalysisReport analyze(const TopologyDocument& document, const AnalysisOptions& options);

// Throws InvariantError if a verdict table is not monotone in k, if the
// oracle contradicts a verdict, or if the oracle's Omega falls outside the
// reported bounds.
void check_report(const AnalysisReport& report);

enum class ReportFormat { Json, Text };

ReportFormat parse_report_format(std::string_view text);
std::string emit_report(const AnalysisReport& report, ReportFormat format);
AnalysisReport parse_report(std::string_view json_text);

// Stable 64-bit FNV-1a digest, rendered as "fnv1a64:<16 hex digits>".
std::string content_hash(std::string_view bytes);

}  // namespace faultloc
