#include "faultloc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "faultloc/error.hpp"

namespace faultloc {

using nlohmann::json;

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

std::vector<std::string> names_of(const FailureSet& set, const TopologyDocument& doc) {
  std::vector<std::string> out;
  for (NodeId v : set.nodes()) out.push_back(doc.names.at(v));
  return out;
}

void attach_oracle(ModelSection& section, const Topology& topology, const ProbingModel& model,
                   const AnalysisOptions& options, const TopologyDocument& doc) {
  const std::size_t omega = omega_oracle(topology, model, options.guard);
  section.oracle_omega = omega;
  for (VerdictRow& row : section.rows) row.oracle = row.k <= omega;
  if (omega < topology.sigma()) {
    const OracleResult miss = k_identifiable_oracle(topology, model, omega + 1, options.guard);
    if (miss.counterexample) {
      section.counterexample.emplace(names_of(miss.counterexample->first, doc),
                                     names_of(miss.counterexample->second, doc));
    }
  }
}

}  // namespace

AnalysisReport analyze(const TopologyDocument& document, const AnalysisOptions& options) {
  const Topology topology = to_topology(document);
  if (topology.sigma() == 0) throw UsageError("topology has no non-monitor to analyze");

  std::vector<ModelKind> models = options.models;
  if (models.empty()) {
    models = {ModelKind::Cap, ModelKind::Csp};
    if (document.paths) models.push_back(ModelKind::Up);
  }
  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());
  if (std::count(models.begin(), models.end(), ModelKind::Up) && !document.paths) {
    throw UsageError("UP analysis requested but the topology has no \"paths\" list");
  }
  if (options.oracle && topology.sigma() > options.guard.max_sigma) {
    throw CapacityError("oracle limited to " + std::to_string(options.guard.max_sigma) +
                        " non-monitors, topology has " + std::to_string(topology.sigma()) +
                        "; rerun without the oracle or raise the guard");
  }

  AnalysisReport report;
  report.input_hash = content_hash(emit_topology(document));
  report.models = models;
  report.k_max = options.k_max;
  report.oracle = options.oracle;
  report.guard = options.guard.max_sigma;
  report.msc_max_candidates = options.msc.max_candidates;
  report.node_count = topology.node_count();
  report.edge_count = topology.graph().edge_count();
  report.sigma = topology.sigma();
  for (NodeId m : topology.monitors()) report.monitors.push_back(document.names[m]);
  if (document.paths) report.path_count = document.paths->size();

  const std::size_t last_k = std::min(options.k_max.value_or(topology.sigma()), topology.sigma());
  std::optional<StructuralSummary> summary;
  if (models.front() != ModelKind::Up) summary = summarize(topology);

  for (ModelKind kind : models) {
    ModelSection section;
    section.model = kind;
    if (kind == ModelKind::Up) {
      const ProbingModel model = ProbingModel::up(to_ensemble(document, topology));
      const MscProfile profile = msc_profile(model.ensemble(), options.msc);
      for (std::size_t k = 0; k <= last_k; ++k) section.rows.push_back({k, up_verdict(profile, k), {}});
      section.omega = omega_up(profile);
      for (const MscEntry& e : profile.entries) section.msc.push_back({document.names[e.node], e.msc});
      section.big_delta = profile.big_delta;
      for (NodeId v : profile.unobserved) section.unobserved.push_back(document.names[v]);
      if (options.oracle) attach_oracle(section, topology, model, options, document);
    } else {
      const bool cap = kind == ModelKind::Cap;
      for (std::size_t k = 0; k <= last_k; ++k) {
        section.rows.push_back({k, cap ? cap_verdict(*summary, k) : csp_verdict(*summary, k), {}});
      }
      section.omega = cap ? omega_cap(*summary) : omega_csp(*summary);
      section.gstar_connectivity = summary->gstar_connectivity;
      if (!cap) section.delta_min = summary->delta_min();
      if (options.oracle) {
        attach_oracle(section, topology, cap ? ProbingModel::cap() : ProbingModel::csp(), options,
                      document);
      }
    }
    report.sections.push_back(std::move(section));
  }
  check_report(report);
  return report;
}

void check_report(const AnalysisReport& report) {
  for (const ModelSection& s : report.sections) {
    const std::string model = to_string(s.model);
    bool seen_not = false;
    for (const VerdictRow& row : s.rows) {
      const Verdict& v = row.verdict;
      if (seen_not && v.value != Identifiability::NotIdentifiable) {
        throw InvariantError(model + ": verdict table not monotone at k = " + std::to_string(row.k));
      }
      seen_not = seen_not || v.value == Identifiability::NotIdentifiable;
      if (row.oracle && ((v.sufficient_holds && !*row.oracle) || (*row.oracle && !v.necessary_holds))) {
        throw InvariantError(model + ": oracle contradicts the verdict at k = " +
                             std::to_string(row.k));
      }
    }
    if (s.omega.lower > s.omega.upper) throw InvariantError(model + ": omega bounds inverted");
    if (s.oracle_omega && (*s.oracle_omega < s.omega.lower || *s.oracle_omega > s.omega.upper)) {
      throw InvariantError(model + ": oracle omega " + std::to_string(*s.oracle_omega) +
                           " outside reported bounds");
    }
  }
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json msc_json(const Msc& m) { return m.is_infinite() ? json("inf") : json(m.count()); }

Msc msc_from(const json& j) {
  if (j.is_string() && j == "inf") return Msc::infinite();
  if (j.is_number_unsigned()) return Msc::finite(j.get<std::size_t>());
  throw FormatError("report: MSC must be a count or \"inf\"");
}

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

Identifiability identifiability_from(const std::string& text) {
  if (text == "IDENTIFIABLE") return Identifiability::Identifiable;
  if (text == "NOT_IDENTIFIABLE") return Identifiability::NotIdentifiable;
  if (text == "INDETERMINATE") return Identifiability::Indeterminate;
  throw FormatError("report: unknown verdict '" + text + "'");
}

json to_json(const ModelSection& s) {
  json section;
  section["model"] = to_string(s.model);
  json rows = json::array();
  for (const VerdictRow& row : s.rows) {
    rows.push_back({{"k", row.k},
                    {"verdict", to_string(row.verdict.value)},
                    {"sufficient", row.verdict.sufficient_holds},
                    {"necessary", row.verdict.necessary_holds},
                    {"rationale", row.verdict.rationale},
                    {"oracle", optional_json(row.oracle)}});
  }
  section["verdicts"] = std::move(rows);
  section["omega"] = {{"lower", s.omega.lower},
                      {"upper", s.omega.upper},
                      {"exact", optional_json(s.omega.exact)},
                      {"applicable", s.omega.applicable},
                      {"guard_note", s.omega.guard_note}};
  if (s.oracle_omega) {
    json oracle{{"omega", *s.oracle_omega}, {"counterexample", nullptr}};
    if (s.counterexample) {
      oracle["counterexample"] = json::array({s.counterexample->first, s.counterexample->second});
    }
    section["oracle"] = std::move(oracle);
  } else {
    section["oracle"] = nullptr;
  }
  json structure = json::object();
  if (s.model == ModelKind::Up) {
    json msc = json::array();
    for (const MscRow& row : s.msc) msc.push_back({{"node", row.node}, {"msc", msc_json(row.msc)}});
    structure["msc"] = std::move(msc);
    structure["big_delta"] = s.big_delta ? msc_json(*s.big_delta) : json(nullptr);
    structure["unobserved"] = s.unobserved;
  } else {
    structure["gstar_connectivity"] = optional_json(s.gstar_connectivity);
    if (s.model == ModelKind::Csp) structure["delta_min"] = optional_json(s.delta_min);
  }
  section["structure"] = std::move(structure);
  return section;
}

ModelSection section_from(const json& j) {
  ModelSection s;
  s.model = parse_model_kind(j.at("model").get<std::string>());
  for (const json& row : j.at("verdicts")) {
    VerdictRow r;
    r.k = row.at("k").get<std::size_t>();
    r.verdict.value = identifiability_from(row.at("verdict").get<std::string>());
    r.verdict.sufficient_holds = row.at("sufficient").get<bool>();
    r.verdict.necessary_holds = row.at("necessary").get<bool>();
    r.verdict.rationale = row.at("rationale").get<std::string>();
    r.oracle = optional_from<bool>(row.at("oracle"));
    s.rows.push_back(std::move(r));
  }
  const json& omega = j.at("omega");
  s.omega.lower = omega.at("lower").get<std::size_t>();
  s.omega.upper = omega.at("upper").get<std::size_t>();
  s.omega.exact = optional_from<std::size_t>(omega.at("exact"));
  s.omega.applicable = omega.at("applicable").get<bool>();
  s.omega.guard_note = omega.at("guard_note").get<std::string>();
  if (const json& oracle = j.at("oracle"); !oracle.is_null()) {
    s.oracle_omega = oracle.at("omega").get<std::size_t>();
    if (const json& pair = oracle.at("counterexample"); !pair.is_null()) {
      s.counterexample.emplace(pair.at(0).get<std::vector<std::string>>(),
                               pair.at(1).get<std::vector<std::string>>());
    }
  }
  const json& structure = j.at("structure");
  if (s.model == ModelKind::Up) {
    for (const json& row : structure.at("msc")) {
      s.msc.push_back({row.at("node").get<std::string>(), msc_from(row.at("msc"))});
    }
    if (!structure.at("big_delta").is_null()) s.big_delta = msc_from(structure.at("big_delta"));
    s.unobserved = structure.at("unobserved").get<std::vector<std::string>>();
  } else {
    s.gstar_connectivity = optional_from<std::size_t>(structure.at("gstar_connectivity"));
    if (s.model == ModelKind::Csp) s.delta_min = optional_from<std::size_t>(structure.at("delta_min"));
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string emit_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.tool << " " << r.version << "  input " << r.input_hash << "\n";
  out << "config: models=";
  for (std::size_t i = 0; i < r.models.size(); ++i) out << (i ? "," : "") << to_string(r.models[i]);
  out << " k_max=" << (r.k_max ? std::to_string(*r.k_max) : "sigma")
      << " oracle=" << (r.oracle ? "on" : "off") << " guard=" << r.guard
      << " msc_max_candidates=" << r.msc_max_candidates << "\n";
  out << "topology: " << r.node_count << " nodes, " << r.edge_count << " edges, "
      << r.monitors.size() << " monitors (";
  for (std::size_t i = 0; i < r.monitors.size(); ++i) out << (i ? ", " : "") << r.monitors[i];
  out << "), sigma = " << r.sigma;
  if (r.path_count) out << ", " << *r.path_count << " paths";
  out << "\n";

  for (const ModelSection& s : r.sections) {
    out << "\n[" << to_string(s.model) << "]\n";
    if (s.gstar_connectivity) out << "  connectivity of G*: " << *s.gstar_connectivity << "\n";
    if (s.delta_min) out << "  delta_min: " << *s.delta_min << "\n";
    if (s.model == ModelKind::Up) {
      out << "  MSC:";
      for (const MscRow& row : s.msc) out << " " << row.node << "=" << row.msc.to_string();
      out << "\n  Delta: " << (s.big_delta ? s.big_delta->to_string() : "-") << "\n";
      if (!s.unobserved.empty()) {
        out << "  unobserved:";
        for (const auto& n : s.unobserved) out << " " << n;
        out << "\n";
      }
    }
    out << "  " << pad("k", 4) << pad("verdict", 18) << pad("sufficient", 12) << pad("necessary", 11)
        << pad("oracle", 8) << "rationale\n";
    for (const VerdictRow& row : s.rows) {
      out << "  " << pad(std::to_string(row.k), 4) << pad(to_string(row.verdict.value), 18)
          << pad(yes_no(row.verdict.sufficient_holds), 12)
          << pad(yes_no(row.verdict.necessary_holds), 11)
          << pad(row.oracle ? yes_no(*row.oracle) : "-", 8) << row.verdict.rationale << "\n";
    }
    out << "  omega: ";
    if (s.omega.exact) out << "exact " << *s.omega.exact << " ";
    out << "bounds [" << s.omega.lower << ", " << s.omega.upper << "]";
    if (!s.omega.applicable) out << " (closed form not applicable: " << s.omega.guard_note << ")";
    out << "\n";
    if (s.oracle_omega) {
      out << "  oracle omega: " << *s.oracle_omega << "\n";
      if (s.counterexample) {
        auto set = [](const std::vector<std::string>& names) {
          std::string text = "{";
          for (std::size_t i = 0; i < names.size(); ++i) text += (i ? "," : "") + names[i];
          return text + "}";
        };
        out << "  indistinguishable at k = " << *s.oracle_omega + 1 << ": "
            << set(s.counterexample->first) << " vs " << set(s.counterexample->second) << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "text") return ReportFormat::Text;
  throw UsageError("unknown format '" + std::string(text) + "' (expected json or text)");
}

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
  if (format == ReportFormat::Text) return emit_text(report);
  json root;
  json config{{"models", json::array()},
              {"k_max", optional_json(report.k_max)},
              {"oracle", report.oracle},
              {"guard", report.guard},
              {"msc_max_candidates", report.msc_max_candidates}};
  for (ModelKind m : report.models) config["models"].push_back(to_string(m));
  root["provenance"] = {{"tool", report.tool},
                        {"version", report.version},
                        {"input_hash", report.input_hash},
                        {"config", std::move(config)}};
  root["topology"] = {{"nodes", report.node_count},
                      {"edges", report.edge_count},
                      {"sigma", report.sigma},
                      {"monitors", report.monitors},
                      {"paths", optional_json(report.path_count)}};
  json sections = json::array();
  for (const ModelSection& s : report.sections) sections.push_back(to_json(s));
  root["models"] = std::move(sections);
  return root.dump(2) + "\n";
}

AnalysisReport parse_report(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("report: invalid JSON at byte ") + std::to_string(e.byte));
  }
  try {
    AnalysisReport r;
    const json& prov = root.at("provenance");
    r.tool = prov.at("tool").get<std::string>();
    r.version = prov.at("version").get<std::string>();
    r.input_hash = prov.at("input_hash").get<std::string>();
    const json& config = prov.at("config");
    for (const json& m : config.at("models")) r.models.push_back(parse_model_kind(m.get<std::string>()));
    r.k_max = optional_from<std::size_t>(config.at("k_max"));
    r.oracle = config.at("oracle").get<bool>();
    r.guard = config.at("guard").get<std::size_t>();
    r.msc_max_candidates = config.at("msc_max_candidates").get<std::size_t>();
    const json& topo = root.at("topology");
    r.node_count = topo.at("nodes").get<std::size_t>();
    r.edge_count = topo.at("edges").get<std::size_t>();
    r.sigma = topo.at("sigma").get<std::size_t>();
    r.monitors = topo.at("monitors").get<std::vector<std::string>>();
    r.path_count = optional_from<std::size_t>(topo.at("paths"));
    for (const json& s : root.at("models")) r.sections.push_back(section_from(s));
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
}

}  // namespace faultloc
