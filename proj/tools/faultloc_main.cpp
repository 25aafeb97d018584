// faultloc: identifiability analysis and failure localization for
// monitor-based network tomography.
//
// Exit codes: 0 success, 2 usage or format error, 3 capacity guard hit,
// 4 internal invariant violated.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "faultloc/document.hpp"
#include "faultloc/error.hpp"
#include "faultloc/generate.hpp"
#include "faultloc/oracle.hpp"
#include "faultloc/report.hpp"

namespace {

using namespace faultloc;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvariant = 4;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::size_t guard = OracleConfig{}.max_sigma;
  std::string format = "json";
  std::string output;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Globals& g, const std::string& bytes) {
  if (g.output.empty() || g.output == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + g.output);
  out << bytes;
}

ReportFormat format_of(const Globals& g) { return parse_report_format(g.format); }

OracleConfig guard_of(const Globals& g) { return OracleConfig{g.guard}; }

// Loads a topology and, when given, a plain-text path file that replaces
// any "paths" list in the document.
TopologyDocument load_document(const std::string& topology_path, const std::string& paths_path) {
  TopologyDocument doc = parse_topology(read_file(topology_path));
  if (!paths_path.empty()) doc.paths = parse_path_lines(read_file(paths_path), doc);
  return doc;
}

ProbingModel model_for(ModelKind kind, const TopologyDocument& doc, const Topology& topology) {
  switch (kind) {
    case ModelKind::Cap: return ProbingModel::cap();
    case ModelKind::Csp: return ProbingModel::csp();
    case ModelKind::Up: return ProbingModel::up(to_ensemble(doc, topology));
  }
  throw InvariantError("unknown model");
}

std::vector<std::string> names_of(const FailureSet& set, const TopologyDocument& doc) {
  std::vector<std::string> out;
  for (NodeId v : set.nodes()) out.push_back(doc.names.at(v));
  return out;
}

FailureSet parse_failure_list(const std::string& text, const TopologyDocument& doc) {
  NodeSet nodes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    nodes.push_back(doc.require(item, "--fail"));
  }
  return FailureSet(std::move(nodes));
}

// Splits "a,b" into two numbers; used by the generator shape flags.
template <typename A, typename B>
std::pair<A, B> parse_pair(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(flag + " expects two comma-separated values");
  try {
    std::size_t used = 0;
    A a;
    B b;
    const std::string left = text.substr(0, comma);
    const std::string right = text.substr(comma + 1);
    if constexpr (std::is_floating_point_v<A>) a = std::stod(left, &used);
    else a = static_cast<A>(std::stoull(left, &used));
    if (used != left.size()) throw std::invalid_argument(left);
    if constexpr (std::is_floating_point_v<B>) b = std::stod(right, &used);
    else b = static_cast<B>(std::stoull(right, &used));
    if (used != right.size()) throw std::invalid_argument(right);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError(flag + ": cannot parse \"" + text + "\"");
  }
}

MonitorRule parse_monitor_rule(const std::string& text) {
  try {
    std::size_t used = 0;
    if (text.find('.') != std::string::npos) {
      const double f = std::stod(text, &used);
      if (used == text.size()) return f;
    } else {
      const auto c = std::stoull(text, &used);
      if (used == text.size()) return static_cast<std::size_t>(c);
    }
  } catch (const std::logic_error&) {
  }
  throw UsageError("--monitors expects a count or a fraction such as 0.25");
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string topology;
  std::string paths;
  std::vector<std::string> models;
  std::optional<std::size_t> k_max;
  bool oracle = false;
  std::size_t msc_limit = MscOptions{}.max_candidates;
};

void run_analyze(const Globals& g, const AnalyzeArgs& a) {
  const TopologyDocument doc = load_document(a.topology, a.paths);
  AnalysisOptions options;
  for (const auto& m : a.models) options.models.push_back(parse_model_kind(m));
  options.k_max = a.k_max;
  options.oracle = a.oracle;
  options.guard = guard_of(g);
  options.msc.max_candidates = a.msc_limit;
  write_output(g, emit_report(analyze(doc, options), format_of(g)));
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
  std::string topology;
  std::string paths;
  std::string model = "CAP";
  std::optional<std::size_t> k;
};

void run_oracle(const Globals& g, const OracleArgs& a) {
  const TopologyDocument doc = load_document(a.topology, a.paths);
  const Topology topology = to_topology(doc);
  const ModelKind kind = parse_model_kind(a.model);
  const ProbingModel model = model_for(kind, doc, topology);
  const OracleConfig config = guard_of(g);

  json out;
  out["model"] = to_string(kind);
  out["sigma"] = topology.sigma();
  std::size_t k = 0;
  if (a.k) {
    k = *a.k;
  } else {
    k = omega_oracle(topology, model, config);
    out["omega"] = k;
    if (k < topology.sigma()) ++k;
  }
  const OracleResult r = k_identifiable_oracle(topology, model, k, config);
  out["k"] = k;
  out["identifiable"] = r.identifiable;
  if (r.counterexample) {
    out["counterexample"] = {names_of(r.counterexample->first, doc),
                             names_of(r.counterexample->second, doc)};
  }

  if (format_of(g) == ReportFormat::Json) {
    write_output(g, out.dump(2) + "\n");
    return;
  }
  std::ostringstream text;
  text << "model " << to_string(kind) << ", sigma " << topology.sigma() << "\n";
  if (out.contains("omega")) text << "omega " << out["omega"].get<std::size_t>() << "\n";
  text << k << "-identifiable: " << (r.identifiable ? "yes" : "no") << "\n";
  if (r.counterexample) {
    text << "indistinguishable: " << describe(r.counterexample->first, doc) << " vs "
         << describe(r.counterexample->second, doc) << "\n";
  }
  write_output(g, text.str());
}

// --- simulate / localize ---------------------------------------------------

struct SimulateArgs {
  std::string topology;
  std::string paths;
  std::string model = "CAP";
  std::string fail;
};

void run_simulate(const Globals& g, const SimulateArgs& a) {
  const TopologyDocument doc = load_document(a.topology, a.paths);
  const Topology topology = to_topology(doc);
  const ModelKind kind = parse_model_kind(a.model);
  const FailureSet truth = parse_failure_list(a.fail, doc);
  for (NodeId v : truth.nodes()) topology.check_non_monitor(v);
  write_output(g, emit_outcomes(simulate_measurements(topology, model_for(kind, doc, topology), truth)));
}

struct LocalizeArgs {
  std::string topology;
  std::string paths;
  std::string outcomes;
  std::optional<std::size_t> k_max;
};

void run_localize(const Globals& g, const LocalizeArgs& a) {
  const TopologyDocument doc = load_document(a.topology, a.paths);
  const Topology topology = to_topology(doc);
  const Outcomes observed = parse_outcomes(read_file(a.outcomes), doc);
  const ProbingModel model = model_for(observed.model, doc, topology);
  const std::size_t k_max = a.k_max.value_or(topology.sigma());
  const auto candidates = localize(topology, model, observed, k_max, guard_of(g));

  if (format_of(g) == ReportFormat::Json) {
    json out;
    out["model"] = to_string(observed.model);
    out["k_max"] = std::min(k_max, topology.sigma());
    json list = json::array();
    for (const auto& c : candidates) list.push_back(names_of(c, doc));
    out["candidates"] = std::move(list);
    out["unique"] = candidates.size() == 1;
    write_output(g, out.dump(2) + "\n");
    return;
  }
  std::ostringstream text;
  text << candidates.size() << " consistent failure set" << (candidates.size() == 1 ? "" : "s") << "\n";
  for (const auto& c : candidates) text << "  " << describe(c, doc) << "\n";
  write_output(g, text.str());
}

// --- gen -------------------------------------------------------------------

struct GenTopoArgs {
  std::string er;
  std::string ba;
  std::string grid;
  std::string monitors = "1";
};

void run_gen_topo(const Globals& g, const GenTopoArgs& a) {
  if (!g.seed) throw UsageError("gen topo requires --seed");
  const int shapes = !a.er.empty() + !a.ba.empty() + !a.grid.empty();
  if (shapes != 1) throw UsageError("gen topo needs exactly one of --er, --ba, --grid");
  TopologySpec spec;
  if (!a.er.empty()) {
    const auto [n, p] = parse_pair<std::size_t, double>(a.er, "--er");
    spec.model = ErdosRenyi{n, p};
  } else if (!a.ba.empty()) {
    const auto [n, m0] = parse_pair<std::size_t, std::size_t>(a.ba, "--ba");
    spec.model = BarabasiAlbert{n, m0};
  } else {
    const auto [w, h] = parse_pair<std::size_t, std::size_t>(a.grid, "--grid");
    spec.model = Grid{w, h};
  }
  spec.monitors = parse_monitor_rule(a.monitors);
  spec.seed = *g.seed;
  write_output(g, emit_topology(generate_topology(spec)));
}

struct GenPathsArgs {
  std::string topology;
  std::size_t per_pair = 1;
};

void run_gen_paths(const Globals& g, const GenPathsArgs& a) {
  const GeneratedPaths out = generate_paths(parse_topology(read_file(a.topology)), {a.per_pair});
  for (const auto& w : out.warnings) std::cerr << "faultloc: warning: " << w << "\n";
  write_output(g, emit_topology(out.document));
}

// --- report ----------------------------------------------------------------

void run_report(const Globals& g, const std::string& path) {
  const AnalysisReport report = parse_report(read_file(path));
  check_report(report);
  write_output(g, emit_report(report, format_of(g)));
}

int run(int argc, char** argv) {
  CLI::App app{"Failure identifiability analysis for monitor-based network probing"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for random generators");
  app.add_option("--guard", g.guard, "Largest non-monitor count the exhaustive oracle accepts")
      ->check(CLI::Range(std::size_t{0}, std::size_t{62}));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", g.output, "Write to a file instead of stdout");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Per-k verdicts and Omega bounds for each model");
  analyze_cmd->add_option("topology", analyze_args.topology, "Topology JSON ('-' for stdin)")->required();
  analyze_cmd->add_option("--paths", analyze_args.paths, "Plain-text path list, one path per line");
  analyze_cmd->add_option("-m,--model", analyze_args.models, "CAP, CSP or UP (repeatable)");
  analyze_cmd->add_option("-k,--k-max", analyze_args.k_max, "Largest k in the verdict table");
  analyze_cmd->add_flag("--oracle", analyze_args.oracle, "Cross-check with the exhaustive oracle");
  analyze_cmd->add_option("--msc-limit", analyze_args.msc_limit, "Candidate set limit for exact set cover");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive k-identifiability check");
  oracle_cmd->add_option("topology", oracle_args.topology, "Topology JSON")->required();
  oracle_cmd->add_option("--paths", oracle_args.paths, "Plain-text path list");
  oracle_cmd->add_option("-m,--model", oracle_args.model, "CAP, CSP or UP");
  oracle_cmd->add_option("-k", oracle_args.k, "Check this k instead of computing Omega");

  SimulateArgs simulate_args;
  auto* simulate_cmd = app.add_subcommand("simulate", "Observed probe states for a given failure set");
  simulate_cmd->add_option("topology", simulate_args.topology, "Topology JSON")->required();
  simulate_cmd->add_option("--paths", simulate_args.paths, "Plain-text path list");
  simulate_cmd->add_option("-m,--model", simulate_args.model, "CAP, CSP or UP");
  simulate_cmd->add_option("--fail", simulate_args.fail, "Comma-separated failed node names");

  LocalizeArgs localize_args;
  auto* localize_cmd = app.add_subcommand("localize", "Failure sets consistent with observed outcomes");
  localize_cmd->add_option("topology", localize_args.topology, "Topology JSON")->required();
  localize_cmd->add_option("outcomes", localize_args.outcomes, "Outcome JSON")->required();
  localize_cmd->add_option("--paths", localize_args.paths, "Plain-text path list");
  localize_cmd->add_option("-k,--k-max", localize_args.k_max, "Largest failure set size considered");

  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  GenTopoArgs topo_args;
  auto* topo_cmd = gen_cmd->add_subcommand("topo", "Random topology");
  topo_cmd->add_option("--er", topo_args.er, "Erdos-Renyi N,P");
  topo_cmd->add_option("--ba", topo_args.ba, "Preferential attachment N,M0");
  topo_cmd->add_option("--grid", topo_args.grid, "Grid W,H");
  topo_cmd->add_option("--monitors", topo_args.monitors, "Monitor count or fraction");
  GenPathsArgs paths_args;
  auto* paths_cmd = gen_cmd->add_subcommand("paths", "Shortest monitor-to-monitor paths");
  paths_cmd->add_option("topology", paths_args.topology, "Topology JSON")->required();
  paths_cmd->add_option("--per-pair", paths_args.per_pair, "Paths per monitor pair")
      ->check(CLI::PositiveNumber);

  std::string report_path;
  auto* report_cmd = app.add_subcommand("report", "Validate and re-render a saved report");
  report_cmd->add_option("report", report_path, "Report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*analyze_cmd) run_analyze(g, analyze_args);
  else if (*oracle_cmd) run_oracle(g, oracle_args);
  else if (*simulate_cmd) run_simulate(g, simulate_args);
  else if (*localize_cmd) run_localize(g, localize_args);
  else if (*topo_cmd) run_gen_topo(g, topo_args);
  else if (*paths_cmd) run_gen_paths(g, paths_args);
  else if (*report_cmd) run_report(g, report_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapacityError& e) {
    std::cerr << "faultloc: capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InvariantError& e) {
    std::cerr << "faultloc: internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "faultloc: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "faultloc: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
