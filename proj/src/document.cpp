#include "faultloc/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "faultloc/error.hpp"

namespace faultloc {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string(what) + ": invalid JSON at line " +
                      std::to_string(line_of(text, e.byte)) + " (byte " +
                      std::to_string(e.byte) + ")");
  }
}

const json& field(const json& object, const char* key, std::string_view where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw FormatError(std::string(where) + ": missing field '" + key + "'");
  }
  return *it;
}

void expect(bool condition, const std::string& message) {
  if (!condition) throw FormatError(message);
}

}  // namespace

std::optional<NodeId> TopologyDocument::find(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<NodeId>(it - names.begin());
}

NodeId TopologyDocument::require(std::string_view name, std::string_view context) const {
  if (auto id = find(name)) return *id;
  throw FormatError(std::string(context) + ": unknown node '" + std::string(name) + "'");
}

TopologyDocument parse_topology(std::string_view json_text) {
  const json root = parse_json(json_text, "topology");
  expect(root.is_object(), "topology: top level must be an object");
  for (const auto& [key, value] : root.items()) {
    expect(key == "version" || key == "nodes" || key == "edges" || key == "paths",
           "topology: unknown field '" + key + "'");
  }

  TopologyDocument doc;
  if (root.contains("version")) {
    const json& v = root["version"];
    expect(v.is_number_integer() && v.get<int>() == 1, "version: only version 1 is supported");
  }

  const json& nodes = field(root, "nodes", "topology");
  expect(nodes.is_array(), "nodes: must be an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    const json& node = nodes[i];
    expect(node.is_object(), where + ": must be an object");
    const json& name = field(node, "name", where);
    const json& monitor = field(node, "monitor", where);
    expect(name.is_string(), where + ".name: must be a string");
    expect(monitor.is_boolean(), where + ".monitor: must be a boolean");
    const std::string text = name.get<std::string>();
    expect(!text.empty(), where + ".name: must not be empty");
    expect(seen.insert(text).second, where + ": duplicate node name '" + text + "'");
    doc.names.push_back(text);
    doc.monitor.push_back(monitor.get<bool>());
  }

  const json& edges = field(root, "edges", "topology");
  expect(edges.is_array(), "edges: must be an array");
  std::set<Edge> present;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& edge = edges[i];
    expect(edge.is_array() && edge.size() == 2 && edge[0].is_string() && edge[1].is_string(),
           where + ": must be a pair of node names");
    const NodeId a = doc.require(edge[0].get<std::string>(), where);
    const NodeId b = doc.require(edge[1].get<std::string>(), where);
    expect(a != b, where + ": self-loop on '" + doc.names[a] + "'");
    expect(present.insert(Edge::normalized(a, b)).second,
           where + ": duplicate edge {" + doc.names[a] + ", " + doc.names[b] + "}");
    doc.edges.push_back({a, b});
  }

  if (root.contains("paths")) {
    const json& paths = root["paths"];
    expect(paths.is_array(), "paths: must be an array");
    doc.paths.emplace();
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const std::string where = "paths[" + std::to_string(i) + "]";
      expect(paths[i].is_array(), where + ": must be an array of node names");
      std::vector<NodeId> path;
      for (const json& name : paths[i]) {
        expect(name.is_string(), where + ": node names must be strings");
        path.push_back(doc.require(name.get<std::string>(), where));
      }
      doc.paths->push_back(std::move(path));
    }
  }
  return doc;
}

std::string emit_topology(const TopologyDocument& document) {
  json root;
  root["version"] = document.version;
  json nodes = json::array();
  for (std::size_t i = 0; i < document.names.size(); ++i) {
    nodes.push_back({{"name", document.names[i]}, {"monitor", static_cast<bool>(document.monitor[i])}});
  }
  root["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const Edge& e : document.edges) {
    edges.push_back(json::array({document.names.at(e.a), document.names.at(e.b)}));
  }
  root["edges"] = std::move(edges);
  if (document.paths) {
    json paths = json::array();
    for (const auto& path : *document.paths) {
      json names = json::array();
      for (NodeId v : path) names.push_back(document.names.at(v));
      paths.push_back(std::move(names));
    }
    root["paths"] = std::move(paths);
  }
  return root.dump(2) + "\n";
}

TopologyDocument make_document(const Topology& topology,
                               std::optional<std::vector<std::string>> names) {
  TopologyDocument doc;
  if (names) {
    if (names->size() != topology.node_count()) {
      throw InputError("name table size does not match the topology");
    }
    doc.names = std::move(*names);
  } else {
    std::size_t monitors = 0;
    std::size_t others = 0;
    for (NodeId v = 0; v < topology.node_count(); ++v) {
      doc.names.push_back(topology.is_monitor(v) ? "m" + std::to_string(monitors++)
                                                 : "v" + std::to_string(others++));
    }
  }
  for (NodeId v = 0; v < topology.node_count(); ++v) doc.monitor.push_back(topology.is_monitor(v));
  doc.edges = topology.graph().edges();
  return doc;
}

Topology to_topology(const TopologyDocument& document) {
  Graph graph(document.names.size());
  for (const Edge& e : document.edges) {
    if (!graph.add_edge(e.a, e.b)) throw FormatError("duplicate edge in document");
  }
  try {
    return Topology(std::move(graph), document.monitor);
  } catch (const InputError& e) {
    throw FormatError(std::string("topology: ") + e.what());
  }
}

PathEnsemble to_ensemble(const TopologyDocument& document, const Topology& topology) {
  if (!document.paths) throw UsageError("UP analysis needs a \"paths\" list in the topology");
  try {
    return PathEnsemble::build(topology, *document.paths);
  } catch (const FormatError& e) {
    throw FormatError(std::string("paths: ") + e.what());
  }
}

std::vector<std::vector<NodeId>> parse_path_lines(std::string_view text,
                                                  const TopologyDocument& document) {
  std::vector<std::vector<NodeId>> paths;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::string name;
    std::vector<NodeId> path;
    while (words >> name) {
      if (path.empty() && name.front() == '#') break;
      path.push_back(document.require(name, "line " + std::to_string(number)));
    }
    if (!path.empty()) paths.push_back(std::move(path));
  }
  return paths;
}

Outcomes parse_outcomes(std::string_view json_text, const TopologyDocument& document) {
  const json root = parse_json(json_text, "outcomes");
  expect(root.is_object(), "outcomes: top level must be an object");
  const json& model = field(root, "model", "outcomes");
  expect(model.is_string(), "outcomes.model: must be a string");
  Outcomes outcomes;
  outcomes.model = parse_model_kind(model.get<std::string>());

  const json& observations = field(root, "observations", "outcomes");
  expect(observations.is_array(), "outcomes.observations: must be an array");
  for (std::size_t i = 0; i < observations.size(); ++i) {
    const std::string where = "observations[" + std::to_string(i) + "]";
    const json& o = observations[i];
    expect(o.is_object(), where + ": must be an object");
    const json& probe = field(o, "probe", where);
    const json& state = field(o, "state", where);
    Observation obs;
    if (probe.is_number_unsigned()) {
      obs.probe = probe.get<std::size_t>();
    } else if (probe.is_string() && outcomes.model != ModelKind::Up) {
      obs.probe = document.require(probe.get<std::string>(), where);
    } else {
      throw FormatError(where + ".probe: must be a non-negative integer" +
                        std::string(outcomes.model == ModelKind::Up ? "" : " or a node name"));
    }
    expect(state.is_string() && (state == "up" || state == "down"),
           where + ".state: must be \"up\" or \"down\"");
    obs.up = state == "up";
    outcomes.observations.push_back(obs);
  }
  std::sort(outcomes.observations.begin(), outcomes.observations.end(),
            [](const Observation& a, const Observation& b) { return a.probe < b.probe; });
  const auto dup = std::adjacent_find(
      outcomes.observations.begin(), outcomes.observations.end(),
      [](const Observation& a, const Observation& b) { return a.probe == b.probe; });
  expect(dup == outcomes.observations.end(),
         "outcomes.observations: probe " +
             (dup == outcomes.observations.end() ? std::string() : std::to_string(dup->probe)) +
             " listed twice");
  return outcomes;
}

std::string emit_outcomes(const Outcomes& outcomes) {
  json root;
  root["model"] = to_string(outcomes.model);
  json list = json::array();
  for (const Observation& o : outcomes.observations) {
    list.push_back({{"probe", o.probe}, {"state", o.up ? "up" : "down"}});
  }
  root["observations"] = std::move(list);
  return root.dump(2) + "\n";
}

std::string describe(const FailureSet& set, const TopologyDocument& document) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += document.names.at(set.nodes()[i]);
  }
  return out + "}";
}

}  // namespace faultloc
