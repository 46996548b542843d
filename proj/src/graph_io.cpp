#include "hyperchord/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyperchord {

MetricGraph parse_graph(std::istream& in) {
  std::vector<MetricGraph::EdgeInput> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string u, v, len;
    if (!(fields >> u)) continue;  // blank line
    if (!(fields >> v >> len))
      throw GraphError(GraphError::Code::ParseError,
                       "line " + std::to_string(line_no) +
                           ": expected `u v length`");
    std::string extra;
    if (fields >> extra)
      throw GraphError(GraphError::Code::ParseError,
                       "line " + std::to_string(line_no) + ": trailing tokens");
    try {
      edges.emplace_back(u, v, rat_from_string(len));
    } catch (const std::invalid_argument& e) {
      throw GraphError(GraphError::Code::ParseError,
                       "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return MetricGraph::from_edges(edges);
}

MetricGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

MetricGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw GraphError(GraphError::Code::ParseError, "cannot open " + path);
  return parse_graph(in);
}

std::string serialize_graph(const MetricGraph& g) {
  std::string out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out += g.vertex_name(ed.u);
    out += ' ';
    out += g.vertex_name(ed.v);
    out += ' ';
    out += rat_to_string(ed.length);
    out += '\n';
  }
  return out;
}

std::string graph_digest(const MetricGraph& g) {
  std::string canonical = serialize_graph(g);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

std::string serialize_sidecar(const NamedSubobjects& named) {
  nlohmann::json j;
  j["cycles"] = nlohmann::json::object();
  j["paths"] = nlohmann::json::object();
  for (const auto& [name, seq] : named.cycles) j["cycles"][name] = seq;
  for (const auto& [name, seq] : named.paths) j["paths"][name] = seq;
  return j.dump(2) + "\n";
}

NamedSubobjects parse_sidecar(const std::string& text) {
  NamedSubobjects named;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    const nlohmann::json cycles = j.value("cycles", nlohmann::json::object());
    const nlohmann::json paths = j.value("paths", nlohmann::json::object());
    for (const auto& [name, seq] : cycles.items())
      named.cycles[name] = seq.get<std::vector<std::string>>();
    for (const auto& [name, seq] : paths.items())
      named.paths[name] = seq.get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(GraphError::Code::ParseError,
                     std::string("sidecar: ") + e.what());
  }
  return named;
}

NamedSubobjects load_sidecar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw GraphError(GraphError::Code::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sidecar(buf.str());
}

}  // namespace hyperchord
