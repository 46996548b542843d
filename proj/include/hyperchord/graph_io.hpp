#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hyperchord/metric_graph.hpp"

namespace hyperchord {

// Text interchange format, one edge per line: `u v num/den` (or `u v num`).
// Vertex names are whitespace-free tokens; `#` starts a comment line.
MetricGraph parse_graph(std::istream& in);
MetricGraph parse_graph_string(const std::string& text);
MetricGraph load_graph_file(const std::string& path);

// Canonical serialization: one edge per line in edge-insertion order with
// canonical rational lengths. parse -> serialize is byte-stable.
std::string serialize_graph(const MetricGraph& g);

// FNV-1a over the canonical edge list.
std::string graph_digest(const MetricGraph& g);

// Sidecar naming distinguished cycles and paths by vertex-name sequence.
struct NamedSubobjects {
  std::map<std::string, std::vector<std::string>> cycles;
  std::map<std::string, std::vector<std::string>> paths;
};

std::string serialize_sidecar(const NamedSubobjects& named);
NamedSubobjects parse_sidecar(const std::string& text);
NamedSubobjects load_sidecar_file(const std::string& path);

}  // namespace hyperchord
