#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hyperchord/rational.hpp"

namespace hyperchord {

using VertexId = int;
using EdgeId = int;

struct GraphError : std::runtime_error {
  enum class Code {
    DisconnectedGraph,
    NonPositiveLength,
    DuplicateEdge,
    SelfLoop,
    UnknownVertex,
    InvalidPoint,
    NotACycle,
    EdgeMissing,
    PointNotOnCycle,
    VertexNotOnCycle,
    WindowTooSmall,
    ParseError,
  };
  Code code;
  GraphError(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct Edge {
  VertexId u;  // u < v
  VertexId v;
  Rat length;
};

// Immutable finite connected graph with exact positive rational edge lengths.
// Vertex ids are assigned in first-appearance order of the input edge list.
class MetricGraph {
 public:
  using EdgeInput = std::tuple<std::string, std::string, Rat>;

  static MetricGraph from_edges(const std::vector<EdgeInput>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  VertexId require_vertex(const std::string& name) const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  // Neighbors sorted by neighbor vertex id.
  std::span<const std::pair<VertexId, EdgeId>> neighbors(VertexId v) const {
    return {adjacency_[v].data(), adjacency_[v].size()};
  }

  // Sum of edge lengths, handy as an upper bound for any simple path.
  const Rat& total_edge_length() const { return total_length_; }

 private:
  MetricGraph() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency_;
  Rat total_length_;
};

// A point of the metric graph: a vertex, or an interior point of an edge at
// a strictly interior offset measured from the lower-indexed endpoint.
// Offsets 0 and L(e) normalize to the vertex variant.
struct GraphPoint {
  VertexId vertex = -1;  // valid iff edge < 0
  EdgeId edge = -1;
  Rat offset;  // 0 < offset < L(edge) when edge >= 0

  static GraphPoint at_vertex(VertexId v) {
    GraphPoint p;
    p.vertex = v;
    return p;
  }
  static GraphPoint on_edge(const MetricGraph& g, EdgeId e, Rat offset);

  bool is_vertex() const { return edge < 0; }
  bool operator==(const GraphPoint& o) const {
    return vertex == o.vertex && edge == o.edge && offset == o.offset;
  }
  std::string describe(const MetricGraph& g) const;
};

// A path between two graph points: the interior vertex sequence plus the
// (possibly interior) endpoints. For two points on a common edge the vertex
// sequence may be empty.
struct GraphPath {
  GraphPoint start;
  GraphPoint end;
  std::vector<VertexId> vertices;  // all graph vertices visited, in order
  Rat length;
};

// All-pairs exact distances with lazily materialized per-source rows, plus
// on-demand shortest-path predecessor DAGs. Read-side use after construction
// is thread-safe.
class DistanceOracle {
 public:
  explicit DistanceOracle(const MetricGraph& g);

  const MetricGraph& graph() const { return *graph_; }
  const Rat& vertex_distance(VertexId u, VertexId v) const;
  std::span<const Rat> row(VertexId source) const;

  // Edges (x, y) lying on at least one shortest u->v path, oriented from u.
  std::vector<std::pair<VertexId, VertexId>> shortest_path_dag(VertexId u,
                                                               VertexId v) const;

 private:
  void materialize(VertexId source) const;

  const MetricGraph* graph_;
  mutable std::vector<std::vector<Rat>> rows_;
  mutable std::unique_ptr<std::atomic<bool>[]> ready_;
  std::shared_ptr<std::mutex> mutex_;
};

// Shortest-path distance between two arbitrary graph points.
Rat distance_points(const DistanceOracle& oracle, const GraphPoint& p,
                    const GraphPoint& q);

enum class PathOrder { LexMin, LexMax };

struct GeodesicEnumeration {
  std::vector<GraphPath> paths;
  bool truncated = false;
};

// Distinct shortest u-v paths in deterministic lexicographic order (by vertex
// index; LexMax reverses the neighbor ordering). Stops at cap and flags
// whether more exist.
GeodesicEnumeration geodesics_between(const DistanceOracle& oracle, VertexId u,
                                      VertexId v, long cap,
                                      PathOrder order = PathOrder::LexMin);

// Same, between arbitrary points (used with edge-midpoint triangle corners).
GeodesicEnumeration geodesics_between_points(const DistanceOracle& oracle,
                                             const GraphPoint& p,
                                             const GraphPoint& q, long cap,
                                             PathOrder order = PathOrder::LexMin);

}  // namespace hyperchord
