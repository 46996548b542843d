#pragma once

#include <array>
#include <set>
#include <vector>

#include "hyperchord/metric_graph.hpp"

namespace hyperchord {

// Three corners (two may coincide: a bigon) with one chosen geodesic per
// pair, parametrized as a closed walk over a circle of circumference L(T).
class GeodesicTriangle {
 public:
  struct Station {
    Rat pos;
    GraphPoint point;
    int side;
  };

  // side i runs from corner i to corner (i+1) mod 3; zero-length sides are
  // allowed for bigons. Throws if sides do not chain up or a claimed side is
  // not a geodesic.
  static GeodesicTriangle from_paths(const DistanceOracle& oracle,
                                     std::array<GraphPath, 3> sides);

  const std::array<GraphPoint, 3>& corners() const { return corners_; }
  const std::array<GraphPath, 3>& sides() const { return sides_; }
  const Rat& total_length() const { return length_; }
  const Rat& corner_position(int i) const { return corner_pos_[i]; }
  const std::vector<Station>& stations() const { return stations_; }

  // The parametrization map from circle coordinates to graph points.
  GraphPoint point_at(const MetricGraph& g, const Rat& pos) const;

  Rat circle_distance(const Rat& s, const Rat& t) const;

  // Side interval [corner_position(i), corner_position(i) + L(side i)].
  std::pair<Rat, Rat> side_interval(int i) const;

  // Whether side i passes through the given point (used for exact
  // point-to-side distances).
  bool side_covers(int i, const GraphPoint& p) const;

 private:
  struct Segment {
    Rat pos_lo, pos_hi;   // along the circle
    EdgeId edge;          // segment lies inside this edge
    Rat off_lo, off_hi;   // edge offsets at pos_lo / pos_hi
    int side;
  };
  struct SideCover {
    std::set<VertexId> vertices;
    std::set<EdgeId> full_edges;
    std::vector<std::tuple<EdgeId, Rat, Rat>> partials;  // (edge, lo, hi)
  };

  std::array<GraphPoint, 3> corners_;
  std::array<GraphPath, 3> sides_;
  std::array<Rat, 3> corner_pos_;
  Rat length_;
  std::vector<Station> stations_;
  std::vector<Segment> segments_;
  std::array<SideCover, 3> cover_;
};

GraphPath reverse_path(const GraphPath& path);

// Station breakdown of a single path: (distance from start, point) pairs for
// the start, every interior vertex, and the end.
std::vector<std::pair<Rat, GraphPoint>> path_stations(const MetricGraph& g,
                                                      const GraphPath& path);

}  // namespace hyperchord
