#include "hyperchord/triangles.hpp"

#include <algorithm>

namespace hyperchord {

namespace {

struct PathSegment {
  Rat length;
  EdgeId edge;
  Rat off_from, off_to;
};

std::vector<PathSegment> path_segments(const MetricGraph& g,
                                       const GraphPath& path) {
  std::vector<PathSegment> segs;
  auto endpoint_offset = [&g](EdgeId e, VertexId v) -> Rat {
    const Edge& ed = g.edge(e);
    if (v == ed.u) return Rat(0);
    if (v == ed.v) return ed.length;
    throw GraphError(GraphError::Code::InvalidPoint,
                     "vertex not an endpoint of its path edge");
  };

  if (path.vertices.empty()) {
    if (path.start == path.end) return segs;
    if (path.start.is_vertex() || path.end.is_vertex() ||
        path.start.edge != path.end.edge)
      throw GraphError(GraphError::Code::InvalidPoint,
                       "vertex-free path must stay on one edge");
    segs.push_back({abs(Rat(path.start.offset - path.end.offset)),
                    path.start.edge, path.start.offset, path.end.offset});
    return segs;
  }

  if (!path.start.is_vertex()) {
    EdgeId e = path.start.edge;
    Rat to = endpoint_offset(e, path.vertices.front());
    segs.push_back(
        {abs(Rat(path.start.offset - to)), e, path.start.offset, to});
  } else if (path.start.vertex != path.vertices.front()) {
    throw GraphError(GraphError::Code::InvalidPoint,
                     "path start does not match vertex sequence");
  }
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    VertexId a = path.vertices[i], b = path.vertices[i + 1];
    auto e = g.find_edge(a, b);
    if (!e)
      throw GraphError(GraphError::Code::EdgeMissing,
                       "path uses missing edge " + g.vertex_name(a) + " " +
                           g.vertex_name(b));
    segs.push_back({g.edge(*e).length, *e, endpoint_offset(*e, a),
                    endpoint_offset(*e, b)});
  }
  if (!path.end.is_vertex()) {
    EdgeId e = path.end.edge;
    Rat from = endpoint_offset(e, path.vertices.back());
    segs.push_back({abs(Rat(from - path.end.offset)), e, from, path.end.offset});
  } else if (path.end.vertex != path.vertices.back()) {
    throw GraphError(GraphError::Code::InvalidPoint,
                     "path end does not match vertex sequence");
  }
  return segs;
}

}  // namespace

GraphPath reverse_path(const GraphPath& path) {
  GraphPath r;
  r.start = path.end;
  r.end = path.start;
  r.vertices.assign(path.vertices.rbegin(), path.vertices.rend());
  r.length = path.length;
  return r;
}

std::vector<std::pair<Rat, GraphPoint>> path_stations(const MetricGraph& g,
                                                      const GraphPath& path) {
  std::vector<std::pair<Rat, GraphPoint>> stations;
  Rat at = 0;
  stations.emplace_back(at, path.start);
  auto segs = path_segments(g, path);
  std::size_t vertex_cursor = path.start.is_vertex() ? 1 : 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    at += segs[i].length;
    bool last = (i + 1 == segs.size());
    if (last) {
      stations.emplace_back(at, path.end);
    } else {
      stations.emplace_back(at,
                            GraphPoint::at_vertex(path.vertices[vertex_cursor]));
      ++vertex_cursor;
    }
  }
  return stations;
}

GeodesicTriangle GeodesicTriangle::from_paths(const DistanceOracle& oracle,
                                              std::array<GraphPath, 3> sides) {
  const MetricGraph& g = oracle.graph();
  GeodesicTriangle t;
  for (int i = 0; i < 3; ++i) {
    const GraphPath& side = sides[i];
    const GraphPath& next = sides[(i + 1) % 3];
    if (!(side.end == next.start))
      throw GraphError(GraphError::Code::InvalidPoint,
                       "triangle sides do not chain");
    if (side.length != distance_points(oracle, side.start, side.end))
      throw GraphError(GraphError::Code::InvalidPoint,
                       "triangle side is not a geodesic");
    t.corners_[i] = side.start;
  }
  t.sides_ = std::move(sides);
  t.length_ = 0;
  for (int i = 0; i < 3; ++i) {
    t.corner_pos_[i] = t.length_;
    const GraphPath& side = t.sides_[i];
    auto segs = path_segments(g, side);
    auto stations = path_stations(g, side);
    for (auto& [pos, point] : stations)
      t.stations_.push_back({Rat(t.length_ + pos), point, i});
    Rat at = t.length_;
    for (const auto& seg : segs) {
      Segment s;
      s.pos_lo = at;
      at += seg.length;
      s.pos_hi = at;
      s.edge = seg.edge;
      s.off_lo = seg.off_from;
      s.off_hi = seg.off_to;
      s.side = i;
      t.segments_.push_back(std::move(s));

      auto& cover = t.cover_[i];
      const Edge& ed = g.edge(seg.edge);
      Rat lo = std::min(seg.off_from, seg.off_to);
      Rat hi = std::max(seg.off_from, seg.off_to);
      if (lo == 0 && hi == ed.length)
        cover.full_edges.insert(seg.edge);
      else
        cover.partials.emplace_back(seg.edge, lo, hi);
    }
    for (VertexId v : side.vertices) t.cover_[i].vertices.insert(v);
    t.length_ += side.length;
  }
  if (t.length_ == 0)
    throw GraphError(GraphError::Code::InvalidPoint,
                     "triangle has zero total length");
  return t;
}

GraphPoint GeodesicTriangle::point_at(const MetricGraph& g,
                                      const Rat& pos) const {
  Rat wrapped = pos;
  if (wrapped == length_) wrapped = 0;  // the circle closes up
  if (wrapped < 0 || wrapped >= length_)
    throw GraphError(GraphError::Code::InvalidPoint,
                     "circle coordinate outside [0, L(T))");
  // segments are contiguous and ascending
  auto it = std::upper_bound(segments_.begin(), segments_.end(), wrapped,
                             [](const Rat& p, const Segment& s) {
                               return p < s.pos_hi;
                             });
  if (it == segments_.end()) it = std::prev(segments_.end());
  const Segment& s = *it;
  Rat along = wrapped - s.pos_lo;
  Rat off = s.off_lo <= s.off_hi ? Rat(s.off_lo + along) : Rat(s.off_lo - along);
  return GraphPoint::on_edge(g, s.edge, std::move(off));
}

Rat GeodesicTriangle::circle_distance(const Rat& s, const Rat& t) const {
  Rat diff = abs(Rat(s - t));
  return std::min(diff, Rat(length_ - diff));
}

std::pair<Rat, Rat> GeodesicTriangle::side_interval(int i) const {
  return {corner_pos_[i], Rat(corner_pos_[i] + sides_[i].length)};
}

bool GeodesicTriangle::side_covers(int i, const GraphPoint& p) const {
  const SideCover& cover = cover_[i];
  if (p.is_vertex()) {
    if (cover.vertices.count(p.vertex)) return true;
    const GraphPoint& start = sides_[i].start;
    const GraphPoint& end = sides_[i].end;
    return (start.is_vertex() && start.vertex == p.vertex) ||
           (end.is_vertex() && end.vertex == p.vertex);
  }
  if (cover.full_edges.count(p.edge)) return true;
  for (const auto& [edge, lo, hi] : cover.partials)
    if (edge == p.edge && lo <= p.offset && p.offset <= hi) return true;
  return false;
}

}  // namespace hyperchord
