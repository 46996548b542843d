#include "hyperchord/metric_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace hyperchord {

MetricGraph MetricGraph::from_edges(const std::vector<EdgeInput>& edges) {
  MetricGraph g;
  auto intern = [&g](const std::string& name) -> VertexId {
    auto it = g.index_.find(name);
    if (it != g.index_.end()) return it->second;
    VertexId id = static_cast<VertexId>(g.names_.size());
    g.names_.push_back(name);
    g.index_.emplace(name, id);
    g.adjacency_.emplace_back();
    return id;
  };

  std::set<std::pair<VertexId, VertexId>> seen;
  g.total_length_ = 0;
  for (const auto& [a_name, b_name, length] : edges) {
    VertexId a = intern(a_name);
    VertexId b = intern(b_name);
    if (a == b)
      throw GraphError(GraphError::Code::SelfLoop, "self-loop at " + a_name);
    if (length <= 0)
      throw GraphError(GraphError::Code::NonPositiveLength,
                       "non-positive length on edge " + a_name + " " + b_name);
    VertexId u = std::min(a, b), v = std::max(a, b);
    if (!seen.emplace(u, v).second)
      throw GraphError(GraphError::Code::DuplicateEdge,
                       "duplicate edge " + a_name + " " + b_name);
    EdgeId e = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(Edge{u, v, length});
    g.adjacency_[u].emplace_back(v, e);
    g.adjacency_[v].emplace_back(u, e);
    g.total_length_ += length;
  }
  if (g.names_.empty())
    throw GraphError(GraphError::Code::ParseError, "empty edge list");
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());

  // connectivity
  std::vector<char> visited(g.names_.size(), 0);
  std::vector<VertexId> stack{0};
  visited[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.adjacency_[x]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != g.names_.size())
    throw GraphError(GraphError::Code::DisconnectedGraph,
                     "graph is not connected");
  return g;
}

std::optional<VertexId> MetricGraph::find_vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId MetricGraph::require_vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v)
    throw GraphError(GraphError::Code::UnknownVertex, "unknown vertex " + name);
  return *v;
}

std::optional<EdgeId> MetricGraph::find_edge(VertexId a, VertexId b) const {
  VertexId u = std::min(a, b), v = std::max(a, b);
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(),
                             std::pair<VertexId, EdgeId>{v, -1});
  for (; it != adj.end() && it->first == v; ++it) return it->second;
  return std::nullopt;
}

GraphPoint GraphPoint::on_edge(const MetricGraph& g, EdgeId e, Rat offset) {
  const Edge& ed = g.edge(e);
  if (offset < 0 || offset > ed.length)
    throw GraphError(GraphError::Code::InvalidPoint,
                     "offset outside [0, L(e)]");
  if (offset == 0) return at_vertex(ed.u);
  if (offset == ed.length) return at_vertex(ed.v);
  GraphPoint p;
  p.edge = e;
  p.offset = std::move(offset);
  return p;
}

std::string GraphPoint::describe(const MetricGraph& g) const {
  if (is_vertex()) return g.vertex_name(vertex);
  const Edge& e = g.edge(edge);
  return g.vertex_name(e.u) + "--" + g.vertex_name(e.v) + "@" +
         rat_to_string(offset);
}

DistanceOracle::DistanceOracle(const MetricGraph& g)
    : graph_(&g),
      rows_(g.vertex_count()),
      ready_(new std::atomic<bool>[g.vertex_count()]),
      mutex_(std::make_shared<std::mutex>()) {
  for (int i = 0; i < g.vertex_count(); ++i)
    ready_[i].store(false, std::memory_order_relaxed);
}

void DistanceOracle::materialize(VertexId source) const {
  std::lock_guard<std::mutex> lock(*mutex_);
  if (ready_[source].load(std::memory_order_acquire)) return;
  const int n = graph_->vertex_count();
  std::vector<Rat> dist(n);
  std::vector<char> done(n, 0), reached(n, 0);
  using Item = std::pair<Rat, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[source] = 0;
  reached[source] = 1;
  queue.emplace(Rat(0), source);
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (done[x]) continue;
    done[x] = 1;
    for (auto [w, e] : graph_->neighbors(x)) {
      if (done[w]) continue;
      Rat nd = d + graph_->edge(e).length;
      if (!reached[w] || nd < dist[w]) {
        dist[w] = nd;
        reached[w] = 1;
        queue.emplace(std::move(nd), w);
      }
    }
  }
  rows_[source] = std::move(dist);
  ready_[source].store(true, std::memory_order_release);
}

const Rat& DistanceOracle::vertex_distance(VertexId u, VertexId v) const {
  if (!ready_[u].load(std::memory_order_acquire)) materialize(u);
  return rows_[u][v];
}

std::span<const Rat> DistanceOracle::row(VertexId source) const {
  if (!ready_[source].load(std::memory_order_acquire)) materialize(source);
  return {rows_[source].data(), rows_[source].size()};
}

std::vector<std::pair<VertexId, VertexId>> DistanceOracle::shortest_path_dag(
    VertexId u, VertexId v) const {
  const MetricGraph& g = *graph_;
  auto du = row(u);
  auto dv = row(v);
  const Rat& total = du[v];
  std::vector<std::pair<VertexId, VertexId>> result;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (du[ed.u] + ed.length + dv[ed.v] == total)
      result.emplace_back(ed.u, ed.v);
    else if (du[ed.v] + ed.length + dv[ed.u] == total)
      result.emplace_back(ed.v, ed.u);
  }
  return result;
}

Rat distance_points(const DistanceOracle& oracle, const GraphPoint& p,
                    const GraphPoint& q) {
  const MetricGraph& g = oracle.graph();
  if (p.is_vertex() && q.is_vertex())
    return oracle.vertex_distance(p.vertex, q.vertex);

  auto exits = [&g](const GraphPoint& x)
      -> std::vector<std::pair<VertexId, Rat>> {
    if (x.is_vertex()) return {{x.vertex, Rat(0)}};
    const Edge& e = g.edge(x.edge);
    return {{e.u, x.offset}, {e.v, e.length - x.offset}};
  };

  std::optional<Rat> best;
  if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge) {
    best = abs(Rat(p.offset - q.offset));
  }
  for (const auto& [ep, cp] : exits(p)) {
    for (const auto& [eq, cq] : exits(q)) {
      Rat d = cp + oracle.vertex_distance(ep, eq) + cq;
      if (!best || d < *best) best = std::move(d);
    }
  }
  return *best;
}

namespace {

// DFS over the shortest-path DAG toward v, emitting vertex sequences in
// lexicographic order.
struct GeodesicSearch {
  const DistanceOracle& oracle;
  const MetricGraph& g;
  std::span<const Rat> dist_to_target;
  VertexId target;
  long cap;
  PathOrder order;
  std::vector<VertexId> current;
  std::vector<std::vector<VertexId>>& out;
  bool truncated = false;

  // Returns false to abort the search.
  bool run(VertexId x) {
    current.push_back(x);
    bool keep_going = true;
    if (x == target) {
      if (static_cast<long>(out.size()) < cap) {
        out.push_back(current);
      } else {
        truncated = true;
        keep_going = false;
      }
    } else {
      auto nbrs = g.neighbors(x);
      auto step = [&](std::pair<VertexId, EdgeId> nb) {
        auto [w, e] = nb;
        if (dist_to_target[x] == g.edge(e).length + dist_to_target[w])
          keep_going = run(w);
      };
      if (order == PathOrder::LexMin) {
        for (auto it = nbrs.begin(); keep_going && it != nbrs.end(); ++it)
          step(*it);
      } else {
        for (auto it = nbrs.rbegin(); keep_going && it != nbrs.rend(); ++it)
          step(*it);
      }
    }
    current.pop_back();
    return keep_going;
  }
};

}  // namespace

GeodesicEnumeration geodesics_between(const DistanceOracle& oracle, VertexId u,
                                      VertexId v, long cap, PathOrder order) {
  const MetricGraph& g = oracle.graph();
  GeodesicEnumeration result;
  std::vector<std::vector<VertexId>> sequences;
  if (u == v) {
    sequences.push_back({u});
  } else {
    GeodesicSearch search{oracle, g, oracle.row(v), v,
                          cap,    order, {}, sequences};
    search.run(u);
    result.truncated = search.truncated;
  }
  const Rat& total = oracle.vertex_distance(u, v);
  for (auto& seq : sequences) {
    GraphPath path;
    path.start = GraphPoint::at_vertex(u);
    path.end = GraphPoint::at_vertex(v);
    path.vertices = std::move(seq);
    path.length = total;
    result.paths.push_back(std::move(path));
  }
  return result;
}

GeodesicEnumeration geodesics_between_points(const DistanceOracle& oracle,
                                             const GraphPoint& p,
                                             const GraphPoint& q, long cap,
                                             PathOrder order) {
  const MetricGraph& g = oracle.graph();
  if (p.is_vertex() && q.is_vertex())
    return geodesics_between(oracle, p.vertex, q.vertex, cap, order);

  GeodesicEnumeration result;
  if (p == q) {
    GraphPath trivial;
    trivial.start = p;
    trivial.end = q;
    trivial.length = 0;
    result.paths.push_back(std::move(trivial));
    return result;
  }

  Rat total = distance_points(oracle, p, q);
  std::vector<GraphPath> candidates;

  // Direct along-edge segment when both points share an edge.
  bool same_edge = !p.is_vertex() && !q.is_vertex() && p.edge == q.edge;
  if (same_edge && abs(Rat(p.offset - q.offset)) == total) {
    GraphPath direct;
    direct.start = p;
    direct.end = q;
    direct.length = total;
    candidates.push_back(std::move(direct));
  }

  auto exits = [&g](const GraphPoint& x)
      -> std::vector<std::pair<VertexId, Rat>> {
    if (x.is_vertex()) return {{x.vertex, Rat(0)}};
    const Edge& e = g.edge(x.edge);
    return {{e.u, x.offset}, {e.v, e.length - x.offset}};
  };

  for (const auto& [ep, cp] : exits(p)) {
    for (const auto& [eq, cq] : exits(q)) {
      if (cp + oracle.vertex_distance(ep, eq) + cq != total) continue;
      auto inner = geodesics_between(oracle, ep, eq, cap + 1, order);
      if (inner.truncated) result.truncated = true;
      for (auto& path : inner.paths) {
        GraphPath wrapped;
        wrapped.start = p;
        wrapped.end = q;
        wrapped.vertices = std::move(path.vertices);
        wrapped.length = total;
        candidates.push_back(std::move(wrapped));
      }
    }
  }

  auto key = [](const GraphPath& path) { return path.vertices; };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const GraphPath& a, const GraphPath& b) {
                     return key(a) < key(b);
                   });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [&](const GraphPath& a, const GraphPath& b) {
                                 return key(a) == key(b);
                               }),
                   candidates.end());
  if (order == PathOrder::LexMax)
    std::reverse(candidates.begin(), candidates.end());
  if (static_cast<long>(candidates.size()) > cap) {
    candidates.resize(cap);
    result.truncated = true;
  }
  result.paths = std::move(candidates);
  return result;
}

}  // namespace hyperchord
