#include "hyperchord/cycles.hpp"

#include <algorithm>

namespace hyperchord {

std::optional<int> Cycle::index_of(VertexId v) const {
  for (int i = 0; i < size(); ++i)
    if (vertices_[i] == v) return i;
  return std::nullopt;
}

bool Cycle::contains_arc(VertexId a, VertexId b) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    VertexId x = vertices_[i], y = vertices_[(i + 1) % n];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

Rat Cycle::distance(const Rat& s, const Rat& t) const {
  if (s < 0 || s >= length_ || t < 0 || t >= length_)
    throw GraphError(GraphError::Code::PointNotOnCycle,
                     "coordinate outside [0, L(C))");
  Rat diff = abs(Rat(s - t));
  return std::min(diff, Rat(length_ - diff));
}

Rat Cycle::vertex_pair_distance(int i, int j) const {
  return distance(positions_[i], positions_[j]);
}

Cycle cycle_from_vertices(const MetricGraph& g,
                          const std::vector<VertexId>& sequence) {
  std::vector<VertexId> verts = sequence;
  if (verts.size() >= 2 && verts.front() == verts.back()) verts.pop_back();
  if (verts.size() < 3)
    throw GraphError(GraphError::Code::NotACycle,
                     "a cycle needs at least three distinct vertices");
  {
    std::vector<VertexId> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GraphError(GraphError::Code::NotACycle, "repeated vertex in cycle");
  }
  const int n = static_cast<int>(verts.size());

  // canonical rotation and orientation
  int min_at = static_cast<int>(
      std::min_element(verts.begin(), verts.end()) - verts.begin());
  std::rotate(verts.begin(), verts.begin() + min_at, verts.end());
  if (verts[n - 1] < verts[1])
    std::reverse(verts.begin() + 1, verts.end());

  Cycle c;
  c.vertices_ = std::move(verts);
  c.length_ = 0;
  c.positions_.reserve(n);
  for (int i = 0; i < n; ++i) {
    c.positions_.push_back(c.length_);
    VertexId a = c.vertices_[i], b = c.vertices_[(i + 1) % n];
    auto e = g.find_edge(a, b);
    if (!e)
      throw GraphError(GraphError::Code::EdgeMissing,
                       "no edge " + g.vertex_name(a) + " " + g.vertex_name(b));
    c.arcs_.push_back(*e);
    c.length_ += g.edge(*e).length;
  }
  return c;
}

namespace {

struct CycleSearch {
  const DistanceOracle& oracle;
  const MetricGraph& g;
  const CycleBudget& budget;
  const std::function<bool(Cycle&&)>& sink;
  CycleStats stats;

  std::vector<char> allowed;
  std::vector<char> on_path;
  std::vector<VertexId> path;
  std::span<const Rat> dist_to_root;
  VertexId root = -1;
  bool stop_all = false;

  void run() {
    const int n = g.vertex_count();
    allowed.assign(n, 1);
    if (budget.restrict_to) {
      allowed.assign(n, 0);
      for (VertexId v : *budget.restrict_to) allowed[v] = 1;
    }
    on_path.assign(n, 0);
    for (root = 0; root < n && !stop_all; ++root) {
      if (!allowed[root]) continue;
      dist_to_root = oracle.row(root);
      path.assign(1, root);
      on_path[root] = 1;
      extend(root, Rat(0));
      on_path[root] = 0;
    }
  }

  void extend(VertexId x, const Rat& len) {
    if (stop_all) return;
    if (++stats.steps > budget.max_steps) {
      stats.truncated = true;
      stop_all = true;
      return;
    }
    for (auto [w, e] : g.neighbors(x)) {
      if (stop_all) return;
      if (!allowed[w]) continue;
      const Rat& elen = g.edge(e).length;
      if (w == root) {
        if (path.size() >= 3 && path[1] < x) {
          Rat total = len + elen;
          if (!budget.max_length || total <= *budget.max_length) emit();
        }
        continue;
      }
      if (w < root || on_path[w]) continue;
      Rat reach = len + elen + dist_to_root[w];
      if (budget.max_length && reach > *budget.max_length) continue;
      path.push_back(w);
      on_path[w] = 1;
      extend(w, len + elen);
      on_path[w] = 0;
      path.pop_back();
    }
  }

  void emit() {
    if (stats.emitted >= budget.max_count) {
      stats.truncated = true;
      stop_all = true;
      return;
    }
    ++stats.emitted;
    if (!sink(cycle_from_vertices(g, path))) stop_all = true;
  }
};

}  // namespace

CycleStats for_each_cycle(const DistanceOracle& oracle,
                          const CycleBudget& budget,
                          const std::function<bool(Cycle&&)>& sink) {
  CycleSearch search{oracle, oracle.graph(), budget, sink};
  search.run();
  return search.stats;
}

CycleEnumeration enumerate_cycles(const DistanceOracle& oracle,
                                  const CycleBudget& budget) {
  CycleEnumeration result;
  result.stats = for_each_cycle(oracle, budget, [&](Cycle&& c) {
    result.cycles.push_back(std::move(c));
    return true;
  });
  result.truncated = result.stats.truncated;
  return result;
}

}  // namespace hyperchord
