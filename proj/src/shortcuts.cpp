#include "hyperchord/shortcuts.hpp"

#include <algorithm>
#include <queue>

namespace hyperchord {

namespace {

// Single-source scan for strict shortcuts: Dijkstra from p over the graph
// with all other cycle vertices and all cycle arcs removed, then one closing
// edge into each candidate endpoint q.
struct StrictScan {
  const DistanceOracle& oracle;
  const MetricGraph& g;
  const Cycle& cycle;
  std::vector<char> on_cycle;
  VertexId source = -1;

  std::vector<Rat> dist;
  std::vector<char> reached;
  std::vector<VertexId> pred;

  StrictScan(const DistanceOracle& o, const Cycle& c)
      : oracle(o), g(o.graph()), cycle(c), on_cycle(g.vertex_count(), 0) {
    for (VertexId v : cycle.vertices()) on_cycle[v] = 1;
  }

  void run(VertexId p) {
    source = p;
    const int n = g.vertex_count();
    dist.assign(n, Rat(0));
    reached.assign(n, 0);
    pred.assign(n, -1);
    std::vector<char> done(n, 0);
    using Item = std::pair<Rat, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    reached[p] = 1;
    queue.emplace(Rat(0), p);
    while (!queue.empty()) {
      auto [d, x] = queue.top();
      queue.pop();
      if (done[x]) continue;
      done[x] = 1;
      for (auto [w, e] : g.neighbors(x)) {
        if (done[w] || on_cycle[w]) continue;
        Rat nd = d + g.edge(e).length;
        if (!reached[w] || nd < dist[w] ||
            (nd == dist[w] && x < pred[w])) {
          dist[w] = nd;
          reached[w] = 1;
          pred[w] = x;
          queue.emplace(std::move(nd), w);
        }
      }
    }
  }

  std::vector<VertexId> reconstruct(VertexId w) const {
    std::vector<VertexId> chain{w};
    while (chain.back() != source) chain.push_back(pred[chain.back()]);
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  // Best strict path from the scanned source to q, if any.
  std::optional<std::pair<Rat, std::vector<VertexId>>> best_to(VertexId q) const {
    std::optional<Rat> best_len;
    std::vector<std::pair<Rat, VertexId>> candidates;  // (length, last hop or -1)
    if (auto e = g.find_edge(source, q);
        e && !cycle.contains_arc(source, q)) {
      candidates.emplace_back(g.edge(*e).length, VertexId(-1));
    }
    for (auto [w, e] : g.neighbors(q)) {
      if (on_cycle[w] || !reached[w]) continue;
      candidates.emplace_back(Rat(dist[w] + g.edge(e).length), w);
    }
    if (candidates.empty()) return std::nullopt;
    for (const auto& [len, w] : candidates)
      if (!best_len || len < *best_len) best_len = len;
    std::optional<std::vector<VertexId>> best_seq;
    for (const auto& [len, w] : candidates) {
      if (len != *best_len) continue;
      std::vector<VertexId> seq =
          w < 0 ? std::vector<VertexId>{source} : reconstruct(w);
      seq.push_back(q);
      if (!best_seq || seq < *best_seq) best_seq = std::move(seq);
    }
    return std::make_pair(*best_len, std::move(*best_seq));
  }
};

ShortcutCertificate make_certificate(VertexId p, VertexId q, Rat length,
                                     std::vector<VertexId> seq) {
  ShortcutCertificate cert;
  cert.p = p;
  cert.q = q;
  cert.length = length;
  cert.strict = true;
  cert.path.start = GraphPoint::at_vertex(p);
  cert.path.end = GraphPoint::at_vertex(q);
  cert.path.vertices = std::move(seq);
  cert.path.length = std::move(length);
  return cert;
}

}  // namespace

std::optional<ShortcutCertificate> strict_shortcut(
    const DistanceOracle& oracle, const Cycle& cycle, VertexId p, VertexId q,
    const std::optional<Rat>& max_len) {
  auto ip = cycle.index_of(p);
  auto iq = cycle.index_of(q);
  if (!ip || !iq || p == q)
    throw GraphError(GraphError::Code::VertexNotOnCycle,
                     "endpoints must be two distinct cycle vertices");
  StrictScan scan(oracle, cycle);
  scan.run(p);
  auto best = scan.best_to(q);
  if (!best) return std::nullopt;
  auto& [length, seq] = *best;
  if (length >= cycle.vertex_pair_distance(*ip, *iq)) return std::nullopt;
  if (max_len && length > *max_len) return std::nullopt;
  return make_certificate(p, q, length, std::move(seq));
}

namespace {

void merge_best(std::vector<std::optional<ShortcutCertificate>>& best_by_index,
                int idx, const ShortcutCertificate& cert) {
  auto& slot = best_by_index[idx];
  if (!slot || cert.length < slot->length ||
      (cert.length == slot->length && cert.path.vertices < slot->path.vertices))
    slot = cert;
}

}  // namespace

std::vector<std::pair<VertexId, ShortcutCertificate>> shortcut_vertices(
    const DistanceOracle& oracle, const Cycle& cycle,
    const std::optional<Rat>& max_len) {
  const int n = cycle.size();
  std::vector<std::optional<ShortcutCertificate>> best(n);
  StrictScan scan(oracle, cycle);
  for (int i = 0; i < n; ++i) {
    VertexId p = cycle.vertices()[i];
    scan.run(p);
    for (int j = i + 1; j < n; ++j) {
      VertexId q = cycle.vertices()[j];
      auto found = scan.best_to(q);
      if (!found) continue;
      auto& [length, seq] = *found;
      if (length >= cycle.vertex_pair_distance(i, j)) continue;
      if (max_len && length > *max_len) continue;
      ShortcutCertificate cert = make_certificate(p, q, length, seq);
      merge_best(best, i, cert);
      std::reverse(seq.begin(), seq.end());
      merge_best(best, j, make_certificate(q, p, length, std::move(seq)));
    }
  }
  std::vector<std::pair<VertexId, ShortcutCertificate>> result;
  for (int i = 0; i < n; ++i)
    if (best[i]) result.emplace_back(cycle.vertices()[i], std::move(*best[i]));
  return result;
}

Rat max_cyclic_gap(std::vector<Rat> positions, const Rat& circumference) {
  if (positions.empty()) return circumference;
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  Rat max_gap = circumference - positions.back() + positions.front();
  for (std::size_t i = 0; i + 1 < positions.size(); ++i)
    max_gap = std::max(max_gap, Rat(positions[i + 1] - positions[i]));
  return max_gap;
}

DensityReport density_check(const Cycle& cycle, std::vector<Rat> positions,
                            const Rat& eps) {
  if (eps <= 0)
    throw GraphError(GraphError::Code::InvalidPoint, "eps must be positive");
  for (const Rat& s : positions)
    if (s < 0 || s >= cycle.total_length())
      throw GraphError(GraphError::Code::PointNotOnCycle,
                       "position outside [0, L(C))");
  DensityReport report;
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  report.max_gap = max_cyclic_gap(positions, cycle.total_length());
  report.dense = !positions.empty() && report.max_gap < 2 * eps;
  report.positions = std::move(positions);
  report.eps = eps;
  return report;
}

DensityEvidence densely_shortcut_evidence(const DistanceOracle& oracle,
                                          const Cycle& cycle, const Rat& eps,
                                          const std::optional<Rat>& max_len) {
  const int n = cycle.size();
  DensityEvidence evidence;
  std::vector<std::optional<ShortcutCertificate>> best(n);
  std::vector<char> is_shortcut_vertex(n, 0);
  std::vector<Rat> positions;
  StrictScan scan(oracle, cycle);

  auto note = [&](int idx, const ShortcutCertificate& cert) {
    if (!is_shortcut_vertex[idx]) {
      is_shortcut_vertex[idx] = 1;
      positions.push_back(cycle.position(idx));
    }
    merge_best(best, idx, cert);
  };

  bool dense = false;
  for (int i = 0; i < n && !dense; ++i) {
    VertexId p = cycle.vertices()[i];
    scan.run(p);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      VertexId q = cycle.vertices()[j];
      auto found = scan.best_to(q);
      if (!found) continue;
      auto& [length, seq] = *found;
      if (length >= cycle.vertex_pair_distance(i, j)) continue;
      if (max_len && length > *max_len) continue;
      ShortcutCertificate cert = make_certificate(p, q, length, seq);
      note(i, cert);
      std::reverse(seq.begin(), seq.end());
      note(j, make_certificate(q, p, length, std::move(seq)));
    }
    dense = !positions.empty() &&
            max_cyclic_gap(positions, cycle.total_length()) < 2 * eps;
  }

  evidence.dense = dense;
  evidence.report = density_check(cycle, positions, eps);
  // early exit keeps the report's density flag consistent with `dense`
  for (int i = 0; i < n; ++i)
    if (best[i])
      evidence.certificates.emplace_back(cycle.vertices()[i],
                                         std::move(*best[i]));
  return evidence;
}

std::vector<Rat> triangle_shortcut_positions(const DistanceOracle& oracle,
                                             const GeodesicTriangle& triangle,
                                             const Rat& m, const Rat& h) {
  if (h <= 0)
    throw GraphError(GraphError::Code::InvalidPoint, "h must be positive");
  const MetricGraph& g = oracle.graph();
  const Rat& total = triangle.total_length();

  std::vector<Rat> candidates;
  for (const auto& station : triangle.stations())
    if (station.pos < total) candidates.push_back(station.pos);
  for (Rat pos = 0; pos < total; pos += h) candidates.push_back(pos);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<GraphPoint> points;
  points.reserve(candidates.size());
  for (const Rat& pos : candidates) points.push_back(triangle.point_at(g, pos));

  std::vector<char> fired(candidates.size(), 0);
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      if (fired[a] && fired[b]) continue;
      Rat dg = distance_points(oracle, points[a], points[b]);
      if (dg > m) continue;
      if (dg < triangle.circle_distance(candidates[a], candidates[b])) {
        fired[a] = 1;
        fired[b] = 1;
      }
    }
  }
  std::vector<Rat> result;
  for (std::size_t a = 0; a < candidates.size(); ++a)
    if (fired[a]) result.push_back(candidates[a]);
  return result;
}

}  // namespace hyperchord
