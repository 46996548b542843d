#include "hyperchord/hyperbolicity.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace hyperchord {

FourPointResult four_point_delta(const DistanceOracle& oracle) {
  const MetricGraph& g = oracle.graph();
  const int n = g.vertex_count();
  FourPointResult best;
  best.value = 0;
  best.sums = {Rat(0), Rat(0), Rat(0)};
  if (n < 4) return best;
  for (VertexId v = 0; v < n; ++v) oracle.row(v);
  for (VertexId a = 0; a < n; ++a) {
    auto da = oracle.row(a);
    for (VertexId b = a + 1; b < n; ++b) {
      auto db = oracle.row(b);
      for (VertexId c = b + 1; c < n; ++c) {
        auto dc = oracle.row(c);
        for (VertexId d = c + 1; d < n; ++d) {
          std::array<Rat, 3> sums = {Rat(da[b] + dc[d]), Rat(da[c] + db[d]),
                                     Rat(da[d] + db[c])};
          std::sort(sums.begin(), sums.end(), std::greater<Rat>());
          Rat value = (sums[0] - sums[1]) / 2;
          if (value > best.value) {
            best.value = std::move(value);
            best.witness = {a, b, c, d};
            best.sums = std::move(sums);
          }
        }
      }
    }
  }
  return best;
}

ThinnessResult thinness(const DistanceOracle& oracle,
                        const GeodesicTriangle& triangle, const Rat& h) {
  if (h <= 0)
    throw GraphError(GraphError::Code::InvalidPoint, "h must be positive");
  const MetricGraph& g = oracle.graph();
  ThinnessResult best;
  best.defect = 0;
  best.witness_pos = 0;
  best.witness_point = triangle.sides()[0].start;

  for (int side = 0; side < 3; ++side) {
    if (triangle.sides()[side].length == 0) continue;
    const int o1 = (side + 1) % 3, o2 = (side + 2) % 3;

    std::vector<const GeodesicTriangle::Station*> others;
    for (const auto& station : triangle.stations())
      if (station.side != side) others.push_back(&station);

    auto [lo, hi] = triangle.side_interval(side);
    std::vector<Rat> samples;
    for (const auto& station : triangle.stations())
      if (station.side == side) samples.push_back(station.pos);
    for (Rat pos = lo; pos < hi; pos += h) samples.push_back(pos);
    samples.push_back(hi);
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    for (const Rat& pos : samples) {
      Rat wrapped = pos == triangle.total_length() ? Rat(0) : pos;
      GraphPoint point = triangle.point_at(g, wrapped);
      if (triangle.side_covers(o1, point) || triangle.side_covers(o2, point))
        continue;
      std::optional<Rat> dist;
      for (const auto* station : others) {
        Rat d = distance_points(oracle, point, station->point);
        if (!dist || d < *dist) dist = std::move(d);
        if (*dist == 0) break;
      }
      if (dist && *dist > best.defect) {
        best.defect = std::move(*dist);
        best.witness_pos = pos;
        best.witness_point = std::move(point);
      }
    }
  }
  return best;
}

namespace {

GraphPath trivial_path(const GraphPoint& at) {
  GraphPath path;
  path.start = at;
  path.end = at;
  if (at.is_vertex()) path.vertices = {at.vertex};
  path.length = 0;
  return path;
}

// Distinct geodesics sampled from both lexicographic ends, so that extreme
// pairs (the ones producing fat bigons in grids) are kept under tight caps.
std::vector<GraphPath> sample_geodesics(const DistanceOracle& oracle,
                                        const GraphPoint& p,
                                        const GraphPoint& q, long cap,
                                        bool& truncated) {
  long half = std::max(1L, cap / 2);
  auto lo = geodesics_between_points(oracle, p, q, half, PathOrder::LexMin);
  auto hi = geodesics_between_points(oracle, p, q, half, PathOrder::LexMax);
  if (lo.truncated || hi.truncated) truncated = true;
  std::vector<GraphPath> all = std::move(lo.paths);
  for (auto& path : hi.paths) all.push_back(std::move(path));
  std::sort(all.begin(), all.end(), [](const GraphPath& a, const GraphPath& b) {
    return a.vertices < b.vertices;
  });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const GraphPath& a, const GraphPath& b) {
                          return a.vertices == b.vertices &&
                                 a.start == b.start && a.end == b.end;
                        }),
            all.end());
  return all;
}

// Per-work-item outcome; items are reduced serially in canonical order so the
// result is independent of the thread count.
struct ItemResult {
  Rat defect = 0;
  std::vector<std::string> witness_corners;
  Rat witness_pos = 0;
  std::optional<GraphPoint> witness_point;
  bool truncated = false;
  long bigons = 0;
  long triangles = 0;
};

void consider(const DistanceOracle& oracle, const Rat& h, ItemResult& item,
              const GeodesicTriangle& triangle,
              std::initializer_list<const GraphPoint*> corners) {
  auto result = thinness(oracle, triangle, h);
  if (result.defect > item.defect) {
    item.defect = std::move(result.defect);
    item.witness_pos = std::move(result.witness_pos);
    item.witness_point = std::move(result.witness_point);
    item.witness_corners.clear();
    for (const auto* c : corners)
      item.witness_corners.push_back(c->describe(oracle.graph()));
  }
}

void run_items(int threads, long count, const std::function<void(long)>& work) {
  if (threads <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<long>(threads, count); ++t) {
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        work(i);
    });
  }
  for (auto& worker : pool) worker.join();
}

}  // namespace

RipsEstimate rips_delta(const DistanceOracle& oracle, const RipsBudget& budget) {
  const MetricGraph& g = oracle.graph();
  RipsEstimate estimate;
  estimate.delta_low = 0;
  estimate.margin = budget.h / 2;
  estimate.witness_pos = 0;

  std::vector<GraphPoint> corners;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    corners.push_back(GraphPoint::at_vertex(v));
  if (budget.midpoint_corners) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      corners.push_back(GraphPoint::on_edge(g, e, g.edge(e).length / 2));
  }
  if (budget.corner_cap > 0 &&
      static_cast<long>(corners.size()) > budget.corner_cap) {
    // evenly strided subsample; keeps all-pairs work quadratic in the cap
    std::vector<GraphPoint> sub;
    const long total = static_cast<long>(corners.size());
    for (long k = 0; k < budget.corner_cap; ++k)
      sub.push_back(corners[(k * total) / budget.corner_cap]);
    corners = std::move(sub);
    estimate.truncated = true;
  }
  const long num_corners = static_cast<long>(corners.size());

  // corner pairs, farthest first when a pair cap is in force
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < num_corners; ++i)
    for (int j = i + 1; j < num_corners; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<int, int>> selected = pairs;
  if (budget.pair_cap >= 0 &&
      static_cast<long>(pairs.size()) > budget.pair_cap) {
    std::vector<Rat> pair_dist(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      pair_dist[k] = distance_points(oracle, corners[pairs[k].first],
                                     corners[pairs[k].second]);
    std::vector<std::size_t> order(pairs.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return pair_dist[a] > pair_dist[b];
                     });
    selected.clear();
    for (long k = 0; k < budget.pair_cap; ++k) selected.push_back(pairs[order[k]]);
    estimate.truncated = true;
  }

  // bigon work items: one per selected corner pair
  std::vector<ItemResult> pair_results(selected.size());
  run_items(budget.threads, static_cast<long>(selected.size()), [&](long idx) {
    auto [i, j] = selected[idx];
    ItemResult& item = pair_results[idx];
    auto geodesics = sample_geodesics(oracle, corners[i], corners[j],
                                      budget.geodesic_cap, item.truncated);
    if (geodesics.size() < 2) return;
    long combos = 0;
    for (std::size_t a = 0; a < geodesics.size() && !item.truncated; ++a) {
      for (std::size_t b = a + 1; b < geodesics.size(); ++b) {
        if (++combos > budget.combo_cap) {
          item.truncated = true;
          break;
        }
        std::array<GraphPath, 3> sides = {geodesics[a],
                                          trivial_path(corners[j]),
                                          reverse_path(geodesics[b])};
        auto triangle = GeodesicTriangle::from_paths(oracle, std::move(sides));
        consider(oracle, budget.h, item, triangle,
                 {&corners[i], &corners[j]});
        ++item.bigons;
      }
    }
  });

  // triple work items; under a cap, corners are shortlisted from the
  // farthest pairs
  std::vector<int> triple_corners;
  if (budget.triple_cap < 0) {
    for (int i = 0; i < num_corners; ++i) triple_corners.push_back(i);
  } else {
    long shortlist = 3;
    while ((shortlist + 1) * shortlist * (shortlist - 1) / 6 <=
               budget.triple_cap &&
           shortlist < num_corners)
      ++shortlist;
    if (shortlist < num_corners) estimate.truncated = true;
    std::vector<Rat> pair_dist(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      pair_dist[k] = distance_points(oracle, corners[pairs[k].first],
                                     corners[pairs[k].second]);
    std::vector<std::size_t> order(pairs.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return pair_dist[a] > pair_dist[b];
                     });
    std::vector<char> chosen(num_corners, 0);
    for (std::size_t k = 0;
         k < order.size() &&
         static_cast<long>(triple_corners.size()) < shortlist;
         ++k) {
      for (int c : {pairs[order[k]].first, pairs[order[k]].second}) {
        if (!chosen[c] &&
            static_cast<long>(triple_corners.size()) < shortlist) {
          chosen[c] = 1;
          triple_corners.push_back(c);
        }
      }
    }
    std::sort(triple_corners.begin(), triple_corners.end());
  }

  const long nt = static_cast<long>(triple_corners.size());
  std::vector<std::array<int, 3>> triples;
  for (long x = 0; x < nt; ++x)
    for (long y = x + 1; y < nt; ++y)
      for (long z = y + 1; z < nt; ++z)
        triples.push_back({triple_corners[x], triple_corners[y],
                           triple_corners[z]});
  if (budget.triple_cap >= 0 &&
      static_cast<long>(triples.size()) > budget.triple_cap) {
    triples.resize(budget.triple_cap);
    estimate.truncated = true;
  }

  std::vector<ItemResult> triple_results(triples.size());
  run_items(budget.threads, static_cast<long>(triples.size()), [&](long idx) {
    const GraphPoint& a = corners[triples[idx][0]];
    const GraphPoint& b = corners[triples[idx][1]];
    const GraphPoint& c = corners[triples[idx][2]];
    ItemResult& item = triple_results[idx];
    auto ab = sample_geodesics(oracle, a, b, budget.geodesic_cap,
                               item.truncated);
    auto bc = sample_geodesics(oracle, b, c, budget.geodesic_cap,
                               item.truncated);
    auto ca = sample_geodesics(oracle, c, a, budget.geodesic_cap,
                               item.truncated);
    long combos = 0;
    for (const auto& s1 : ab) {
      for (const auto& s2 : bc) {
        for (const auto& s3 : ca) {
          if (++combos > budget.combo_cap) {
            item.truncated = true;
            return;
          }
          auto triangle = GeodesicTriangle::from_paths(
              oracle, std::array<GraphPath, 3>{s1, s2, s3});
          consider(oracle, budget.h, item, triangle, {&a, &b, &c});
          ++item.triangles;
        }
      }
    }
  });

  auto reduce = [&](std::vector<ItemResult>& results) {
    for (auto& item : results) {
      estimate.bigons_examined += item.bigons;
      estimate.triangles_examined += item.triangles;
      estimate.truncated = estimate.truncated || item.truncated;
      if (item.defect > estimate.delta_low) {
        estimate.delta_low = std::move(item.defect);
        estimate.witness_pos = std::move(item.witness_pos);
        estimate.witness_point = std::move(item.witness_point);
        estimate.witness_corners = std::move(item.witness_corners);
      }
    }
  };
  reduce(pair_results);
  reduce(triple_results);
  return estimate;
}

}  // namespace hyperchord
