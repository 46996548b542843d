#include <doctest.h>

#include "hyperchord/families.hpp"
#include "hyperchord/metric_graph.hpp"
#include "testutil.hpp"

using namespace hyperchord;
using namespace testutil;

namespace {

MetricGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_unit(edges);
}

}  // namespace

TEST_CASE("construction validates input") {
  SUBCASE("counts and names") {
    MetricGraph g = cycle_graph(6);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(g.vertex_name(0) == "v0");
    CHECK(g.find_vertex("v5").has_value());
    CHECK(!g.find_vertex("nope").has_value());
    CHECK(g.total_edge_length() == Rat(6));
  }
  SUBCASE("non-positive length rejected") {
    CHECK_THROWS_AS(MetricGraph::from_edges({{"a", "b", Rat(0)}}), GraphError);
    CHECK_THROWS_AS(MetricGraph::from_edges({{"a", "b", Rat(-1, 2)}}),
                    GraphError);
  }
  SUBCASE("self loop rejected") {
    CHECK_THROWS_AS(MetricGraph::from_edges({{"a", "a", Rat(1)}}), GraphError);
  }
  SUBCASE("duplicate edge rejected") {
    CHECK_THROWS_AS(MetricGraph::from_edges(
                        {{"a", "b", Rat(1)}, {"b", "a", Rat(2)}}),
                    GraphError);
  }
  SUBCASE("disconnected graph rejected") {
    try {
      MetricGraph::from_edges({{"a", "b", Rat(1)}, {"c", "d", Rat(1)}});
      CHECK(false);
    } catch (const GraphError& e) {
      CHECK(e.code == GraphError::Code::DisconnectedGraph);
    }
  }
}

TEST_CASE("vertex distances match Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> size(2, 8);
    MetricGraph g = random_graph(rng, size(rng), trial % 2 == 0);
    DistanceOracle oracle(g);
    auto fw = floyd_distances(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(oracle.vertex_distance(u, v) == fw[u][v]);
        CHECK(oracle.vertex_distance(u, v) == oracle.vertex_distance(v, u));
      }
    // triangle inequality over the full table
    for (VertexId a = 0; a < g.vertex_count(); ++a)
      for (VertexId b = 0; b < g.vertex_count(); ++b)
        for (VertexId c = 0; c < g.vertex_count(); ++c)
          CHECK(oracle.vertex_distance(a, c) <=
                oracle.vertex_distance(a, b) + oracle.vertex_distance(b, c));
  }
}

TEST_CASE("point distances") {
  MetricGraph g = cycle_graph(6);
  DistanceOracle oracle(g);
  EdgeId e01 = *g.find_edge(0, 1);

  SUBCASE("same point is zero") {
    GraphPoint p = GraphPoint::on_edge(g, e01, Rat(1, 3));
    CHECK(distance_points(oracle, p, p) == Rat(0));
  }
  SUBCASE("offsets 0 and L normalize to vertices") {
    CHECK(GraphPoint::on_edge(g, e01, Rat(0)).is_vertex());
    CHECK(GraphPoint::on_edge(g, e01, Rat(1)).is_vertex());
    CHECK_THROWS_AS(GraphPoint::on_edge(g, e01, Rat(3, 2)), GraphError);
  }
  SUBCASE("same-edge direct route") {
    GraphPoint p = GraphPoint::on_edge(g, e01, Rat(1, 4));
    GraphPoint q = GraphPoint::on_edge(g, e01, Rat(3, 4));
    CHECK(distance_points(oracle, p, q) == Rat(1, 2));
  }
  SUBCASE("edge midpoint to antipodal vertex") {
    GraphPoint mid = GraphPoint::on_edge(g, e01, Rat(1, 2));
    CHECK(distance_points(oracle, mid, GraphPoint::at_vertex(3)) == Rat(5, 2));
  }
  SUBCASE("matches brute force on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      MetricGraph h = random_graph(rng, 6, trial % 2 == 0);
      DistanceOracle ho(h);
      std::uniform_int_distribution<int> epick(0, h.edge_count() - 1);
      for (int probe = 0; probe < 10; ++probe) {
        EdgeId ea = epick(rng), eb = epick(rng);
        Rat la = h.edge(ea).length, lb = h.edge(eb).length;
        GraphPoint p = GraphPoint::on_edge(h, ea, Rat(la / 3));
        GraphPoint q = GraphPoint::on_edge(h, eb, Rat(lb * 2 / 3));
        CHECK(distance_points(ho, p, q) == brute_point_distance(h, p, q));
      }
    }
  }
}

TEST_CASE("geodesic enumeration") {
  SUBCASE("square has two geodesics between opposite corners") {
    FamilyOutput grid = gen_grid(1, 1);
    DistanceOracle oracle(grid.graph);
    VertexId a = grid.graph.require_vertex("0,0");
    VertexId b = grid.graph.require_vertex("1,1");
    auto geo = geodesics_between(oracle, a, b, 10);
    CHECK(geo.paths.size() == 2);
    CHECK(!geo.truncated);
    for (const auto& p : geo.paths) {
      CHECK(p.length == Rat(2));
      CHECK(p.vertices.size() == 3);
    }
  }
  SUBCASE("quadrant corner-to-corner count is binomial(4,2)") {
    FamilyOutput grid = gen_grid(2, 2);
    DistanceOracle oracle(grid.graph);
    auto geo = geodesics_between(oracle, grid.graph.require_vertex("0,0"),
                                 grid.graph.require_vertex("2,2"), 100);
    CHECK(geo.paths.size() == 6);
  }
  SUBCASE("cap truncates and flags") {
    FamilyOutput grid = gen_grid(2, 2);
    DistanceOracle oracle(grid.graph);
    auto geo = geodesics_between(oracle, grid.graph.require_vertex("0,0"),
                                 grid.graph.require_vertex("2,2"), 2);
    CHECK(geo.paths.size() == 2);
    CHECK(geo.truncated);
  }
  SUBCASE("lex orders agree as sets on a small graph") {
    FamilyOutput grid = gen_grid(2, 1);
    DistanceOracle oracle(grid.graph);
    VertexId a = grid.graph.require_vertex("0,0");
    VertexId b = grid.graph.require_vertex("2,1");
    auto lo = geodesics_between(oracle, a, b, 100, PathOrder::LexMin);
    auto hi = geodesics_between(oracle, a, b, 100, PathOrder::LexMax);
    auto key = [](const GeodesicEnumeration& e) {
      std::set<std::vector<VertexId>> s;
      for (const auto& p : e.paths) s.insert(p.vertices);
      return s;
    };
    CHECK(key(lo) == key(hi));
  }
  SUBCASE("every enumerated geodesic realizes the distance") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      MetricGraph g = random_graph(rng, 7, false);
      DistanceOracle oracle(g);
      for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
          auto geo = geodesics_between(oracle, u, v, 16);
          CHECK(!geo.paths.empty());
          for (const auto& p : geo.paths) {
            CHECK(p.length == oracle.vertex_distance(u, v));
            Rat resum = 0;
            for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
              auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
              REQUIRE(e.has_value());
              resum += g.edge(*e).length;
            }
            CHECK(resum == p.length);
          }
        }
    }
  }
}

TEST_CASE("point geodesics between midpoints") {
  MetricGraph g = cycle_graph(4);
  DistanceOracle oracle(g);
  GraphPoint p = GraphPoint::on_edge(g, *g.find_edge(0, 1), Rat(1, 2));
  GraphPoint q = GraphPoint::on_edge(g, *g.find_edge(2, 3), Rat(1, 2));
  auto geo = geodesics_between_points(oracle, p, q, 10);
  CHECK(geo.paths.size() == 2);
  for (const auto& path : geo.paths) CHECK(path.length == Rat(2));
}

TEST_CASE("weighted exactness: sums of thirds stay exact") {
  MetricGraph g = make_weighted(
      {{0, 1, Rat(1, 3)}, {1, 2, Rat(1, 3)}, {2, 3, Rat(1, 3)},
       {0, 3, Rat(100, 99)}});
  DistanceOracle oracle(g);
  CHECK(oracle.vertex_distance(0, 3) == Rat(1));
  CHECK(oracle.vertex_distance(1, 3) == Rat(2, 3));
}
