#include <doctest.h>

#include "hyperchord/graph_io.hpp"
#include "testutil.hpp"

using namespace hyperchord;
using namespace testutil;

TEST_CASE("parse accepts comments, blank lines, and both length forms") {
  const std::string text =
      "# a weighted triangle\n"
      "a b 1\n"
      "\n"
      "b c 3/2\n"
      "a c 1/2\n";
  MetricGraph g = parse_graph_string(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  VertexId b = g.require_vertex("b"), c = g.require_vertex("c");
  CHECK(g.edge(*g.find_edge(b, c)).length == Rat(3, 2));
}

TEST_CASE("serialize then parse is byte-stable") {
  const std::string canonical =
      "a b 1\n"
      "b c 3/2\n"
      "a c 1/2\n";
  MetricGraph g = parse_graph_string(canonical);
  std::string once = serialize_graph(g);
  CHECK(once == canonical);
  CHECK(serialize_graph(parse_graph_string(once)) == once);
}

TEST_CASE("canonical form reduces rationals") {
  MetricGraph g = parse_graph_string("a b 4/8\nb c 6/3\n");
  std::string out = serialize_graph(g);
  CHECK(out == "a b 1/2\nb c 2\n");
}

TEST_CASE("parse errors") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      parse_graph_string(text);
      CHECK(false);
    } catch (const GraphError& e) {
      CHECK(e.code == GraphError::Code::ParseError);
    }
  };
  expect_parse_error("a b\n");            // missing length
  expect_parse_error("a b one\n");        // non-numeric
  expect_parse_error("a b 1/0\n");        // zero denominator
  expect_parse_error("a b 1 extra\n");    // trailing token
  expect_parse_error("a b 1.5\n");        // floats are not lengths
  CHECK_THROWS_AS(parse_graph_string("a b 0\n"), GraphError);   // non-positive
  CHECK_THROWS_AS(parse_graph_string("a b -1\n"), GraphError);
  CHECK_THROWS_AS(parse_graph_string("a a 1\n"), GraphError);   // self loop
  CHECK_THROWS_AS(parse_graph_string(""), GraphError);          // empty graph
}

TEST_CASE("digest is stable and length-sensitive") {
  MetricGraph g1 = parse_graph_string("a b 1\nb c 1\n");
  MetricGraph g2 = parse_graph_string("a b 1\nb c 1\n");
  MetricGraph g3 = parse_graph_string("a b 1\nb c 2\n");
  CHECK(graph_digest(g1) == graph_digest(g2));
  CHECK(graph_digest(g1) != graph_digest(g3));
  CHECK(!graph_digest(g1).empty());
}

TEST_CASE("sidecar round trip") {
  NamedSubobjects named;
  named.cycles["C_2"] = {"0,0", "1,0", "1,1", "0,1"};
  named.paths["gamma"] = {"a", "b", "c"};
  std::string text = serialize_sidecar(named);
  NamedSubobjects back = parse_sidecar(text);
  CHECK(back.cycles == named.cycles);
  CHECK(back.paths == named.paths);
  CHECK(serialize_sidecar(back) == text);
}

TEST_CASE("sidecar parse rejects malformed documents") {
  CHECK_THROWS_AS(parse_sidecar("not json"), GraphError);
  CHECK_THROWS_AS(parse_sidecar("{\"cycles\": 3}"), GraphError);
  // missing sections default to empty
  NamedSubobjects only_cycles = parse_sidecar("{\"cycles\": {}}");
  CHECK(only_cycles.cycles.empty());
  CHECK(only_cycles.paths.empty());
}
