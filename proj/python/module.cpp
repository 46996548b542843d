#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperchord/families.hpp"
#include "hyperchord/report.hpp"

namespace py = pybind11;
using namespace hyperchord;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items())
        out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

std::optional<Rat> opt_rat(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return rat_from_string(*s);
}

CycleBudget make_cycle_budget(long max_count,
                              const std::optional<std::string>& max_length) {
  CycleBudget budget;
  budget.max_count = max_count;
  budget.max_length = opt_rat(max_length);
  return budget;
}

// Owns the graph, its distance oracle, and any named subobjects together so
// python callers never juggle lifetimes.
class PyGraph {
 public:
  PyGraph(MetricGraph g, NamedSubobjects named)
      : graph_(std::move(g)), named_(std::move(named)), oracle_(graph_) {}

  // the oracle holds a reference into graph_, so instances must never be
  // moved or copied once constructed
  PyGraph(const PyGraph&) = delete;
  PyGraph& operator=(const PyGraph&) = delete;

  static std::unique_ptr<PyGraph> from_text(
      const std::string& text, const std::optional<std::string>& sidecar) {
    return std::make_unique<PyGraph>(
        parse_graph_string(text),
        sidecar ? parse_sidecar(*sidecar) : NamedSubobjects{});
  }

  long vertex_count() const { return graph_.vertex_count(); }
  long edge_count() const { return graph_.edge_count(); }

  std::vector<std::string> vertices() const {
    std::vector<std::string> names;
    for (VertexId v = 0; v < graph_.vertex_count(); ++v)
      names.push_back(graph_.vertex_name(v));
    return names;
  }

  std::string to_text() const { return serialize_graph(graph_); }
  std::string sidecar_text() const { return serialize_sidecar(named_); }
  std::string digest() const { return graph_digest(graph_); }

  std::string distance(const std::string& a, const std::string& b) const {
    return rat_to_string(oracle_.vertex_distance(graph_.require_vertex(a),
                                                 graph_.require_vertex(b)));
  }

  py::object four_point() const {
    return json_to_py(result_json(four_point_delta(oracle_), graph_));
  }

  py::object rips(const std::string& h, long pair_cap, long triple_cap,
                  long corner_cap, bool midpoints, int threads) const {
    RipsBudget budget;
    budget.h = rat_from_string(h);
    budget.pair_cap = pair_cap;
    budget.triple_cap = triple_cap;
    budget.corner_cap = corner_cap;
    budget.midpoint_corners = midpoints;
    budget.threads = threads;
    return json_to_py(result_json(rips_delta(oracle_, budget)));
  }

  py::object check_edge_chordal(const std::string& k, const std::string& m,
                                long max_count,
                                const std::optional<std::string>& max_length)
      const {
    return json_to_py(result_json(
        hyperchord::check_edge_chordal(oracle_, rat_from_string(k),
                                       rat_from_string(m),
                                       make_cycle_budget(max_count, max_length)),
        graph_));
  }

  py::object check_path_chordal(const std::string& k,
                                const std::optional<std::string>& bound,
                                long max_count,
                                const std::optional<std::string>& max_length)
      const {
    return json_to_py(result_json(
        hyperchord::check_path_chordal(oracle_, rat_from_string(k),
                                       opt_rat(bound),
                                       make_cycle_budget(max_count, max_length)),
        graph_));
  }

  py::object check_densely_path_chordal(
      const std::string& eps, const std::string& k,
      const std::optional<std::string>& m, long max_count,
      const std::optional<std::string>& max_length) const {
    return json_to_py(result_json(
        hyperchord::check_densely_path_chordal(
            oracle_, rat_from_string(eps), rat_from_string(k), opt_rat(m),
            make_cycle_budget(max_count, max_length)),
        graph_));
  }

  py::object check_triangle_chordal(const std::string& eps,
                                    const std::string& k,
                                    const std::string& m) const {
    return json_to_py(result_json(hyperchord::check_triangle_chordal(
        oracle_, rat_from_string(eps), rat_from_string(k), rat_from_string(m),
        TriangleBudget{})));
  }

  py::object verify(const std::vector<std::string>& theorems, long pair_cap,
                    long triple_cap, long corner_cap, long sample_cap,
                    int threads) const {
    VerifyBudgets budgets;
    budgets.rips.pair_cap = pair_cap;
    budgets.rips.triple_cap = triple_cap;
    budgets.rips.corner_cap = corner_cap;
    budgets.rips.threads = threads;
    budgets.sample_cap = sample_cap;
    return json_to_py(
        result_json(verify_theorems(oracle_, budgets, theorems)));
  }

 private:
  MetricGraph graph_;
  NamedSubobjects named_;
  DistanceOracle oracle_;
};

std::unique_ptr<PyGraph> generate(const std::string& family, int n, int chain,
                                  int extra_levels, std::int64_t margin, int b,
                                  std::uint64_t seed) {
  FamilyOutput out = [&] {
    if (family == "zxp3") return gen_zxp3(n);
    if (family == "quadrant") return gen_quadrant(n);
    if (family == "mod4") return gen_mod4(n, chain);
    if (family == "mod8") return gen_mod8(n, chain);
    if (family == "hyperapprox") return gen_hyperapprox_line(n, extra_levels,
                                                             margin);
    if (family == "cycle") return gen_cycle(n);
    if (family == "grid") return gen_grid(n, b);
    if (family == "complete") return gen_complete(n);
    if (family == "tree") return gen_tree(n, seed);
    throw std::invalid_argument("unknown family: " + family);
  }();
  return std::make_unique<PyGraph>(std::move(out.graph), std::move(out.named));
}

}  // namespace

PYBIND11_MODULE(_hyperchord, mod) {
  mod.doc() = "Exact chordality and hyperbolicity toolkit for metric graphs";
  mod.attr("__version__") = kToolVersion;

  py::register_exception<GraphError>(mod, "GraphError");

  py::class_<PyGraph>(mod, "Graph")
      .def_static("from_text", &PyGraph::from_text, py::arg("text"),
                  py::arg("sidecar") = std::nullopt)
      .def_property_readonly("vertex_count", &PyGraph::vertex_count)
      .def_property_readonly("edge_count", &PyGraph::edge_count)
      .def("vertices", &PyGraph::vertices)
      .def("to_text", &PyGraph::to_text)
      .def("sidecar_text", &PyGraph::sidecar_text)
      .def("digest", &PyGraph::digest)
      .def("distance", &PyGraph::distance, py::arg("a"), py::arg("b"))
      .def("four_point", &PyGraph::four_point)
      .def("rips", &PyGraph::rips, py::arg("h") = "1/4",
           py::arg("pair_cap") = -1, py::arg("triple_cap") = -1,
           py::arg("corner_cap") = -1, py::arg("midpoints") = true,
           py::arg("threads") = 1)
      .def("check_edge_chordal", &PyGraph::check_edge_chordal, py::arg("k"),
           py::arg("m"), py::arg("max_count") = 1000000,
           py::arg("max_length") = std::nullopt)
      .def("check_path_chordal", &PyGraph::check_path_chordal, py::arg("k"),
           py::arg("bound") = std::nullopt, py::arg("max_count") = 1000000,
           py::arg("max_length") = std::nullopt)
      .def("check_densely_path_chordal", &PyGraph::check_densely_path_chordal,
           py::arg("eps"), py::arg("k"), py::arg("m") = std::nullopt,
           py::arg("max_count") = 1000000, py::arg("max_length") = std::nullopt)
      .def("check_triangle_chordal", &PyGraph::check_triangle_chordal,
           py::arg("eps"), py::arg("k"), py::arg("m"))
      .def("verify", &PyGraph::verify,
           py::arg("theorems") = std::vector<std::string>{},
           py::arg("pair_cap") = 400, py::arg("triple_cap") = 200,
           py::arg("corner_cap") = -1, py::arg("sample_cap") = 2000,
           py::arg("threads") = 1);

  mod.def("generate", &generate, py::arg("family"), py::arg("n"),
          py::arg("chain") = 1, py::arg("extra_levels") = 0,
          py::arg("margin") = 0, py::arg("b") = 1, py::arg("seed") = 0);
}
