#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hyperchord/checkers.hpp"
#include "hyperchord/families.hpp"
#include "hyperchord/graph_io.hpp"
#include "hyperchord/report.hpp"

namespace {

using namespace hyperchord;
using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitInconclusive = 4;

int default_threads() {
  if (const char* env = std::getenv("HYPERCHORD_THREADS")) {
    int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

Rat parse_rat(const std::string& text, const char* flag) {
  try {
    return rat_from_string(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(std::string(flag) + ": not a rational: " + text);
  }
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += " ";
    out += argv[i];
  }
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit(const MetricGraph& g, const std::string& command, json result,
          json budgets, const Timer& timer) {
  std::cout << make_report(g, command, std::move(result), std::move(budgets),
                           timer.ms())
                   .dump(2)
            << "\n";
}

int outcome_exit(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: return kExitHolds;
    case Outcome::Fails: return kExitFails;
    case Outcome::Inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

std::vector<Cycle> sidecar_cycles(const MetricGraph& g,
                                  const std::string& path) {
  auto named = load_sidecar_file(path);
  std::vector<Cycle> cycles;
  for (const auto& [name, vertex_names] : named.cycles) {
    std::vector<VertexId> ids;
    for (const auto& vn : vertex_names) ids.push_back(g.require_vertex(vn));
    cycles.push_back(cycle_from_vertices(g, ids));
  }
  return cycles;
}

struct GenerateArgs {
  std::string family;
  std::string out;
  int n = 6;
  int chain = 1;
  int extra_levels = 0;
  std::int64_t margin = 0;
  int a = 2, b = 2;
  std::uint64_t seed = 1;
};

int run_generate(const GenerateArgs& args, const std::string& command,
                 const Timer& timer) {
  FamilyOutput out = [&] {
    if (args.family == "zxp3") return gen_zxp3(args.n);
    if (args.family == "quadrant") return gen_quadrant(args.n);
    if (args.family == "mod4") return gen_mod4(args.n, args.chain);
    if (args.family == "mod8") return gen_mod8(args.n, args.chain);
    if (args.family == "hyperapprox")
      return gen_hyperapprox_line(args.n, args.extra_levels, args.margin);
    if (args.family == "cycle") return gen_cycle(args.n);
    if (args.family == "grid") return gen_grid(args.a, args.b);
    if (args.family == "complete") return gen_complete(args.n);
    if (args.family == "tree") return gen_tree(args.n, args.seed);
    throw CLI::ValidationError("unknown family: " + args.family);
  }();

  {
    std::ofstream file(args.out);
    if (!file) throw CLI::ValidationError("cannot write " + args.out);
    file << serialize_graph(out.graph);
  }
  std::string sidecar_path;
  if (!out.named.cycles.empty() || !out.named.paths.empty()) {
    sidecar_path = args.out + ".sidecar.json";
    std::ofstream file(sidecar_path);
    file << serialize_sidecar(out.named);
  }
  json result{{"kind", "generated"},
              {"family", args.family},
              {"graph_file", args.out},
              {"named_cycles", static_cast<long>(out.named.cycles.size())},
              {"named_paths", static_cast<long>(out.named.paths.size())}};
  if (!sidecar_path.empty()) result["sidecar_file"] = sidecar_path;
  emit(out.graph, command, std::move(result), json::object(), timer);
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic toolkit for chordality and hyperbolicity of finite "
      "metric graphs"};
  app.require_subcommand(1);
  const std::string command = join_args(argc, argv);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "generate a graph family");
  generate->add_option("family", gen.family,
                       "zxp3|quadrant|mod4|mod8|hyperapprox|cycle|grid|"
                       "complete|tree")
      ->required();
  generate->add_option("--out", gen.out, "output graph file")->required();
  generate->add_option("--n", gen.n, "size parameter");
  generate->add_option("--chain", gen.chain, "number of chained blocks");
  generate->add_option("--extra-levels", gen.extra_levels,
                       "extra coarse levels (hyperapprox)");
  generate->add_option("--margin", gen.margin, "window margin (hyperapprox)");
  generate->add_option("--a", gen.a, "grid width");
  generate->add_option("--b", gen.b, "grid height");
  generate->add_option("--seed", gen.seed, "random tree seed");

  std::string graph_file, method = "rips", resolution = "1/4";
  long geodesic_cap = 64, pair_cap = -1, triple_cap = -1, combo_cap = 4096,
       corner_cap = -1;
  bool no_midpoints = false;
  int threads = default_threads();
  auto* delta = app.add_subcommand("delta", "estimate hyperbolicity");
  delta->add_option("graph", graph_file, "graph file")->required();
  delta->add_option("--method", method, "fourpoint|rips");
  delta->add_option("--resolution", resolution, "sampling resolution h");
  delta->add_option("--geodesic-cap", geodesic_cap, "geodesics per pair");
  delta->add_option("--pair-cap", pair_cap, "bigon corner pairs (-1 = all)");
  delta->add_option("--triple-cap", triple_cap, "corner triples (-1 = all)");
  delta->add_option("--combo-cap", combo_cap, "combinations per triple");
  delta->add_option("--corner-cap", corner_cap,
                    "strided corner subsample (-1 = all)");
  delta->add_flag("--no-midpoints", no_midpoints,
                  "vertex corners only (skip edge midpoints)");
  delta->add_option("--threads", threads, "worker threads");

  std::string check_graph, property, k_text, m_text, eps_text, cycle_file,
      max_length_text, check_resolution = "1/4";
  long max_cycles = 1000000, max_steps = 200000000;
  long t_triple_cap = 200, t_pair_cap = 400, t_geodesic_cap = 16,
       t_combo_cap = 64;
  bool t_midpoints = false;
  auto* check = app.add_subcommand("check", "decide a chordality property");
  check->add_option("graph", check_graph, "graph file")->required();
  check->add_option("--property", property,
                    "edge-chordal|path-chordal|densely-path-chordal|"
                    "triangle-chordal")
      ->required();
  check->add_option("--k", k_text, "cycle-length threshold k")->required();
  check->add_option("--m", m_text, "shortcut-length bound m");
  check->add_option("--eps", eps_text, "density radius eps");
  check->add_option("--cycle-file", cycle_file,
                    "check only the named cycles in this sidecar file");
  check->add_option("--max-cycles", max_cycles, "cycle count budget");
  check->add_option("--max-length", max_length_text,
                    "cycle length cap (scope)");
  check->add_option("--max-steps", max_steps, "search step budget");
  check->add_option("--triple-cap", t_triple_cap, "triangle triples");
  check->add_option("--pair-cap", t_pair_cap, "triangle bigon pairs");
  check->add_option("--geodesic-cap", t_geodesic_cap, "geodesics per pair");
  check->add_option("--combo-cap", t_combo_cap, "combinations per triple");
  check->add_option("--resolution", check_resolution,
                    "triangle sampling resolution h");
  check->add_flag("--midpoints", t_midpoints,
                  "include edge-midpoint triangle corners");

  std::string verify_graph, v_k, v_m, v_eps, v_slack = "1/8",
                            v_resolution = "1/4", v_max_length;
  std::vector<std::string> theorems;
  long v_max_cycles = 200000, v_max_steps = 200000000, v_sample_cap = 2000;
  long v_geodesic_cap = 16, v_pair_cap = 200, v_triple_cap = 100,
       v_combo_cap = 64, v_corner_cap = -1;
  long vt_triple_cap = 100, vt_pair_cap = 200, vt_geodesic_cap = 8,
       vt_combo_cap = 16;
  bool v_no_retry = false, v_no_midpoints = false;
  int v_threads = default_threads();
  auto* verify = app.add_subcommand("verify", "verify theorem implications");
  verify->add_option("graph", verify_graph, "graph file")->required();
  verify->add_option("--theorem", theorems, "2.3|2.5|2.8|3.2|all");
  verify->add_option("--k", v_k, "k for implications 2.3/2.5");
  verify->add_option("--m", v_m, "m for implications 2.3/2.5");
  verify->add_option("--eps", v_eps, "eps for implication 2.5");
  verify->add_option("--slack", v_slack, "extra slack added to delta+");
  verify->add_option("--max-cycles", v_max_cycles, "cycle count budget");
  verify->add_option("--max-length", v_max_length, "cycle length cap (scope)");
  verify->add_option("--max-steps", v_max_steps, "search step budget");
  verify->add_option("--sample-cap", v_sample_cap,
                     "qualifying-cycle sample for delta-derived consequents");
  verify->add_option("--resolution", v_resolution, "rips resolution h");
  verify->add_option("--geodesic-cap", v_geodesic_cap, "rips geodesics/pair");
  verify->add_option("--pair-cap", v_pair_cap, "rips bigon pairs");
  verify->add_option("--triple-cap", v_triple_cap, "rips corner triples");
  verify->add_option("--combo-cap", v_combo_cap, "rips combos per triple");
  verify->add_option("--corner-cap", v_corner_cap,
                     "rips strided corner subsample (-1 = all)");
  verify->add_option("--triangle-triple-cap", vt_triple_cap,
                     "triangle-check triples");
  verify->add_option("--triangle-pair-cap", vt_pair_cap,
                     "triangle-check bigon pairs");
  verify->add_option("--triangle-geodesic-cap", vt_geodesic_cap,
                     "triangle-check geodesics per pair");
  verify->add_option("--triangle-combo-cap", vt_combo_cap,
                     "triangle-check combos per triple");
  verify->add_flag("--no-retry", v_no_retry,
                   "disable the refinement retry on failing consequents");
  verify->add_flag("--no-midpoints", v_no_midpoints,
                   "rips vertex corners only");
  verify->add_option("--threads", v_threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Timer timer;
  try {
    if (generate->parsed()) return run_generate(gen, command, timer);

    if (delta->parsed()) {
      MetricGraph g = load_graph_file(graph_file);
      DistanceOracle oracle(g);
      if (method == "fourpoint") {
        auto result = four_point_delta(oracle);
        emit(g, command, result_json(result, g), json::object(), timer);
        return kExitHolds;
      }
      if (method != "rips")
        throw CLI::ValidationError("unknown method: " + method);
      RipsBudget budget;
      budget.h = parse_rat(resolution, "--resolution");
      budget.geodesic_cap = geodesic_cap;
      budget.pair_cap = pair_cap;
      budget.triple_cap = triple_cap;
      budget.combo_cap = combo_cap;
      budget.corner_cap = corner_cap;
      budget.midpoint_corners = !no_midpoints;
      budget.threads = threads;
      auto result = rips_delta(oracle, budget);
      json budgets{{"h", rat_json(budget.h)},
                   {"geodesic_cap", budget.geodesic_cap},
                   {"pair_cap", budget.pair_cap},
                   {"triple_cap", budget.triple_cap},
                   {"combo_cap", budget.combo_cap},
                   {"corner_cap", budget.corner_cap},
                   {"midpoint_corners", budget.midpoint_corners},
                   {"threads", budget.threads}};
      emit(g, command, result_json(result), std::move(budgets), timer);
      return kExitHolds;
    }

    if (check->parsed()) {
      MetricGraph g = load_graph_file(check_graph);
      DistanceOracle oracle(g);
      Rat k = parse_rat(k_text, "--k");
      std::optional<Rat> m, eps;
      if (!m_text.empty()) m = parse_rat(m_text, "--m");
      if (!eps_text.empty()) eps = parse_rat(eps_text, "--eps");

      if (property == "triangle-chordal") {
        if (!eps || !m)
          throw CLI::ValidationError(
              "triangle-chordal requires --eps and --m");
        TriangleBudget budget;
        budget.triple_cap = t_triple_cap;
        budget.pair_cap = t_pair_cap;
        budget.geodesic_cap = t_geodesic_cap;
        budget.combo_cap = t_combo_cap;
        budget.h = parse_rat(check_resolution, "--resolution");
        budget.midpoint_corners = t_midpoints;
        auto verdict = check_triangle_chordal(oracle, *eps, k, *m, budget);
        json budgets{{"triple_cap", budget.triple_cap},
                     {"pair_cap", budget.pair_cap},
                     {"geodesic_cap", budget.geodesic_cap},
                     {"combo_cap", budget.combo_cap},
                     {"h", rat_json(budget.h)}};
        emit(g, command, result_json(verdict), std::move(budgets), timer);
        return outcome_exit(verdict.outcome);
      }

      CycleBudget budget;
      budget.max_count = max_cycles;
      budget.max_steps = max_steps;
      if (!max_length_text.empty())
        budget.max_length = parse_rat(max_length_text, "--max-length");
      std::optional<std::vector<Cycle>> named;
      if (!cycle_file.empty()) named = sidecar_cycles(g, cycle_file);

      Verdict verdict;
      if (property == "edge-chordal") {
        if (!m) throw CLI::ValidationError("edge-chordal requires --m");
        verdict = named ? check_edge_chordal_on(oracle, k, *m, *named)
                        : check_edge_chordal(oracle, k, *m, budget);
      } else if (property == "path-chordal") {
        verdict = named ? check_path_chordal_on(oracle, k, m, *named)
                        : check_path_chordal(oracle, k, m, budget);
      } else if (property == "densely-path-chordal") {
        if (!eps)
          throw CLI::ValidationError("densely-path-chordal requires --eps");
        verdict = named
                      ? check_densely_path_chordal_on(oracle, *eps, k, m,
                                                      *named)
                      : check_densely_path_chordal(oracle, *eps, k, m, budget);
      } else {
        throw CLI::ValidationError("unknown property: " + property);
      }
      json budgets{{"max_cycles", budget.max_count},
                   {"max_steps", budget.max_steps}};
      if (budget.max_length) budgets["max_length"] = rat_json(*budget.max_length);
      if (named) budgets["cycle_file"] = cycle_file;
      emit(g, command, result_json(verdict, g), std::move(budgets), timer);
      return outcome_exit(verdict.outcome);
    }

    // verify
    MetricGraph g = load_graph_file(verify_graph);
    DistanceOracle oracle(g);
    VerifyBudgets budgets;
    budgets.cycles.max_count = v_max_cycles;
    budgets.cycles.max_steps = v_max_steps;
    if (!v_max_length.empty())
      budgets.cycles.max_length = parse_rat(v_max_length, "--max-length");
    budgets.rips.h = parse_rat(v_resolution, "--resolution");
    budgets.rips.geodesic_cap = v_geodesic_cap;
    budgets.rips.pair_cap = v_pair_cap;
    budgets.rips.triple_cap = v_triple_cap;
    budgets.rips.combo_cap = v_combo_cap;
    budgets.rips.corner_cap = v_corner_cap;
    budgets.rips.midpoint_corners = !v_no_midpoints;
    budgets.rips.threads = v_threads;
    if (!v_no_retry) {
      RipsBudget retry = budgets.rips;
      retry.geodesic_cap *= 2;
      retry.pair_cap = retry.pair_cap < 0 ? -1 : retry.pair_cap * 2;
      retry.triple_cap = retry.triple_cap < 0 ? -1 : retry.triple_cap * 2;
      retry.h = budgets.rips.h / 2;
      budgets.rips_retry = retry;
    }
    budgets.triangles.triple_cap = vt_triple_cap;
    budgets.triangles.pair_cap = vt_pair_cap;
    budgets.triangles.geodesic_cap = vt_geodesic_cap;
    budgets.triangles.combo_cap = vt_combo_cap;
    budgets.slack = parse_rat(v_slack, "--slack");
    budgets.sample_cap = v_sample_cap;
    if (!v_k.empty()) budgets.k = parse_rat(v_k, "--k");
    if (!v_m.empty()) budgets.m = parse_rat(v_m, "--m");
    if (!v_eps.empty()) budgets.eps = parse_rat(v_eps, "--eps");

    std::vector<std::string> requested;
    for (const auto& t : theorems) {
      if (t == "all") continue;
      if (t != "2.3" && t != "2.5" && t != "2.8" && t != "3.2")
        throw CLI::ValidationError("unknown theorem: " + t);
      requested.push_back(t);
    }
    auto report = verify_theorems(oracle, budgets, requested);
    json budget_json{{"max_cycles", budgets.cycles.max_count},
                     {"sample_cap", budgets.sample_cap},
                     {"slack", rat_json(budgets.slack)},
                     {"rips_h", rat_json(budgets.rips.h)},
                     {"threads", v_threads}};
    emit(g, command, result_json(report), std::move(budget_json), timer);
    for (const auto& imp : report.implications)
      if (imp.outcome == Outcome::Fails) return kExitFails;
    if (report.any_inconclusive) return kExitInconclusive;
    return kExitHolds;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code == GraphError::Code::DisconnectedGraph ? kExitDisconnected
                                                         : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
