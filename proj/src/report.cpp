#include "hyperchord/report.hpp"

#include "hyperchord/graph_io.hpp"

namespace hyperchord {

using nlohmann::json;

json rat_json(const Rat& value) { return rat_to_string(value); }

namespace {

json names_json(const MetricGraph& g, const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(g.vertex_name(v));
  return out;
}

json density_json(const DensityReport& report) {
  json positions = json::array();
  for (const Rat& pos : report.positions) positions.push_back(rat_json(pos));
  return json{{"positions", std::move(positions)},
              {"max_gap", rat_json(report.max_gap)},
              {"dense", report.dense},
              {"eps", rat_json(report.eps)}};
}

json cycle_evidence_json(const CycleEvidence& ev, const MetricGraph& g) {
  json out{{"cycle", names_json(g, ev.cycle_vertices)},
           {"cycle_length", rat_json(ev.cycle_length)}};
  if (ev.p) out["p"] = g.vertex_name(*ev.p);
  if (ev.q) out["q"] = g.vertex_name(*ev.q);
  if (ev.shortcut_length)
    out["shortcut_length"] = rat_json(*ev.shortcut_length);
  if (ev.density) out["density"] = density_json(*ev.density);
  return out;
}

json triangle_evidence_json(const TriangleEvidence& ev) {
  return json{{"corners", ev.corners},
              {"total_length", rat_json(ev.total_length)},
              {"density", density_json(ev.density)}};
}

}  // namespace

json result_json(const FourPointResult& r, const MetricGraph& g) {
  json sums = json::array();
  for (const Rat& s : r.sums) sums.push_back(rat_json(s));
  json out{{"kind", "four_point"}, {"value", rat_json(r.value)}};
  if (r.witness[0] >= 0) {
    json witness = json::array();
    for (VertexId v : r.witness) witness.push_back(g.vertex_name(v));
    out["witness"] = std::move(witness);
    out["sums"] = std::move(sums);
  }
  return out;
}

json result_json(const RipsEstimate& r) {
  json out{{"kind", "rips"},
           {"delta_low", rat_json(r.delta_low)},
           {"margin", rat_json(r.margin)},
           {"truncated", r.truncated},
           {"bigons_examined", r.bigons_examined},
           {"triangles_examined", r.triangles_examined}};
  if (!r.witness_corners.empty()) {
    out["witness_corners"] = r.witness_corners;
    out["witness_pos"] = rat_json(r.witness_pos);
  }
  return out;
}

json result_json(const Verdict& v, const MetricGraph& g) {
  json scope{{"cycles_examined", v.scope.cycles_examined},
             {"qualifying", v.scope.qualifying},
             {"truncated", v.scope.truncated}};
  if (v.scope.max_length) scope["max_length"] = rat_json(*v.scope.max_length);
  if (v.scope.sample_cap) scope["sample_cap"] = *v.scope.sample_cap;
  json sample = json::array();
  for (const auto& ev : v.sample) sample.push_back(cycle_evidence_json(ev, g));
  json out{{"kind", "verdict"},
           {"property", v.property},
           {"outcome", outcome_name(v.outcome)},
           {"scope", std::move(scope)},
           {"sample", std::move(sample)}};
  if (v.witness) out["witness"] = cycle_evidence_json(*v.witness, g);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json result_json(const TriangleVerdict& v) {
  json sample = json::array();
  for (const auto& ev : v.sample) sample.push_back(triangle_evidence_json(ev));
  json out{{"kind", "triangle_verdict"},
           {"property", v.property},
           {"outcome", outcome_name(v.outcome)},
           {"triangles_examined", v.triangles_examined},
           {"qualifying", v.qualifying},
           {"truncated", v.truncated},
           {"sample", std::move(sample)}};
  if (v.witness) out["witness"] = triangle_evidence_json(*v.witness);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json result_json(const ImplicationReport& r) {
  json implications = json::array();
  for (const auto& imp : r.implications) {
    json item{{"id", imp.id},
              {"statement", imp.statement},
              {"outcome",
               imp.outcome == Outcome::Holds ? "Pass"
               : imp.outcome == Outcome::Fails ? "Fail"
                                               : "Inconclusive"},
              {"vacuous", imp.vacuous},
              {"detail", imp.detail}};
    implications.push_back(std::move(item));
  }
  return json{{"kind", "implications"},
              {"rips", result_json(r.rips)},
              {"delta_plus", rat_json(r.delta_plus)},
              {"implications", std::move(implications)},
              {"all_pass", r.all_pass},
              {"any_inconclusive", r.any_inconclusive}};
}

json make_report(const MetricGraph& g, const std::string& command, json result,
                 json budgets, long wall_time_ms) {
  return json{{"schema_version", kReportSchemaVersion},
              {"tool_version", kToolVersion},
              {"command", command},
              {"graph",
               {{"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"digest", graph_digest(g)}}},
              {"result", std::move(result)},
              {"budgets", std::move(budgets)},
              {"wall_time_ms", wall_time_ms}};
}

}  // namespace hyperchord
