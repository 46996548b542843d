#include "hyperchord/checkers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hyperchord {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Evaluates one cycle: returns (ok, evidence). On ok the evidence documents
// the found shortcut/density; otherwise it describes the failure.
using CycleCheck = std::function<std::pair<bool, CycleEvidence>(const Cycle&)>;

CycleEvidence base_evidence(const Cycle& cycle) {
  CycleEvidence ev;
  ev.cycle_vertices = cycle.vertices();
  ev.cycle_length = cycle.total_length();
  return ev;
}

Verdict drive_enumerated(const DistanceOracle& oracle, const Rat& k,
                         const CycleBudget& budget, const CycleCheck& check,
                         std::optional<long> sample_cap = std::nullopt) {
  Verdict verdict;
  verdict.scope.max_length = budget.max_length;
  verdict.scope.sample_cap = sample_cap;
  // when sampling, bound the total emitted cycles too, so graphs whose short
  // cycles dominate the canonical order cannot stall the scan
  const long emitted_cap =
      sample_cap ? std::max<long>(50 * *sample_cap, 10000) : -1;

  auto stats = for_each_cycle(oracle, budget, [&](Cycle&& cycle) {
    ++verdict.scope.cycles_examined;
    if (cycle.total_length() >= k) {
      ++verdict.scope.qualifying;
      auto [ok, evidence] = check(cycle);
      if (!ok) {
        verdict.outcome = Outcome::Fails;
        verdict.witness = std::move(evidence);
        return false;
      }
      if (static_cast<long>(verdict.sample.size()) < kEvidenceSample)
        verdict.sample.push_back(std::move(evidence));
      if (sample_cap && verdict.scope.qualifying >= *sample_cap) return false;
    }
    return emitted_cap < 0 || verdict.scope.cycles_examined < emitted_cap;
  });

  verdict.scope.truncated = stats.truncated;
  if (verdict.outcome != Outcome::Fails && stats.truncated && !sample_cap)
    verdict.outcome = Outcome::Inconclusive;
  if (verdict.outcome == Outcome::Holds && verdict.scope.qualifying == 0)
    verdict.note = "vacuous: no qualifying cycle in scope";
  return verdict;
}

Verdict drive_list(const Rat& k, const std::vector<Cycle>& cycles,
                   const CycleCheck& check) {
  Verdict verdict;
  for (const Cycle& cycle : cycles) {
    ++verdict.scope.cycles_examined;
    if (cycle.total_length() < k) continue;
    ++verdict.scope.qualifying;
    auto [ok, evidence] = check(cycle);
    if (!ok) {
      verdict.outcome = Outcome::Fails;
      verdict.witness = std::move(evidence);
      return verdict;
    }
    if (static_cast<long>(verdict.sample.size()) < kEvidenceSample)
      verdict.sample.push_back(std::move(evidence));
  }
  if (verdict.scope.qualifying == 0)
    verdict.note = "vacuous: no qualifying cycle in scope";
  return verdict;
}

CycleCheck edge_chordal_check(const DistanceOracle& oracle, const Rat& m) {
  return [&oracle, m](const Cycle& cycle) {
    const MetricGraph& g = oracle.graph();
    const int n = cycle.size();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        VertexId u = cycle.vertices()[i], v = cycle.vertices()[j];
        auto e = g.find_edge(u, v);
        if (!e || cycle.contains_arc(u, v)) continue;
        const Rat& len = g.edge(*e).length;
        if (len <= m && len < cycle.vertex_pair_distance(i, j)) {
          CycleEvidence ev = base_evidence(cycle);
          ev.p = u;
          ev.q = v;
          ev.shortcut_length = len;
          return std::make_pair(true, std::move(ev));
        }
      }
    }
    return std::make_pair(false, base_evidence(cycle));
  };
}

CycleCheck path_chordal_check(const DistanceOracle& oracle,
                              const std::optional<Rat>& bound) {
  return [&oracle, bound](const Cycle& cycle) {
    const int n = cycle.size();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Rat& d =
            oracle.vertex_distance(cycle.vertices()[i], cycle.vertices()[j]);
        if (d >= cycle.vertex_pair_distance(i, j)) continue;
        if (bound && d > *bound) continue;
        CycleEvidence ev = base_evidence(cycle);
        ev.p = cycle.vertices()[i];
        ev.q = cycle.vertices()[j];
        ev.shortcut_length = d;
        return std::make_pair(true, std::move(ev));
      }
    }
    return std::make_pair(false, base_evidence(cycle));
  };
}

CycleCheck densely_check(const DistanceOracle& oracle, const Rat& eps,
                         const std::optional<Rat>& m) {
  return [&oracle, eps, m](const Cycle& cycle) {
    auto evidence = densely_shortcut_evidence(oracle, cycle, eps, m);
    CycleEvidence ev = base_evidence(cycle);
    if (!evidence.certificates.empty()) {
      const auto& [v, cert] = evidence.certificates.front();
      ev.p = cert.p;
      ev.q = cert.q;
      ev.shortcut_length = cert.length;
    }
    ev.density = std::move(evidence.report);
    return std::make_pair(evidence.dense, std::move(ev));
  };
}

std::string param_string(std::initializer_list<std::pair<const char*, std::string>> ps) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& [name, value] : ps) {
    if (!first) out << ", ";
    first = false;
    out << name << "=" << value;
  }
  out << ")";
  return out.str();
}

}  // namespace

Verdict check_edge_chordal(const DistanceOracle& oracle, const Rat& k,
                           const Rat& m, const CycleBudget& budget) {
  Verdict v = drive_enumerated(oracle, k, budget, edge_chordal_check(oracle, m));
  v.property = "edge-chordal" + param_string({{"k", rat_to_string(k)},
                                              {"m", rat_to_string(m)}});
  return v;
}

Verdict check_edge_chordal_on(const DistanceOracle& oracle, const Rat& k,
                              const Rat& m, const std::vector<Cycle>& cycles) {
  Verdict v = drive_list(k, cycles, edge_chordal_check(oracle, m));
  v.property = "edge-chordal" + param_string({{"k", rat_to_string(k)},
                                              {"m", rat_to_string(m)}});
  return v;
}

Verdict check_path_chordal(const DistanceOracle& oracle, const Rat& k,
                           const std::optional<Rat>& bound,
                           const CycleBudget& budget) {
  Verdict v =
      drive_enumerated(oracle, k, budget, path_chordal_check(oracle, bound));
  v.property = "path-chordal" +
               param_string({{"k", rat_to_string(k)},
                             {"bound", bound ? rat_to_string(*bound) : "none"}});
  return v;
}

Verdict check_path_chordal_on(const DistanceOracle& oracle, const Rat& k,
                              const std::optional<Rat>& bound,
                              const std::vector<Cycle>& cycles) {
  Verdict v = drive_list(k, cycles, path_chordal_check(oracle, bound));
  v.property = "path-chordal" +
               param_string({{"k", rat_to_string(k)},
                             {"bound", bound ? rat_to_string(*bound) : "none"}});
  return v;
}

Verdict check_densely_path_chordal(const DistanceOracle& oracle, const Rat& eps,
                                   const Rat& k, const std::optional<Rat>& m,
                                   const CycleBudget& budget) {
  Verdict v = drive_enumerated(oracle, k, budget, densely_check(oracle, eps, m));
  v.property = "densely-path-chordal" +
               param_string({{"eps", rat_to_string(eps)},
                             {"k", rat_to_string(k)},
                             {"m", m ? rat_to_string(*m) : "none"}});
  return v;
}

Verdict check_densely_path_chordal_on(const DistanceOracle& oracle,
                                      const Rat& eps, const Rat& k,
                                      const std::optional<Rat>& m,
                                      const std::vector<Cycle>& cycles) {
  Verdict v = drive_list(k, cycles, densely_check(oracle, eps, m));
  v.property = "densely-path-chordal" +
               param_string({{"eps", rat_to_string(eps)},
                             {"k", rat_to_string(k)},
                             {"m", m ? rat_to_string(*m) : "none"}});
  return v;
}

namespace {

// Sampled verdict variant used by verify_theorems for delta-derived
// consequents, where exhaustive enumeration is unattainable on grid-like
// graphs; the verdict records the deliberate prefix-sample scope.
Verdict sampled_densely(const DistanceOracle& oracle, const Rat& eps,
                        const Rat& k, const std::optional<Rat>& m,
                        CycleBudget budget, long sample_cap) {
  Verdict v = drive_enumerated(oracle, k, budget, densely_check(oracle, eps, m),
                               sample_cap);
  v.property = "densely-path-chordal" +
               param_string({{"eps", rat_to_string(eps)},
                             {"k", rat_to_string(k)},
                             {"m", m ? rat_to_string(*m) : "none"}});
  return v;
}

GraphPath trivial_path(const GraphPoint& at) {
  GraphPath path;
  path.start = at;
  path.end = at;
  if (at.is_vertex()) path.vertices = {at.vertex};
  path.length = 0;
  return path;
}

std::vector<GraphPath> triangle_geodesics(const DistanceOracle& oracle,
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

}  // namespace

TriangleVerdict check_triangle_chordal(const DistanceOracle& oracle,
                                       const Rat& eps, const Rat& k,
                                       const Rat& m,
                                       const TriangleBudget& budget) {
  if (eps <= 0 || budget.h <= 0)
    throw GraphError(GraphError::Code::InvalidPoint,
                     "eps and h must be positive");
  const MetricGraph& g = oracle.graph();
  TriangleVerdict verdict;
  verdict.property = "triangle-chordal" +
                     param_string({{"eps", rat_to_string(eps)},
                                   {"k", rat_to_string(k)},
                                   {"m", rat_to_string(m)}});

  std::vector<GraphPoint> corners;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    corners.push_back(GraphPoint::at_vertex(v));
  if (budget.midpoint_corners) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      corners.push_back(GraphPoint::on_edge(g, e, g.edge(e).length / 2));
  }
  const long num_corners = static_cast<long>(corners.size());

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < num_corners; ++i)
    for (int j = i + 1; j < num_corners; ++j) pairs.emplace_back(i, j);
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t idx = 0; idx < order.size(); ++idx) order[idx] = idx;
  std::vector<Rat> pair_dist(pairs.size());
  for (std::size_t idx = 0; idx < pairs.size(); ++idx)
    pair_dist[idx] = distance_points(oracle, corners[pairs[idx].first],
                                     corners[pairs[idx].second]);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return pair_dist[a] > pair_dist[b];
                   });

  auto examine = [&](const GeodesicTriangle& triangle,
                     const std::vector<const GraphPoint*>& cs) -> bool {
    ++verdict.triangles_examined;
    if (triangle.total_length() < k) return true;
    ++verdict.qualifying;
    auto positions = triangle_shortcut_positions(oracle, triangle, m, budget.h);
    DensityReport report;
    report.eps = eps;
    report.max_gap = max_cyclic_gap(positions, triangle.total_length());
    report.dense = !positions.empty() && report.max_gap < 2 * eps;
    report.positions = std::move(positions);
    TriangleEvidence evidence;
    for (const auto* c : cs) evidence.corners.push_back(c->describe(g));
    evidence.total_length = triangle.total_length();
    evidence.density = std::move(report);
    if (!evidence.density.dense) {
      verdict.outcome = Outcome::Fails;
      verdict.witness = std::move(evidence);
      return false;
    }
    if (static_cast<long>(verdict.sample.size()) < kEvidenceSample)
      verdict.sample.push_back(std::move(evidence));
    return true;
  };

  // bigons over the farthest corner pairs
  long examined_pairs = 0;
  for (std::size_t idx : order) {
    if (examined_pairs >= budget.pair_cap) {
      verdict.truncated = true;
      break;
    }
    ++examined_pairs;
    auto [i, j] = pairs[idx];
    auto geodesics = triangle_geodesics(oracle, corners[i], corners[j],
                                        budget.geodesic_cap, verdict.truncated);
    long combos = 0;
    for (std::size_t a = 0; a < geodesics.size(); ++a) {
      for (std::size_t b = a + 1; b < geodesics.size(); ++b) {
        if (++combos > budget.combo_cap) {
          verdict.truncated = true;
          break;
        }
        std::array<GraphPath, 3> sides = {geodesics[a],
                                          trivial_path(corners[j]),
                                          reverse_path(geodesics[b])};
        auto triangle = GeodesicTriangle::from_paths(oracle, std::move(sides));
        if (!examine(triangle, {&corners[i], &corners[j]})) return verdict;
      }
      if (combos > budget.combo_cap) break;
    }
  }

  // triples shortlisted from the farthest pairs
  long shortlist = 3;
  while ((shortlist + 1) * shortlist * (shortlist - 1) / 6 <=
             budget.triple_cap &&
         shortlist < num_corners)
    ++shortlist;
  if (shortlist < num_corners) verdict.truncated = true;
  std::vector<int> triple_corners;
  std::vector<char> chosen(num_corners, 0);
  for (std::size_t idx : order) {
    if (static_cast<long>(triple_corners.size()) >= shortlist) break;
    for (int c : {pairs[idx].first, pairs[idx].second}) {
      if (!chosen[c] && static_cast<long>(triple_corners.size()) < shortlist) {
        chosen[c] = 1;
        triple_corners.push_back(c);
      }
    }
  }
  std::sort(triple_corners.begin(), triple_corners.end());

  long triples_done = 0;
  const long nt = static_cast<long>(triple_corners.size());
  for (long x = 0; x < nt; ++x) {
    for (long y = x + 1; y < nt; ++y) {
      for (long z = y + 1; z < nt; ++z) {
        if (triples_done >= budget.triple_cap) {
          verdict.truncated = true;
          return verdict;
        }
        ++triples_done;
        const GraphPoint& a = corners[triple_corners[x]];
        const GraphPoint& b = corners[triple_corners[y]];
        const GraphPoint& c = corners[triple_corners[z]];
        auto ab = triangle_geodesics(oracle, a, b, budget.geodesic_cap,
                                     verdict.truncated);
        auto bc = triangle_geodesics(oracle, b, c, budget.geodesic_cap,
                                     verdict.truncated);
        auto ca = triangle_geodesics(oracle, c, a, budget.geodesic_cap,
                                     verdict.truncated);
        long combos = 0;
        for (const auto& s1 : ab) {
          for (const auto& s2 : bc) {
            for (const auto& s3 : ca) {
              if (++combos > budget.combo_cap) {
                verdict.truncated = true;
                goto next_triple;
              }
              auto triangle = GeodesicTriangle::from_paths(
                  oracle, std::array<GraphPath, 3>{s1, s2, s3});
              if (!examine(triangle, {&a, &b, &c})) return verdict;
            }
          }
        }
      next_triple:;
      }
    }
  }
  if (verdict.qualifying == 0)
    verdict.note = "vacuous: no qualifying triangle in scope";
  return verdict;
}

namespace {

Outcome consequent_outcome(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::Holds: return Outcome::Holds;
    case Outcome::Fails: return Outcome::Fails;
    case Outcome::Inconclusive: return Outcome::Inconclusive;
  }
  return Outcome::Inconclusive;
}

std::string scope_summary(const Verdict& v) {
  std::ostringstream out;
  out << v.scope.qualifying << " qualifying of " << v.scope.cycles_examined
      << " cycles";
  if (v.scope.sample_cap) out << " (prefix sample)";
  return out.str();
}

bool wanted(const std::vector<std::string>& theorems, const char* id) {
  if (theorems.empty()) return true;
  return std::find(theorems.begin(), theorems.end(), id) != theorems.end();
}

}  // namespace

ImplicationReport verify_theorems(const DistanceOracle& oracle,
                                  const VerifyBudgets& budgets,
                                  const std::vector<std::string>& theorems) {
  ImplicationReport report;
  report.rips = rips_delta(oracle, budgets.rips);
  report.delta_plus =
      report.rips.delta_low + report.rips.margin + budgets.slack;

  const Rat k0 = budgets.k.value_or(Rat(4));
  const Rat m0 = budgets.m.value_or(Rat(1));
  const Rat eps0 = budgets.eps.value_or(Rat(k0 / 2));

  auto push = [&](Implication imp) {
    if (imp.outcome == Outcome::Fails) report.all_pass = false;
    if (imp.outcome == Outcome::Inconclusive) {
      report.all_pass = false;
      report.any_inconclusive = true;
    }
    report.implications.push_back(std::move(imp));
  };

  if (wanted(theorems, "2.3")) {
    Implication imp;
    imp.id = "2.3";
    imp.statement = "edge-chordal(k,m) implies (k/2)-densely (k,m)-path-chordal";
    auto ante = check_edge_chordal(oracle, k0, m0, budgets.cycles);
    if (ante.outcome == Outcome::Fails) {
      imp.outcome = Outcome::Holds;
      imp.vacuous = true;
      imp.detail = "antecedent fails: " + ante.property;
    } else if (ante.outcome == Outcome::Inconclusive) {
      imp.outcome = Outcome::Inconclusive;
      imp.detail = "antecedent inconclusive: " + ante.property;
    } else {
      auto cons = check_densely_path_chordal(oracle, Rat(k0 / 2), k0, m0,
                                             budgets.cycles);
      imp.outcome = consequent_outcome(cons);
      imp.vacuous = ante.scope.qualifying == 0;
      imp.detail = cons.property + " over " + scope_summary(cons);
    }
    push(std::move(imp));
  }

  if (wanted(theorems, "2.5")) {
    Implication imp;
    imp.id = "2.5";
    imp.statement =
        "eps-densely (k,m)-path-chordal implies delta(G) <= max{k/4, eps+m}";
    auto ante =
        check_densely_path_chordal(oracle, eps0, k0, m0, budgets.cycles);
    if (ante.outcome == Outcome::Fails) {
      imp.outcome = Outcome::Holds;
      imp.vacuous = true;
      imp.detail = "antecedent fails: " + ante.property;
    } else if (ante.outcome == Outcome::Inconclusive) {
      imp.outcome = Outcome::Inconclusive;
      imp.detail = "antecedent inconclusive: " + ante.property;
    } else {
      Rat bound = std::max(Rat(k0 / 4), Rat(eps0 + m0));
      Rat upper = report.rips.delta_low + report.rips.margin;
      if (upper <= bound) {
        imp.outcome = Outcome::Holds;
      } else if (report.rips.delta_low <= bound) {
        // the certified lower bound fits; only the sampling margin straddles
        imp.outcome = Outcome::Inconclusive;
      } else {
        imp.outcome = Outcome::Fails;
      }
      imp.vacuous = ante.scope.qualifying == 0;
      imp.detail = "delta estimate " + rat_to_string(report.rips.delta_low) +
                   " + margin " + rat_to_string(report.rips.margin) +
                   " vs bound " + rat_to_string(bound);
    }
    push(std::move(imp));
  }

  // The 2.8/3.2 consequents depend on delta(G), for which the Rips estimate
  // is only a lower bound: a failing consequent may just mean the estimate
  // missed the true delta, so one refinement retry is attempted before a
  // failure is reported.
  auto refined = [&]() -> bool {
    if (!budgets.rips_retry) return false;
    auto retry = rips_delta(oracle, *budgets.rips_retry);
    if (retry.delta_low <= report.rips.delta_low) return false;
    report.rips = std::move(retry);
    report.delta_plus =
        report.rips.delta_low + report.rips.margin + budgets.slack;
    return true;
  };

  if (wanted(theorems, "2.8")) {
    auto run = [&](const Rat& dp) {
      return sampled_densely(oracle, Rat(2 * dp), Rat(4 * dp), std::nullopt,
                             budgets.cycles, budgets.sample_cap);
    };
    auto cons = run(report.delta_plus);
    bool retried = false;
    if (cons.outcome == Outcome::Fails && refined()) {
      cons = run(report.delta_plus);
      retried = true;
    }
    Implication imp;
    imp.id = "2.8";
    imp.statement =
        "delta-hyperbolic implies (2 delta)-densely (4 delta)-path-chordal";
    imp.outcome = consequent_outcome(cons);
    imp.vacuous = cons.scope.qualifying == 0;
    imp.detail = cons.property + " at delta+ = " +
                 rat_to_string(report.delta_plus) + " over " +
                 scope_summary(cons) + (retried ? "; after refinement" : "");
    push(std::move(imp));
  }

  if (wanted(theorems, "3.2")) {
    auto run = [&](const Rat& dp) {
      return check_triangle_chordal(oracle, Rat(3 * dp), Rat(8 * dp), dp,
                                    budgets.triangles);
    };
    auto cons = run(report.delta_plus);
    bool retried = false;
    if (cons.outcome == Outcome::Fails && refined()) {
      cons = run(report.delta_plus);
      retried = true;
    }
    Implication imp;
    imp.id = "3.2";
    imp.statement =
        "delta-hyperbolic implies (3 delta)-densely (8 delta, delta)-"
        "path-chordal on the triangles";
    imp.outcome = cons.outcome;
    imp.vacuous = cons.qualifying == 0;
    std::ostringstream detail;
    detail << cons.property << " at delta+ = "
           << rat_to_string(report.delta_plus) << " over " << cons.qualifying
           << " qualifying of " << cons.triangles_examined << " triangles"
           << (retried ? "; after refinement" : "");
    imp.detail = detail.str();
    push(std::move(imp));
  }

  return report;
}

}  // namespace hyperchord
