#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperchord/cycles.hpp"
#include "hyperchord/hyperbolicity.hpp"
#include "hyperchord/shortcuts.hpp"

namespace hyperchord {

struct ChordalityParams {
  Rat k;                // cycle-length threshold, >= 0
  std::optional<Rat> m;    // shortcut-length bound
  std::optional<Rat> eps;  // density radius, > 0 when present
};

enum class Outcome { Holds, Fails, Inconclusive };

std::string outcome_name(Outcome o);

// What the verdict actually quantified over. A Holds is always relative to
// this scope; Inconclusive means a budget stopped enumeration mid-scope.
struct ScopeRecord {
  long cycles_examined = 0;   // enumerated cycles, qualifying or not
  long qualifying = 0;        // cycles with L(C) >= k (within any length cap)
  std::optional<Rat> max_length;  // enumeration length cap, when set
  std::optional<long> sample_cap;  // deliberate prefix-sample size, when set
  bool truncated = false;     // count/step budget exhausted
};

// Per-cycle evidence (on Holds, a bounded sample) or the failing witness.
struct CycleEvidence {
  std::vector<VertexId> cycle_vertices;
  Rat cycle_length;
  std::optional<VertexId> p, q;        // shortcut endpoints when one was found
  std::optional<Rat> shortcut_length;
  std::optional<DensityReport> density;
};

struct Verdict {
  Outcome outcome = Outcome::Holds;
  std::string property;  // "edge-chordal" etc., with parameters
  ScopeRecord scope;
  std::vector<CycleEvidence> sample;  // bounded Holds evidence
  std::optional<CycleEvidence> witness;
  std::string note;
};

// How many Holds evidences to retain in the verdict sample.
inline constexpr long kEvidenceSample = 8;

// (k,m)-edge-chordal: every qualifying cycle has a chord of G with length
// <= m that beats d_C between its endpoints.
Verdict check_edge_chordal(const DistanceOracle& oracle, const Rat& k,
                           const Rat& m, const CycleBudget& budget);

// (k, bound)-path-chordal; bound absent is the unbounded reading. Shortcuts
// here are not necessarily strict: any pair with d_G(p,q) < d_C(p,q) counts.
Verdict check_path_chordal(const DistanceOracle& oracle, const Rat& k,
                           const std::optional<Rat>& bound,
                           const CycleBudget& budget);

// eps-densely (k,m)-path-chordal (m absent: Definition 2.7 variant).
Verdict check_densely_path_chordal(const DistanceOracle& oracle, const Rat& eps,
                                   const Rat& k, const std::optional<Rat>& m,
                                   const CycleBudget& budget);

// Same checks over an explicit cycle list (e.g. named cycles from a sidecar
// file); scope records exactly that list.
Verdict check_edge_chordal_on(const DistanceOracle& oracle, const Rat& k,
                              const Rat& m, const std::vector<Cycle>& cycles);
Verdict check_path_chordal_on(const DistanceOracle& oracle, const Rat& k,
                              const std::optional<Rat>& bound,
                              const std::vector<Cycle>& cycles);
Verdict check_densely_path_chordal_on(const DistanceOracle& oracle,
                                      const Rat& eps, const Rat& k,
                                      const std::optional<Rat>& m,
                                      const std::vector<Cycle>& cycles);

struct TriangleBudget {
  long triple_cap = 200;     // corner triples (bigons counted separately)
  long pair_cap = 400;       // corner pairs examined as bigons
  long geodesic_cap = 16;    // per corner pair
  long combo_cap = 64;       // geodesic combinations per triple
  Rat h = Rat(1, 4);
  bool midpoint_corners = false;
};

struct TriangleEvidence {
  std::vector<std::string> corners;
  Rat total_length;
  DensityReport density;
};

struct TriangleVerdict {
  Outcome outcome = Outcome::Holds;
  std::string property;
  long triangles_examined = 0;
  long qualifying = 0;
  bool truncated = false;
  std::vector<TriangleEvidence> sample;
  std::optional<TriangleEvidence> witness;
  std::string note;
};

// eps-densely (k,m)-path-chordal on the triangles: every examined geodesic
// triangle/bigon with L(T) >= k has shortcut positions eps-dense in (T,d_T).
TriangleVerdict check_triangle_chordal(const DistanceOracle& oracle,
                                       const Rat& eps, const Rat& k,
                                       const Rat& m,
                                       const TriangleBudget& budget);

struct VerifyBudgets {
  CycleBudget cycles;
  RipsBudget rips;
  // second attempt budget when a delta-dependent consequent fails (the Rips
  // estimate is only a lower bound for delta(G), so a failure may just mean
  // the estimate was too small)
  std::optional<RipsBudget> rips_retry;
  TriangleBudget triangles;
  Rat slack = Rat(1, 8);  // delta_plus = delta_low + margin + slack
  // parameters for implications (a)/(b); defaulted when absent
  std::optional<Rat> k, m, eps;
  // delta-dependent consequents check a deterministic prefix sample of this
  // many qualifying cycles instead of demanding exhaustive enumeration
  long sample_cap = 2000;
};

struct Implication {
  std::string id;  // "2.3", "2.5", "2.8", "3.2"
  std::string statement;
  Outcome outcome = Outcome::Holds;  // Holds = Pass
  bool vacuous = false;
  std::string detail;
};

struct ImplicationReport {
  RipsEstimate rips;
  Rat delta_plus;
  std::vector<Implication> implications;
  bool all_pass = true;
  bool any_inconclusive = false;
};

// Runs the four theorem-level implications; requested ids from
// {"2.3","2.5","2.8","3.2"} (empty set means all).
ImplicationReport verify_theorems(const DistanceOracle& oracle,
                                  const VerifyBudgets& budgets,
                                  const std::vector<std::string>& theorems = {});

}  // namespace hyperchord
