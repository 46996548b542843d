#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperchord/triangles.hpp"

namespace hyperchord {

struct FourPointResult {
  Rat value;
  std::array<VertexId, 4> witness{-1, -1, -1, -1};
  std::array<Rat, 3> sums;  // sorted descending
};

// Exact vertex-level four-point constant: max over quadruples of
// (S1 - S2)/2 for the sorted pairing sums.
FourPointResult four_point_delta(const DistanceOracle& oracle);

struct ThinnessResult {
  Rat defect;
  Rat witness_pos;
  GraphPoint witness_point;
};

// Max over sampled side points (h-grid plus all stations) of the exact
// distance to the union of the two other sides.
ThinnessResult thinness(const DistanceOracle& oracle,
                        const GeodesicTriangle& triangle, const Rat& h);

struct RipsBudget {
  Rat h = Rat(1, 4);
  long geodesic_cap = 64;     // per corner pair, split between lex orders
  long pair_cap = -1;         // bigon corner pairs examined (-1 = all)
  long triple_cap = -1;       // corner triples examined (-1 = all)
  long combo_cap = 4096;      // geodesic combinations per triple
  long corner_cap = -1;       // deterministic stride subsample of corners
  bool midpoint_corners = true;
  int threads = 1;
};

struct RipsEstimate {
  Rat delta_low;
  Rat margin;  // h/2 sampling gap
  bool truncated = false;
  long bigons_examined = 0;
  long triangles_examined = 0;
  std::vector<std::string> witness_corners;
  Rat witness_pos;
  std::optional<GraphPoint> witness_point;
};

// Certified lower bound for the Rips constant: maximizes thinness over
// corner pairs (bigons) and corner triples with corners at vertices and edge
// midpoints, over geodesic combinations up to the caps.
RipsEstimate rips_delta(const DistanceOracle& oracle, const RipsBudget& budget);

}  // namespace hyperchord
