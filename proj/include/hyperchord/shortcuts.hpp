#pragma once

#include <optional>
#include <vector>

#include "hyperchord/cycles.hpp"
#include "hyperchord/triangles.hpp"

namespace hyperchord {

struct ShortcutCertificate {
  VertexId p = -1;
  VertexId q = -1;
  GraphPath path;
  Rat length;
  bool strict = false;
};

// Shortest strict p-q path: all other cycle vertices and all cycle arcs are
// removed before searching. Returns a certificate iff the result is shorter
// than d_C(p, q) and within max_len when given.
std::optional<ShortcutCertificate> strict_shortcut(
    const DistanceOracle& oracle, const Cycle& cycle, VertexId p, VertexId q,
    const std::optional<Rat>& max_len = std::nullopt);

// All vertices of the cycle that admit a strict shortcut, each with one
// witnessing certificate (shortest; deterministic tie-break).
std::vector<std::pair<VertexId, ShortcutCertificate>> shortcut_vertices(
    const DistanceOracle& oracle, const Cycle& cycle,
    const std::optional<Rat>& max_len = std::nullopt);

struct DensityReport {
  std::vector<Rat> positions;  // sorted arc-length coordinates
  Rat max_gap;
  bool dense = false;
  Rat eps;
};

// Exact open-eps density on (C, d_C): dense iff the maximal cyclic gap is
// < 2*eps. The empty set has gap L(C) and is never dense.
DensityReport density_check(const Cycle& cycle, std::vector<Rat> positions,
                            const Rat& eps);

struct DensityEvidence {
  bool dense = false;
  std::vector<std::pair<VertexId, ShortcutCertificate>> certificates;
  DensityReport report;
};

// Density decision with early exit: scans cycle vertices in arc order and
// stops as soon as the collected shortcut vertices are eps-dense.
DensityEvidence densely_shortcut_evidence(
    const DistanceOracle& oracle, const Cycle& cycle, const Rat& eps,
    const std::optional<Rat>& max_len = std::nullopt);

// Shortcut positions of a parametrized triangle under the circle metric d_T
// (non-strict shortcuts realized as shortest paths; zero-length shortcuts
// between twin positions count). Candidates are the triangle's stations plus
// an h-spaced grid.
std::vector<Rat> triangle_shortcut_positions(const DistanceOracle& oracle,
                                             const GeodesicTriangle& triangle,
                                             const Rat& m, const Rat& h);

// Cyclic gap statistics on a circle of the given circumference.
Rat max_cyclic_gap(std::vector<Rat> positions, const Rat& circumference);

}  // namespace hyperchord
