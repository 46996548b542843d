#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hyperchord/metric_graph.hpp"

namespace hyperchord {

// A simple cycle with its intrinsic length metric d_C. Canonical form:
// rotated so vertices[0] is the minimum id, oriented toward the smaller of
// its two cycle neighbors.
class Cycle {
 public:
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeId>& arcs() const { return arcs_; }
  const Rat& total_length() const { return length_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  // Arc-length coordinate of the i-th cycle vertex, in [0, L(C)).
  const Rat& position(int i) const { return positions_[i]; }
  std::optional<int> index_of(VertexId v) const;
  bool contains_vertex(VertexId v) const { return index_of(v).has_value(); }
  bool contains_arc(VertexId a, VertexId b) const;

  // Circle metric between arc-length coordinates.
  Rat distance(const Rat& s, const Rat& t) const;
  Rat vertex_pair_distance(int i, int j) const;

  friend Cycle cycle_from_vertices(const MetricGraph& g,
                                   const std::vector<VertexId>& sequence);

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> arcs_;  // arcs_[i] joins vertices_[i] and vertices_[i+1 mod n]
  std::vector<Rat> positions_;
  Rat length_;
};

// Validates that the sequence is a simple closed walk on existing edges and
// returns the canonical cycle. The sequence may or may not repeat the first
// vertex at the end.
Cycle cycle_from_vertices(const MetricGraph& g,
                          const std::vector<VertexId>& sequence);

struct CycleBudget {
  long max_count = 1000000;
  std::optional<Rat> max_length;  // enumeration scope, not a truncation
  std::optional<std::vector<VertexId>> restrict_to;
  long max_steps = 200000000;  // search-node guard; exhaustion flags truncation
};

struct CycleStats {
  long emitted = 0;
  long steps = 0;
  bool truncated = false;  // count or step budget hit; length cap is scope
};

// Streams simple cycles in canonical deterministic order (increasing root
// vertex, then lexicographic). The sink returns false to stop early; an early
// stop does not by itself mark truncation.
CycleStats for_each_cycle(const DistanceOracle& oracle,
                          const CycleBudget& budget,
                          const std::function<bool(Cycle&&)>& sink);

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool truncated = false;
  CycleStats stats;
};

CycleEnumeration enumerate_cycles(const DistanceOracle& oracle,
                                  const CycleBudget& budget);

}  // namespace hyperchord
