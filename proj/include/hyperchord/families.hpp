#pragma once

#include <cstdint>
#include <string>

#include "hyperchord/graph_io.hpp"

namespace hyperchord {

// A generated graph plus the distinguished cycles/paths used by the
// constructions (named in the sidecar format).
struct FamilyOutput {
  MetricGraph graph;
  NamedSubobjects named;
};

// Z x P3 strip truncated to z in [-N, N]; unit lengths. Vertices "z,row"
// with row in {1,2,3}.
FamilyOutput gen_zxp3(int N);

// N x N quadrant truncated to [0,N]^2; unit lengths. Vertices "p,q". Named
// cycles "C_n" (2 <= n <= N): the geodesic square through (1,1), (n,1),
// (n,n), (1,n), of length 4n-4.
FamilyOutput gen_quadrant(int N);

// Mod-4 block family: vertical edges everywhere, full top/bottom rows, and
// interior horizontal edges (p-1,q)(p,q) only when p is odd and q = 0 mod 4,
// or p is even and q = 2 mod 4. Unit lengths. `chain` blocks hang off a unit
// path through each block's (0,0). Named cycle "perimeter" per block.
FamilyOutput gen_mod4(int n, int chain = 1);

// Mod-8 variant: same topology with offsets 0/4 mod 8 and edge lengths
// S_{p+q} = 2 - 2^{-(p+q)} on both the horizontal and vertical edge at
// (p,q); chain edges keep length 1.
FamilyOutput gen_mod8(int n, int chain = 1);

// S_e = sum_{k=0}^{e} 2^{-k} = 2 - 2^{-e}, exact.
Rat mod8_length(int e);

// Hyperbolic approximation of the real line with parameter r = 1/6, levels
// 0, -1, ..., -(n-1+extra_levels), centers restricted to the window
// [-margin, 6^n + margin]. Vertices "d:m" meaning center m*6^d at level -d.
// Horizontal edges join centers within 4*6^d at one level; radial edges join
// levels -d, -(d+1) when the finer ball is inside the coarser one. Unit
// lengths. Named cycle "C_n" and named path "gamma"; throws WindowTooSmall
// if any of their vertices fall outside the window.
FamilyOutput gen_hyperapprox_line(int n, int extra_levels, std::int64_t margin);

// Reference instances: unit cycle, grid, complete graph, and a reproducible
// random tree (vertex i attaches to a uniform earlier vertex).
FamilyOutput gen_cycle(int n);
FamilyOutput gen_grid(int a, int b);
FamilyOutput gen_complete(int n);
FamilyOutput gen_tree(int n, std::uint64_t seed);

}  // namespace hyperchord
