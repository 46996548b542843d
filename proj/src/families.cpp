#include "hyperchord/families.hpp"

#include <random>
#include <sstream>
#include <vector>

namespace hyperchord {

namespace {

using EdgeList = std::vector<MetricGraph::EdgeInput>;

std::string pair_name(int p, int q) {
  return std::to_string(p) + "," + std::to_string(q);
}

FamilyOutput finish(EdgeList edges, NamedSubobjects named = {}) {
  FamilyOutput out{MetricGraph::from_edges(edges), std::move(named)};
  return out;
}

}  // namespace

FamilyOutput gen_zxp3(int N) {
  if (N < 1)
    throw GraphError(GraphError::Code::ParseError, "zxp3 requires N >= 1");
  EdgeList edges;
  for (int z = -N; z <= N; ++z) {
    for (int j = 1; j <= 3; ++j) {
      if (j < 3) edges.emplace_back(pair_name(z, j), pair_name(z, j + 1), Rat(1));
      if (z < N) edges.emplace_back(pair_name(z, j), pair_name(z + 1, j), Rat(1));
    }
  }
  return finish(std::move(edges));
}

FamilyOutput gen_quadrant(int N) {
  if (N < 2)
    throw GraphError(GraphError::Code::ParseError, "quadrant requires N >= 2");
  EdgeList edges;
  for (int p = 0; p <= N; ++p) {
    for (int q = 0; q <= N; ++q) {
      if (p < N) edges.emplace_back(pair_name(p, q), pair_name(p + 1, q), Rat(1));
      if (q < N) edges.emplace_back(pair_name(p, q), pair_name(p, q + 1), Rat(1));
    }
  }
  NamedSubobjects named;
  for (int n = 2; n <= N; ++n) {
    std::vector<std::string> cycle;
    for (int p = 1; p < n; ++p) cycle.push_back(pair_name(p, 1));
    for (int q = 1; q < n; ++q) cycle.push_back(pair_name(n, q));
    for (int p = n; p > 1; --p) cycle.push_back(pair_name(p, n));
    for (int q = n; q > 1; --q) cycle.push_back(pair_name(1, q));
    named.cycles["C_" + std::to_string(n)] = std::move(cycle);
  }
  return finish(std::move(edges), std::move(named));
}

Rat mod8_length(int e) {
  return Rat(2) - Rat(BigInt(1), BigInt(1) << e);
}

namespace {

// Shared topology of the mod-4 / mod-8 block families: all vertical edges,
// full top and bottom rows, interior horizontal edges by the parity rule
// (p odd: q = off_odd mod M; p even: q = off_even mod M).
FamilyOutput gen_mod_family(int n, int chain, int modulus, int off_odd,
                            int off_even, bool weighted) {
  if (n < modulus || chain < 1)
    throw GraphError(GraphError::Code::ParseError,
                     "mod family requires n >= modulus and chain >= 1");
  auto length = [&](int p, int q) {
    return weighted ? mod8_length(p + q) : Rat(1);
  };
  EdgeList edges;
  NamedSubobjects named;
  auto vertex = [&](int block, int p, int q) {
    std::string name = pair_name(p, q);
    if (chain > 1) name = "g" + std::to_string(block) + ":" + name;
    return name;
  };
  for (int block = 0; block < chain; ++block) {
    if (block > 0)
      edges.emplace_back(vertex(block - 1, 0, 0), vertex(block, 0, 0), Rat(1));
    for (int p = 0; p <= n; ++p)
      for (int q = 1; q <= n; ++q)
        edges.emplace_back(vertex(block, p, q - 1), vertex(block, p, q),
                           length(p, q - 1));
    for (int p = 1; p <= n; ++p) {
      edges.emplace_back(vertex(block, p - 1, 0), vertex(block, p, 0),
                         length(p - 1, 0));
      edges.emplace_back(vertex(block, p - 1, n), vertex(block, p, n),
                         length(p - 1, n));
    }
    for (int p = 1; p <= n; ++p) {
      int offset = (p % 2 == 1) ? off_odd : off_even;
      for (int q = 1; q <= n - 1; ++q)
        if (q % modulus == offset)
          edges.emplace_back(vertex(block, p - 1, q), vertex(block, p, q),
                             length(p - 1, q));
    }
    std::vector<std::string> perimeter;
    for (int p = 0; p < n; ++p) perimeter.push_back(vertex(block, p, 0));
    for (int q = 0; q < n; ++q) perimeter.push_back(vertex(block, n, q));
    for (int p = n; p > 0; --p) perimeter.push_back(vertex(block, p, n));
    for (int q = n; q > 0; --q) perimeter.push_back(vertex(block, 0, q));
    std::string name =
        chain > 1 ? "perimeter_" + std::to_string(block) : "perimeter";
    named.cycles[name] = std::move(perimeter);
  }
  return finish(std::move(edges), std::move(named));
}

}  // namespace

FamilyOutput gen_mod4(int n, int chain) {
  return gen_mod_family(n, chain, 4, 0, 2, false);
}

FamilyOutput gen_mod8(int n, int chain) {
  return gen_mod_family(n, chain, 8, 0, 4, true);
}

FamilyOutput gen_hyperapprox_line(int n, int extra_levels,
                                  std::int64_t margin) {
  if (n < 2 || extra_levels < 0)
    throw GraphError(GraphError::Code::ParseError,
                     "hyperapprox requires n >= 2 and extra_levels >= 0");
  if (margin < 0)
    throw GraphError(GraphError::Code::WindowTooSmall,
                     "window margin must be nonnegative");
  const int depth_max = (n - 1) + extra_levels;
  std::vector<std::int64_t> pow6(depth_max + 2, 1);
  for (int d = 1; d < static_cast<int>(pow6.size()); ++d)
    pow6[d] = pow6[d - 1] * 6;
  const std::int64_t right = pow6[n];  // 6^n
  const std::int64_t lo = -margin, hi = right + margin;

  auto floor_div = [](std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  };
  auto ceil_div = [](std::int64_t a, std::int64_t b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
  };
  std::vector<std::int64_t> m_lo(depth_max + 1), m_hi(depth_max + 1);
  for (int d = 0; d <= depth_max; ++d) {
    m_lo[d] = ceil_div(lo, pow6[d]);
    m_hi[d] = floor_div(hi, pow6[d]);
  }
  auto vertex = [](int d, std::int64_t m) {
    return std::to_string(d) + ":" + std::to_string(m);
  };

  EdgeList edges;
  for (int d = 0; d <= depth_max; ++d) {
    // horizontal: closed balls of radius 2*6^d intersect
    for (std::int64_t m = m_lo[d]; m <= m_hi[d]; ++m)
      for (std::int64_t t = 1; t <= 4 && m + t <= m_hi[d]; ++t)
        edges.emplace_back(vertex(d, m), vertex(d, m + t), Rat(1));
    // radial: finer ball inside the coarser one, |m - 6m'| <= 10
    if (d + 1 <= depth_max) {
      for (std::int64_t mc = m_lo[d + 1]; mc <= m_hi[d + 1]; ++mc) {
        std::int64_t from = std::max(m_lo[d], 6 * mc - 10);
        std::int64_t to = std::min(m_hi[d], 6 * mc + 10);
        for (std::int64_t m = from; m <= to; ++m)
          edges.emplace_back(vertex(d, m), vertex(d + 1, mc), Rat(1));
      }
    }
  }

  NamedSubobjects named;
  std::vector<std::string> cycle;
  std::vector<std::string> gamma{vertex(0, 0)};
  auto check_window = [&](int d, std::int64_t m) {
    if (m < m_lo[d] || m > m_hi[d])
      throw GraphError(GraphError::Code::WindowTooSmall,
                       "named vertex " + vertex(d, m) + " outside window");
  };
  for (std::int64_t i = 0; i <= right; ++i) cycle.push_back(vertex(0, i));
  for (int k = 1; k < n; ++k) {
    // v''_k has center 6^n - 6^k, i.e. index 6^{n-k} - 1 at depth k
    check_window(k, pow6[n - k] - 1);
    check_window(k, 1);
    cycle.push_back(vertex(k, pow6[n - k] - 1));
  }
  for (int k = n - 1; k >= 1; --k) cycle.push_back(vertex(k, 1));
  for (int k = 1; k < n; ++k) gamma.push_back(vertex(k, 1));
  for (int k = n - 1; k >= 1; --k) gamma.push_back(vertex(k, pow6[n - k] - 1));
  gamma.push_back(vertex(0, right));
  named.cycles["C_" + std::to_string(n)] = std::move(cycle);
  named.paths["gamma"] = std::move(gamma);
  return finish(std::move(edges), std::move(named));
}

FamilyOutput gen_cycle(int n) {
  if (n < 3)
    throw GraphError(GraphError::Code::ParseError, "cycle requires n >= 3");
  EdgeList edges;
  auto v = [](int i) { return "v" + std::to_string(i); };
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(v(i), v(i + 1), Rat(1));
  edges.emplace_back(v(n - 1), v(0), Rat(1));
  return finish(std::move(edges));
}

FamilyOutput gen_grid(int a, int b) {
  if (a < 1 || b < 1)
    throw GraphError(GraphError::Code::ParseError, "grid requires a, b >= 1");
  EdgeList edges;
  for (int p = 0; p <= a; ++p) {
    for (int q = 0; q <= b; ++q) {
      if (p < a) edges.emplace_back(pair_name(p, q), pair_name(p + 1, q), Rat(1));
      if (q < b) edges.emplace_back(pair_name(p, q), pair_name(p, q + 1), Rat(1));
    }
  }
  return finish(std::move(edges));
}

FamilyOutput gen_complete(int n) {
  if (n < 2)
    throw GraphError(GraphError::Code::ParseError, "complete requires n >= 2");
  EdgeList edges;
  auto v = [](int i) { return "v" + std::to_string(i); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(v(i), v(j), Rat(1));
  return finish(std::move(edges));
}

FamilyOutput gen_tree(int n, std::uint64_t seed) {
  if (n < 2)
    throw GraphError(GraphError::Code::ParseError, "tree requires n >= 2");
  std::mt19937_64 rng(seed);
  EdgeList edges;
  auto v = [](int i) { return "v" + std::to_string(i); };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(v(pick(rng)), v(i), Rat(1));
  }
  return finish(std::move(edges));
}

}  // namespace hyperchord
