#pragma once

// Seeded random carriers for the property and oracle suites. Only the raw
// 64-bit engine output is used, so a seed gives the same corpus everywhere.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trellis/algebra.hpp"

namespace trellis::verify {

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t k) { return engine_() % k; }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// "0", inner letters, "1".
inline std::vector<std::string> bounded_names(std::size_t n) {
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    std::string s;
    for (std::size_t k = i - 1;; k = k / 26 - 1) {
      s.insert(s.begin(), static_cast<char>('a' + k % 26));
      if (k < 26) break;
    }
    names.push_back(s);
  }
  if (n > 1) names.push_back("1");
  return names;
}

/// Adds a new bottom and top around an inner relation on m elements.
inline RelationMatrix with_bounds(const RelationMatrix& inner) {
  const std::size_t m = inner.size(), n = m + 2;
  RelationMatrix rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rel[0][i] = true;
    rel[i][n - 1] = true;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i + 1][j + 1] = inner[i][j];
  return rel;
}

/// A random bounded poset on n ≥ 2 elements, then some transitively
/// implied pairs deleted (which keeps antisymmetry).
inline Psoset random_broken_poset(Random& rng, std::size_t n, double edge_p, double break_p) {
  const std::size_t m = n - 2;
  RelationMatrix inner(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    inner[i][i] = true;
    for (std::size_t j = i + 1; j < m; ++j) inner[i][j] = rng.chance(edge_p);
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (inner[i][k])
        for (std::size_t j = 0; j < m; ++j)
          if (inner[k][j]) inner[i][j] = true;
  auto rel = with_bounds(inner);
  auto implied = rel;
  for (std::size_t x = 1; x + 1 < n; ++x)
    for (std::size_t z = 1; z + 1 < n; ++z) {
      if (x == z || !implied[x][z]) continue;
      bool through = false;
      for (std::size_t y = 1; y + 1 < n && !through; ++y) through = y != x && y != z && implied[x][y] && implied[y][z];
      if (through && rng.chance(break_p)) rel[x][z] = false;
    }
  return Psoset::validate(rel, bounded_names(n));
}

/// A random antisymmetric inner relation with bounds; cycles are allowed.
/// With plant_cycle, the first three inner elements form a 3-cycle.
inline Psoset random_bounded_psoset(Random& rng, std::size_t n, double edge_p, bool plant_cycle = false) {
  const std::size_t m = n - 2;
  RelationMatrix inner(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    inner[i][i] = true;
    for (std::size_t j = i + 1; j < m; ++j)
      if (rng.chance(edge_p)) (rng.chance(0.5) ? inner[i][j] : inner[j][i]) = true;
  }
  if (plant_cycle && m >= 3) {
    inner[0][1] = inner[1][2] = inner[2][0] = true;
    inner[1][0] = inner[2][1] = inner[0][2] = false;
  }
  return Psoset::validate(with_bounds(inner), bounded_names(n));
}

/// Rejection-samples a bounded trellis with 2 ≤ size ≤ max_n. Alternates
/// between broken posets and cyclic relations so both shapes appear.
inline Trellis random_trellis(Random& rng, std::size_t max_n) {
  while (true) {
    const std::size_t n = 2 + rng.below(max_n - 1);
    const bool cyclic = rng.chance(0.35);
    Psoset p = cyclic ? random_bounded_psoset(rng, n, 0.3 + 0.5 * rng.unit(), rng.chance(0.5))
                      : random_broken_poset(rng, n, 0.2 + 0.6 * rng.unit(), rng.unit() * 0.6);
    if (structure_kind(p).trellis) return Trellis::build(std::move(p));
  }
}

}  // namespace trellis::verify
