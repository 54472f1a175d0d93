#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "trellis/binary_op.hpp"

namespace trellis::verify {

struct OracleResult {
  std::vector<BinaryOpTable> tnorms;  // canonical order
  std::uint64_t tables = 0;           // candidate tables inspected
};

/// Unpruned reference: every commutative table with 1 as neutral element,
/// each cell of (X \ {1})² ranging over all of X, filtered by the t-norm
/// test. Exponential; intended for carriers of at most five elements.
///
/// Before the full test, a table must satisfy T(x,y) ⊴ x and T(x,y) ⊴ y,
/// which increasingness with T(x,1) = x already demands. The number of
/// cells breaking it is maintained as the odometer turns.
inline OracleResult brute_force_tnorms(const Psoset& p) {
  const Element one = require_top(p);
  const std::size_t n = p.size();
  std::vector<std::pair<Element, Element>> cells;
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      if (x != one && y != one) cells.emplace_back(x, y);

  BinaryOpTable T(n, 0);
  for (Element x = 0; x < n; ++x) T.set_symmetric(x, one, x);
  for (auto [x, y] : cells) T.set_symmetric(x, y, 0);

  auto below_both = [&](std::size_t i, Element v) { return p.leq(v, cells[i].first) && p.leq(v, cells[i].second); };
  std::vector<bool> bad(cells.size());
  std::size_t n_bad = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) n_bad += bad[i] = !below_both(i, 0);

  OracleResult r;
  std::vector<Element> digit(cells.size(), 0);
  auto assign = [&](std::size_t i, Element v) {
    digit[i] = v;
    T.set_symmetric(cells[i].first, cells[i].second, v);
    const bool now = !below_both(i, v);
    n_bad += static_cast<std::size_t>(now) - static_cast<std::size_t>(bad[i]);
    bad[i] = now;
  };
  while (true) {
    ++r.tables;
    if (n_bad == 0 && is_tnorm(p, T)) r.tnorms.push_back(T);
    std::size_t i = 0;
    for (; i < cells.size(); ++i) {
      if (digit[i] + 1 < n) {
        assign(i, digit[i] + 1);
        break;
      }
      assign(i, 0);
    }
    if (i == cells.size()) break;
  }
  std::sort(r.tnorms.begin(), r.tnorms.end());
  return r;
}

}  // namespace trellis::verify
