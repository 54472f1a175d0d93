#pragma once

// Test helpers and small independent oracles. The oracles work straight
// from the relation matrix and share no code with the library.

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "trellis/trellis.hpp"

namespace testing_support {

using namespace trellis;

inline ElementSet S(const Psoset& p, std::initializer_list<const char*> names) {
  ElementSet s;
  for (auto n : names) s.insert(p.at(n));
  return s;
}

inline std::vector<Element> W(const Psoset& p, std::initializer_list<const char*> names) {
  std::vector<Element> v;
  for (auto n : names) v.push_back(p.at(n));
  return v;
}

inline Psoset chain(std::size_t n) {
  RelationMatrix rel(n, std::vector<bool>(n, false));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (std::size_t j = i; j < n; ++j) rel[i][j] = true;
  }
  return Psoset::validate(rel, names);
}

/// x ≲ y by depth-first search over the raw matrix.
inline bool oracle_reach(const RelationMatrix& rel, std::size_t x, std::size_t y, std::vector<bool> allowed = {}) {
  const std::size_t n = rel.size();
  if (allowed.empty()) allowed.assign(n, true);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{x};
  seen[x] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    if (u == y) return true;
    for (std::size_t v = 0; v < n; ++v)
      if (rel[u][v] && allowed[v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return false;
}

/// Greatest lower bound of {x,y} straight from the definition, or -1.
inline long oracle_meet(const RelationMatrix& rel, std::size_t x, std::size_t y) {
  const std::size_t n = rel.size();
  long found = -1;
  for (std::size_t g = 0; g < n; ++g) {
    if (!rel[g][x] || !rel[g][y]) continue;
    bool greatest = true;
    for (std::size_t l = 0; l < n; ++l)
      if (rel[l][x] && rel[l][y] && !rel[l][g]) greatest = false;
    if (greatest) found = static_cast<long>(g);
  }
  return found;
}

inline long oracle_join(const RelationMatrix& rel, std::size_t x, std::size_t y) {
  const std::size_t n = rel.size();
  RelationMatrix dual(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dual[i][j] = rel[j][i];
  return oracle_meet(dual, x, y);
}

inline std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& f : fixtures::all()) ids.push_back(f.id);
  return ids;
}

inline std::vector<std::string> trellis_fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& f : fixtures::all())
    if (structure_kind(f.psoset()).trellis) ids.push_back(f.id);
  return ids;
}

}  // namespace testing_support
