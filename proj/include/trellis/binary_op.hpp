#pragma once

#include <string>
#include <vector>

#include "trellis/algebra.hpp"

namespace trellis {

/// One checked law. Witnesses are the lexicographically first failing tuple
/// in element-index order.
struct Property {
  bool applicable = true;
  bool holds = true;
  std::vector<Element> witness;

  bool operator==(const Property&) const = default;
};

struct TnormReport {
  Property commutative;       // (x, y)
  Property associative;       // (x, y, z)
  Property increasing;        // (x, y, z, t): x ⊴ y, z ⊴ t, T(x,z) ⋬ T(y,t)
  Property left_increasing;   // (x, y, z): x ⊴ y, T(x,z) ⋬ T(y,z)
  Property right_increasing;  // (x, y, z): x ⊴ y, T(z,x) ⋬ T(z,y)
  Property neutral_top;       // (x): T(x,1) ≠ x or T(1,x) ≠ x
  Property conjunctive;       // (x, y): T(x,y) ⋬ x ∧ y
  Property disjunctive;       // (x, y): x ∨ y ⋬ T(x,y)
  Property idempotent;        // (x)
  Property meet_preserving;   // (x, y, z): T(x, y ∧ z) ≠ T(x,y) ∧ T(x,z)

  bool is_tnorm() const {
    return commutative.holds && associative.holds && increasing.holds && neutral_top.applicable && neutral_top.holds;
  }
};

inline void require_op_shape(const Psoset& p, const BinaryOpTable& op) {
  if (op.size() != p.size())
    throw Error(ErrorKind::TargetMismatch, "table has size " + std::to_string(op.size()) + ", carrier has " +
                                               std::to_string(p.size()) + " elements");
  for (auto v : op.cells()) require_element(p, v);
}

namespace detail {

inline Property fail(std::vector<Element> w) { return {true, false, std::move(w)}; }
inline Property not_applicable() { return {false, false, {}}; }

inline Property commutative(const BinaryOpTable& T) {
  for (Element x = 0; x < T.size(); ++x)
    for (Element y = x + 1; y < T.size(); ++y)
      if (T(x, y) != T(y, x)) return fail({x, y});
  return {};
}

inline Property associative(const BinaryOpTable& T) {
  const std::size_t n = T.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (T(T(x, y), z) != T(x, T(y, z))) return fail({x, y, z});
  return {};
}

inline Property increasing(const Psoset& p, const BinaryOpTable& T) {
  const std::size_t n = T.size();
  for (Element x = 0; x < n; ++x)
    for (auto y : p.up(x))
      for (Element z = 0; z < n; ++z)
        for (auto t : p.up(z))
          if (!p.leq(T(x, z), T(y, t))) return fail({x, y, z, t});
  return {};
}

inline Property left_increasing(const Psoset& p, const BinaryOpTable& T) {
  for (Element x = 0; x < T.size(); ++x)
    for (auto y : p.up(x))
      for (Element z = 0; z < T.size(); ++z)
        if (!p.leq(T(x, z), T(y, z))) return fail({x, y, z});
  return {};
}

inline Property right_increasing(const Psoset& p, const BinaryOpTable& T) {
  for (Element x = 0; x < T.size(); ++x)
    for (auto y : p.up(x))
      for (Element z = 0; z < T.size(); ++z)
        if (!p.leq(T(z, x), T(z, y))) return fail({x, y, z});
  return {};
}

inline Property neutral_top(const Psoset& p, const BinaryOpTable& T) {
  if (!p.top()) return not_applicable();
  const Element one = *p.top();
  for (Element x = 0; x < T.size(); ++x)
    if (T(x, one) != x || T(one, x) != x) return fail({x});
  return {};
}

inline Property idempotent(const BinaryOpTable& T) {
  for (Element x = 0; x < T.size(); ++x)
    if (T(x, x) != x) return fail({x});
  return {};
}

}  // namespace detail

/// Flags that need meets and joins are reported as not applicable.
inline TnormReport check(const Psoset& p, const BinaryOpTable& op) {
  require_op_shape(p, op);
  TnormReport r;
  r.commutative = detail::commutative(op);
  r.associative = detail::associative(op);
  r.increasing = detail::increasing(p, op);
  r.left_increasing = detail::left_increasing(p, op);
  r.right_increasing = detail::right_increasing(p, op);
  r.neutral_top = detail::neutral_top(p, op);
  r.idempotent = detail::idempotent(op);
  r.conjunctive = r.disjunctive = r.meet_preserving = detail::not_applicable();
  return r;
}

inline TnormReport check(const Trellis& t, const BinaryOpTable& op) {
  TnormReport r = check(t.order(), op);
  const std::size_t n = t.size();
  r.conjunctive = r.disjunctive = r.meet_preserving = Property{};
  for (Element x = 0; x < n && r.conjunctive.holds; ++x)
    for (Element y = 0; y < n; ++y)
      if (!t.leq(op(x, y), t.meet(x, y))) {
        r.conjunctive = detail::fail({x, y});
        break;
      }
  for (Element x = 0; x < n && r.disjunctive.holds; ++x)
    for (Element y = 0; y < n; ++y)
      if (!t.leq(t.join(x, y), op(x, y))) {
        r.disjunctive = detail::fail({x, y});
        break;
      }
  for (Element x = 0; x < n && r.meet_preserving.holds; ++x)
    for (Element y = 0; y < n && r.meet_preserving.holds; ++y)
      for (Element z = 0; z < n; ++z)
        if (op(x, t.meet(y, z)) != t.meet(op(x, y), op(x, z))) {
          r.meet_preserving = detail::fail({x, y, z});
          break;
        }
  return r;
}

/// Early-exit t-norm test; cheapest laws first.
inline bool is_tnorm(const Psoset& p, const BinaryOpTable& op) {
  if (op.size() != p.size() || !p.top()) return false;
  if (!detail::neutral_top(p, op).holds) return false;
  if (!detail::commutative(op).holds) return false;
  if (!detail::increasing(p, op).holds) return false;
  return detail::associative(op).holds;
}

/// T1 ⊴ T2 cell by cell.
inline bool pointwise_leq(const Psoset& p, const BinaryOpTable& t1, const BinaryOpTable& t2) {
  require_op_shape(p, t1);
  require_op_shape(p, t2);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (!p.leq(t1(x, y), t2(x, y))) return false;
  return true;
}

}  // namespace trellis
