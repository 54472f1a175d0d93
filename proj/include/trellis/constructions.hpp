#pragma once

#include <string>
#include <vector>

#include "trellis/binary_op.hpp"
#include "trellis/interior.hpp"

namespace trellis {

/// A binary operation on a subset, indexed in the subset's own numbering.
struct SubOperation {
  Restriction carrier;
  BinaryOpTable table;

  ElementSet support() const {
    ElementSet s;
    for (auto e : carrier.to_parent) s.insert(e);
    return s;
  }

  /// Applies the operation to two parent elements of the subset.
  Element operator()(Element u, Element v) const {
    auto i = carrier.from_parent(u);
    auto j = carrier.from_parent(v);
    if (!i || !j) throw Error(ErrorKind::ElementNotInSubset, "argument outside the operation's carrier");
    return carrier.to_parent[table(*i, *j)];
  }

  /// Builds the table from a function of parent elements.
  template <class F>
  static SubOperation from(const Psoset& p, ElementSet a, F f) {
    SubOperation s{induced(p, a), {}};
    const auto& ix = s.carrier.to_parent;
    s.table = BinaryOpTable(ix.size());
    for (std::size_t i = 0; i < ix.size(); ++i)
      for (std::size_t j = 0; j < ix.size(); ++j) {
        auto v = s.carrier.from_parent(f(ix[i], ix[j]));
        if (!v) throw Error(ErrorKind::ElementNotInSubset, "operation leaves its carrier", {ix[i], ix[j]});
        s.table.set(i, j, *v);
      }
    return s;
  }
};

/// x if y = 1, y if x = 1, 0 otherwise.
inline BinaryOpTable t_drastic(const Psoset& p) {
  const Element zero = require_bottom(p), one = require_top(p);
  BinaryOpTable T(p.size(), zero);
  for (Element x = 0; x < p.size(); ++x) T.set_symmetric(x, one, x);
  return T;
}

/// (x ∧ y ≠ 0 and x ∨ y = 1) implies (x ∨ z) ∨ (y ∨ w) = 1.
inline Verdict condition4(const Trellis& t) {
  const Element zero = require_bottom(t.order()), one = require_top(t.order());
  const std::size_t n = t.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (t.meet(x, y) == zero || t.join(x, y) != one) continue;
      for (Element z = 0; z < n; ++z)
        for (Element w = 0; w < n; ++w)
          if (t.join(t.join(x, z), t.join(y, w)) != one) return Verdict::fail({x, y, z, w});
    }
  return Verdict::ok();
}

/// x ∧ y where x ∨ y = 1, 0 elsewhere.
inline BinaryOpTable t_z(const Trellis& t) {
  const Element zero = require_bottom(t.order()), one = require_top(t.order());
  BinaryOpTable T(t.size(), zero);
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      if (t.join(x, y) == one) T.set(x, y, t.meet(x, y));
  return T;
}

inline BinaryOpTable t_coatom(const Psoset& p, Element i) {
  require_element(p, i);
  if (!co_atoms(p).contains(i)) throw Error(ErrorKind::NotACoAtom, p.name(i) + " is not a co-atom", {i});
  BinaryOpTable T = t_drastic(p);
  T.set(i, i, i);
  return T;
}

/// The meet restricted to a ∧-closed subset.
inline SubOperation restricted_meet(const Trellis& t, ElementSet a) {
  if (auto v = is_meet_sub_trellis(t, a); !v)
    throw Error(ErrorKind::NotASubTrellis, "subset is not closed under meet", v.witness);
  return SubOperation::from(t.order(), a, [&](Element x, Element y) { return t.meet(x, y); });
}

/// V_a(x, y) = x ∧ y ∧ a on a ∧-sub-lattice containing a.
inline SubOperation v_scaled(const Trellis& t, ElementSet a_set, Element a) {
  require_element(t.order(), a);
  if (auto v = is_meet_sub_lattice(t, a_set); !v)
    throw Error(ErrorKind::NotASubLattice, "subset is not a meet-closed sub-lattice", v.witness);
  if (!a_set.contains(a)) throw Error(ErrorKind::ElementNotInSubset, t.name(a) + " is not in the subset", {a});
  return SubOperation::from(t.order(), a_set, [&](Element x, Element y) { return t.meet(t.meet(x, y), a); });
}

/// V only has to be commutative, associative, increasing and below both
/// arguments on the range; neutrality at 1 comes from the outer branches.
inline Verdict check_range_operation(const SubOperation& v) {
  const auto& q = v.carrier.psoset;
  auto r = check(q, v.table);
  if (!r.commutative.holds) return Verdict::fail(r.commutative.witness);
  if (!r.associative.holds) return Verdict::fail(r.associative.witness);
  if (!r.increasing.holds) return Verdict::fail(r.increasing.witness);
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (!q.leq(v.table(x, y), x) || !q.leq(v.table(x, y), y)) return Verdict::fail({x, y});
  return Verdict::ok();
}

/// T^{I,V}: y if x = 1, x if y = 1, V(I(x), I(y)) otherwise.
inline BinaryOpTable t_interior(const Trellis& t, const UnaryMap& interior, const SubOperation& v) {
  const Element one = require_top(t.order());
  const ElementSet r = range(t, interior);
  for (auto e : r)
    if (!right_transitive(t.order(), e))
      throw Error(ErrorKind::RangeNotRightTransitive, t.name(e) + " in the range is not right-transitive", {e});
  if (v.support() != r) throw Error(ErrorKind::TargetMismatch, "V is not defined on the range of the interior");
  if (auto ok = check_range_operation(v); !ok) {
    std::vector<Element> w;
    for (auto e : ok.witness) w.push_back(v.carrier.to_parent[e]);
    throw Error(ErrorKind::VNotATnorm, "V is not a t-norm on the range", w);
  }
  BinaryOpTable T(t.size());
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      T.set(x, y, x == one ? y : y == one ? x : v(interior(x), interior(y)));
  return T;
}

/// T^I: V is the meet restricted to the range.
inline BinaryOpTable t_interior_meet(const Trellis& t, const UnaryMap& interior) {
  return t_interior(t, interior, restricted_meet(t, range(t, interior)));
}

inline void require_sub_trellis(const Trellis& t, ElementSet a) {
  if (auto v = is_sub_trellis(t, a); !v)
    throw Error(ErrorKind::NotASubTrellis,
                t.name(v.witness[0]) + " and " + t.name(v.witness[1]) + " leave the subset", v.witness);
}

/// T^{[A,V]}.
inline BinaryOpTable t_lambda(const Trellis& t, ElementSet a, const SubOperation& v) {
  auto l = lambda(t, a);
  require_sub_trellis(t, a);
  return t_interior(t, l, v);
}

/// T^{[A]}.
inline BinaryOpTable t_lambda_meet(const Trellis& t, ElementSet a) {
  auto l = lambda(t, a);
  require_sub_trellis(t, a);
  return t_interior_meet(t, l);
}

/// T^{[A]} evaluated literally, without requiring A to be a sub-trellis or
/// λ_A to be an interior operator. The result need not be a t-norm.
inline BinaryOpTable t_lambda_meet_unchecked(const Trellis& t, ElementSet a) {
  const Element one = require_top(t.order());
  auto l = lambda(t, a);
  BinaryOpTable T(t.size());
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      T.set(x, y, x == one ? y : y == one ? x : t.meet(l(x), l(y)));
  return T;
}

}  // namespace trellis
