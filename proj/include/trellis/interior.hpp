#pragma once

#include <string>
#include <vector>

#include "trellis/element_classes.hpp"

namespace trellis {

/// A total map X -> X, stored as its value list.
struct UnaryMap {
  std::vector<Element> values;

  std::size_t size() const { return values.size(); }
  Element operator()(Element x) const { return values[x]; }
  bool operator==(const UnaryMap&) const = default;

  static UnaryMap identity(std::size_t n) {
    UnaryMap m;
    for (Element x = 0; x < n; ++x) m.values.push_back(x);
    return m;
  }
  static UnaryMap constant(std::size_t n, Element c) { return {std::vector<Element>(n, c)}; }
};

struct InteriorReport {
  bool contractive = true;
  bool idempotent = true;
  bool meet_homomorphism = true;
  bool increasing = true;
  bool fixed_on_range = true;
  std::vector<AxiomViolation> violations;

  bool interior() const { return contractive && idempotent && meet_homomorphism; }
};

inline void require_total(const Trellis& t, const UnaryMap& m) {
  if (m.size() != t.size())
    throw Error(ErrorKind::ShapeMismatch, "map has " + std::to_string(m.size()) + " values for " +
                                              std::to_string(t.size()) + " elements");
  for (auto v : m.values) require_element(t.order(), v);
}

/// The three interior axioms plus the derived increasingness and fixedness
/// on the range; every violation is listed.
inline InteriorReport validate_interior(const Trellis& t, const UnaryMap& m) {
  require_total(t, m);
  InteriorReport r;
  const std::size_t n = t.size();
  for (Element x = 0; x < n; ++x) {
    if (!t.leq(m(x), x)) {
      r.contractive = false;
      r.violations.push_back({"contractive", {x}});
    }
    if (m(m(x)) != m(x)) {
      r.idempotent = false;
      r.violations.push_back({"idempotent", {x}});
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (m(t.meet(x, y)) != t.meet(m(x), m(y))) {
        r.meet_homomorphism = false;
        r.violations.push_back({"meet-homomorphism", {x, y}});
      }
      if (t.leq(x, y) && !t.leq(m(x), m(y))) {
        r.increasing = false;
        r.violations.push_back({"increasing", {x, y}});
      }
    }
  for (Element x = 0; x < n; ++x) {
    const Element v = m(x);
    if (m(v) != v && r.fixed_on_range) {
      r.fixed_on_range = false;
      r.violations.push_back({"fixed-on-range", {v}});
    }
  }
  return r;
}

inline ElementSet image(const UnaryMap& m) {
  ElementSet s;
  for (auto v : m.values) s.insert(v);
  return s;
}

inline ElementSet range(const Trellis& t, const UnaryMap& m) {
  auto report = validate_interior(t, m);
  if (!report.interior())
    throw Error(ErrorKind::NotAnInteriorOperator, report.violations.front().axiom + " fails",
                report.violations.front().tuple);
  return image(m);
}

/// λ_A(x) = ∨(A ∩ ↓x). A must contain the bottom and consist of
/// right-transitive elements, which makes every such join exist.
inline UnaryMap lambda(const Trellis& t, ElementSet a) {
  const Element zero = require_bottom(t.order());
  require_subset(t.order(), a);
  if (!a.contains(zero)) throw Error(ErrorKind::BottomMissing, "subset must contain " + t.name(zero), {zero});
  for (auto x : a)
    if (!right_transitive(t.order(), x))
      throw Error(ErrorKind::NotRightTransitiveSubset, t.name(x) + " is not right-transitive", {x});
  UnaryMap m;
  for (Element x = 0; x < t.size(); ++x) m.values.push_back(iterated_join(t, a & t.order().down(x)));
  return m;
}

}  // namespace trellis
