#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trellis/relation.hpp"

namespace trellis {

/// Greatest lower bound of s, if one exists.
inline std::optional<Element> infimum(const Psoset& p, ElementSet s) {
  require_subset(p, s);
  if (s.empty()) throw Error(ErrorKind::EmptySubset, "infimum of an empty subset");
  ElementSet lower = p.elements();
  for (auto x : s) lower &= p.down(x);
  for (auto g : lower)
    if (lower.subset_of(p.down(g))) return g;
  return std::nullopt;
}

inline std::optional<Element> supremum(const Psoset& p, ElementSet s) {
  require_subset(p, s);
  if (s.empty()) throw Error(ErrorKind::EmptySubset, "supremum of an empty subset");
  ElementSet upper = p.elements();
  for (auto x : s) upper &= p.up(x);
  for (auto g : upper)
    if (upper.subset_of(p.up(g))) return g;
  return std::nullopt;
}

/// A psoset in which every pair has a meet and a join; both tables are
/// materialized at construction.
class Trellis {
 public:
  Trellis() = default;

  static Trellis build(Psoset p) {
    const std::size_t n = p.size();
    Trellis t;
    t.meet_ = BinaryOpTable(n);
    t.join_ = BinaryOpTable(n);
    for (Element x = 0; x < n; ++x)
      for (Element y = x; y < n; ++y) {
        auto m = infimum(p, ElementSet{x, y});
        auto j = supremum(p, ElementSet{x, y});
        if (!m || !j)
          throw Error(ErrorKind::NotATrellis,
                      p.name(x) + " and " + p.name(y) + " have no " + (!m ? "meet" : "join"), {x, y});
        t.meet_.set_symmetric(x, y, *m);
        t.join_.set_symmetric(x, y, *j);
      }
    t.order_ = std::move(p);
    return t;
  }

  const Psoset& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool leq(Element x, Element y) const { return order_.leq(x, y); }
  Element meet(Element x, Element y) const { return meet_(x, y); }
  Element join(Element x, Element y) const { return join_(x, y); }
  const BinaryOpTable& meet_table() const { return meet_; }
  const BinaryOpTable& join_table() const { return join_; }
  std::optional<Element> bottom() const { return order_.bottom(); }
  std::optional<Element> top() const { return order_.top(); }
  const std::string& name(Element e) const { return order_.name(e); }

 private:
  Psoset order_;
  BinaryOpTable meet_, join_;
};

inline Trellis build_trellis(Psoset p) { return Trellis::build(std::move(p)); }

inline Element require_top(const Psoset& p) {
  if (!p.bounded()) throw Error(ErrorKind::NotBounded, "operation needs a bounded carrier");
  return *p.top();
}

inline Element require_bottom(const Psoset& p) {
  if (!p.bounded()) throw Error(ErrorKind::NotBounded, "operation needs a bounded carrier");
  return *p.bottom();
}

inline Verdict is_modular(const Trellis& t) {
  const std::size_t n = t.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (auto z : t.order().up(x))
        if (t.join(x, t.meet(y, z)) != t.meet(t.join(x, y), z)) return Verdict::fail({x, y, z});
  return Verdict::ok();
}

struct StructureKind {
  bool meet_semi_trellis = false;
  bool join_semi_trellis = false;
  bool trellis = false;
  bool lattice = false;
  bool modular = false;
  bool bounded = false;
};

inline StructureKind structure_kind(const Psoset& p) {
  StructureKind k;
  k.meet_semi_trellis = k.join_semi_trellis = true;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y) {
      if (k.meet_semi_trellis && !infimum(p, ElementSet{x, y})) k.meet_semi_trellis = false;
      if (k.join_semi_trellis && !supremum(p, ElementSet{x, y})) k.join_semi_trellis = false;
    }
  k.trellis = k.meet_semi_trellis && k.join_semi_trellis;
  k.lattice = k.trellis && p.transitive();
  k.modular = k.trellis && is_modular(Trellis::build(p)).holds;
  k.bounded = p.bounded();
  return k;
}

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> tuple;
  bool operator==(const AxiomViolation&) const = default;
};

struct SkalaReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Commutativity, idempotence, absorption and part-preservation of a pair of
/// tables; every failing tuple is listed.
inline SkalaReport check_skala_axioms(const BinaryOpTable& meet, const BinaryOpTable& join) {
  SkalaReport r;
  if (meet.size() != join.size()) {
    r.violations.push_back({"shape", {}});
    return r;
  }
  const std::size_t n = meet.size();
  auto bad = [&](const char* axiom, std::vector<Element> tuple) { r.violations.push_back({axiom, std::move(tuple)}); };
  for (Element x = 0; x < n; ++x) {
    if (meet(x, x) != x) bad("meet-idempotence", {x});
    if (join(x, x) != x) bad("join-idempotence", {x});
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x < y && meet(x, y) != meet(y, x)) bad("meet-commutativity", {x, y});
      if (x < y && join(x, y) != join(y, x)) bad("join-commutativity", {x, y});
      if (join(x, meet(y, x)) != x) bad("join-absorption", {x, y});
      if (meet(x, join(y, x)) != x) bad("meet-absorption", {x, y});
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (join(x, join(meet(x, y), meet(x, z))) != x) bad("join-part-preservation", {x, y, z});
        if (meet(x, meet(join(x, y), join(x, z))) != x) bad("meet-part-preservation", {x, y, z});
      }
  return r;
}

/// Recovers ⊴ from the tables: a ⊴ b iff a ∧ b = a or a ∨ b = b.
inline RelationMatrix induced_order(const BinaryOpTable& meet, const BinaryOpTable& join) {
  auto report = check_skala_axioms(meet, join);
  if (!report.ok())
    throw Error(ErrorKind::AxiomsFailed, report.violations.front().axiom + " fails", report.violations.front().tuple);
  const std::size_t n = meet.size();
  RelationMatrix rel(n, std::vector<bool>(n, false));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) rel[a][b] = meet(a, b) == a || join(a, b) == b;
  return rel;
}

inline Verdict meet_associative(const Trellis& t) {
  const std::size_t n = t.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t.meet(t.meet(x, y), z) != t.meet(x, t.meet(y, z))) return Verdict::fail({x, y, z});
  return Verdict::ok();
}

inline Verdict join_associative(const Trellis& t) {
  const std::size_t n = t.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t.join(t.join(x, y), z) != t.join(x, t.join(y, z))) return Verdict::fail({x, y, z});
  return Verdict::ok();
}

inline Verdict is_meet_sub_trellis(const Trellis& t, ElementSet a) {
  require_subset(t.order(), a);
  for (auto x : a)
    for (auto y : a)
      if (!a.contains(t.meet(x, y))) return Verdict::fail({x, y});
  return Verdict::ok();
}

inline Verdict is_join_sub_trellis(const Trellis& t, ElementSet a) {
  require_subset(t.order(), a);
  for (auto x : a)
    for (auto y : a)
      if (!a.contains(t.join(x, y))) return Verdict::fail({x, y});
  return Verdict::ok();
}

inline Verdict is_sub_trellis(const Trellis& t, ElementSet a) {
  if (auto v = is_meet_sub_trellis(t, a); !v) return v;
  return is_join_sub_trellis(t, a);
}

/// Transitivity of ⊴ restricted to a; witness (x, y, z) with x ⊴ y ⊴ z, x ⋬ z.
inline Verdict transitive_on(const Psoset& p, ElementSet a) {
  for (auto x : a)
    for (auto y : p.up(x) & a)
      for (auto z : p.up(y) & a)
        if (!p.leq(x, z)) return Verdict::fail({x, y, z});
  return Verdict::ok();
}

inline Verdict is_sub_lattice(const Trellis& t, ElementSet a) {
  if (auto v = is_sub_trellis(t, a); !v) return v;
  return transitive_on(t.order(), a);
}

/// A ∧-sub-trellis on which ⊴ is transitive.
inline Verdict is_meet_sub_lattice(const Trellis& t, ElementSet a) {
  if (auto v = is_meet_sub_trellis(t, a); !v) return v;
  return transitive_on(t.order(), a);
}

/// For bounded modular trellises: x ⊴ z and x ∨ y = 1 imply x ∧ y ⊴ z.
inline Verdict modular_implication_check(const Trellis& t) {
  const Element one = require_top(t.order());
  if (auto m = is_modular(t); !m) throw Error(ErrorKind::NotModular, "trellis is not modular", m.witness);
  const std::size_t n = t.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (t.join(x, y) != one) continue;
      for (auto z : t.order().up(x))
        if (!t.leq(t.meet(x, y), z)) return Verdict::fail({x, y, z});
    }
  return Verdict::ok();
}

}  // namespace trellis
