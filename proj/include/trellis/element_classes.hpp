#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "trellis/algebra.hpp"

namespace trellis {

struct ElementFlags {
  bool rtr = false;
  bool ltr = false;
  bool mtr = false;
  bool tr = false;
  bool meet_ass = false;
  bool join_ass = false;
  bool ass = false;
  bool meet_dis = false;
  bool join_dis = false;
  bool dis = false;
  bool operator==(const ElementFlags&) const = default;
};

enum class ElementClass { dis, ass, meet_ass, join_ass, tr, ltr, rtr, mtr };

inline constexpr std::array<ElementClass, 8> kElementClasses = {
    ElementClass::dis, ElementClass::ass, ElementClass::meet_ass, ElementClass::join_ass,
    ElementClass::tr,  ElementClass::ltr, ElementClass::rtr,      ElementClass::mtr};

inline const char* to_string(ElementClass c) {
  switch (c) {
    case ElementClass::dis: return "dis";
    case ElementClass::ass: return "ass";
    case ElementClass::meet_ass: return "meet-ass";
    case ElementClass::join_ass: return "join-ass";
    case ElementClass::tr: return "tr";
    case ElementClass::ltr: return "ltr";
    case ElementClass::rtr: return "rtr";
    case ElementClass::mtr: return "mtr";
  }
  return "?";
}

inline std::optional<ElementClass> parse_element_class(std::string_view s) {
  for (auto c : kElementClasses)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

struct ElementClassification {
  std::vector<ElementFlags> flags;

  bool has(Element e, ElementClass c) const {
    const auto& f = flags.at(e);
    switch (c) {
      case ElementClass::dis: return f.dis;
      case ElementClass::ass: return f.ass;
      case ElementClass::meet_ass: return f.meet_ass;
      case ElementClass::join_ass: return f.join_ass;
      case ElementClass::tr: return f.tr;
      case ElementClass::ltr: return f.ltr;
      case ElementClass::rtr: return f.rtr;
      case ElementClass::mtr: return f.mtr;
    }
    return false;
  }
};

// a ⊴ x ⊴ y implies a ⊴ y
inline bool right_transitive(const Psoset& p, Element a) {
  for (auto x : p.up(a))
    if (!p.up(x).subset_of(p.up(a))) return false;
  return true;
}

// x ⊴ y ⊴ a implies x ⊴ a
inline bool left_transitive(const Psoset& p, Element a) {
  for (auto y : p.down(a))
    if (!p.down(y).subset_of(p.down(a))) return false;
  return true;
}

// x ⊴ a ⊴ y implies x ⊴ y
inline bool middle_transitive(const Psoset& p, Element a) {
  for (auto x : p.down(a))
    if (!p.up(a).subset_of(p.up(x))) return false;
  return true;
}

// By commutativity only tuples (a, x, y) need checking.
inline bool meet_associative_element(const Trellis& t, Element a) {
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      if (t.meet(t.meet(a, x), y) != t.meet(a, t.meet(x, y))) return false;
  return true;
}

inline bool join_associative_element(const Trellis& t, Element a) {
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      if (t.join(t.join(a, x), y) != t.join(a, t.join(x, y))) return false;
  return true;
}

namespace detail {
// Calls pred on every triple having a in at least one position.
template <class Pred>
bool all_triples_with(std::size_t n, Element a, Pred pred) {
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      if (!pred(a, u, v) || !pred(u, a, v) || !pred(u, v, a)) return false;
  return true;
}
}  // namespace detail

// (x ∧ y) ∨ z = (x ∨ z) ∧ (y ∨ z)
inline bool meet_distributive_element(const Trellis& t, Element a) {
  return detail::all_triples_with(t.size(), a, [&](Element x, Element y, Element z) {
    return t.join(t.meet(x, y), z) == t.meet(t.join(x, z), t.join(y, z));
  });
}

// (x ∨ y) ∧ z = (x ∧ z) ∨ (y ∧ z)
inline bool join_distributive_element(const Trellis& t, Element a) {
  return detail::all_triples_with(t.size(), a, [&](Element x, Element y, Element z) {
    return t.meet(t.join(x, y), z) == t.join(t.meet(x, z), t.meet(y, z));
  });
}

inline ElementClassification classify(const Trellis& t) {
  ElementClassification c;
  c.flags.resize(t.size());
  for (Element a = 0; a < t.size(); ++a) {
    auto& f = c.flags[a];
    f.rtr = right_transitive(t.order(), a);
    f.ltr = left_transitive(t.order(), a);
    f.mtr = middle_transitive(t.order(), a);
    f.tr = f.rtr && f.ltr && f.mtr;
    f.meet_ass = meet_associative_element(t, a);
    f.join_ass = join_associative_element(t, a);
    f.ass = f.meet_ass && f.join_ass;
    f.meet_dis = meet_distributive_element(t, a);
    f.join_dis = join_distributive_element(t, a);
    f.dis = f.meet_dis || f.join_dis;
  }
  return c;
}

inline ElementSet subset(const ElementClassification& c, ElementClass cls) {
  ElementSet s;
  for (Element e = 0; e < c.flags.size(); ++e)
    if (c.has(e, cls)) s.insert(e);
  return s;
}

/// Join of a nonempty set of right-transitive elements, folded in index order.
inline Element iterated_join(const Trellis& t, ElementSet s) {
  require_subset(t.order(), s);
  if (s.empty()) throw Error(ErrorKind::EmptySubset, "iterated join of an empty set");
  for (auto x : s)
    if (!right_transitive(t.order(), x))
      throw Error(ErrorKind::PreconditionViolated, t.name(x) + " is not right-transitive", {x});
  Element acc = s.first();
  for (auto x : s) acc = t.join(acc, x);
  return acc;
}

/// Meet of a nonempty set of left-transitive elements, folded in index order.
inline Element iterated_meet(const Trellis& t, ElementSet s) {
  require_subset(t.order(), s);
  if (s.empty()) throw Error(ErrorKind::EmptySubset, "iterated meet of an empty set");
  for (auto x : s)
    if (!left_transitive(t.order(), x))
      throw Error(ErrorKind::PreconditionViolated, t.name(x) + " is not left-transitive", {x});
  Element acc = s.first();
  for (auto x : s) acc = t.meet(acc, x);
  return acc;
}

}  // namespace trellis
