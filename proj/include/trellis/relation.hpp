#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trellis/core.hpp"

namespace trellis {

using RelationMatrix = std::vector<std::vector<bool>>;

/// A finite set with a reflexive, antisymmetric relation. Reachability (the
/// transitive closure) is precomputed since most queries need it.
class Psoset {
 public:
  Psoset() = default;

  /// Checks the matrix and names, collecting every violation before throwing.
  static Psoset validate(const RelationMatrix& rel, std::vector<std::string> names) {
    const std::size_t n = names.size();
    if (n == 0) throw Error(ErrorKind::ShapeMismatch, "a psoset needs at least one element");
    if (n > kMaxElements)
      throw Error(ErrorKind::CarrierTooLarge, "at most " + std::to_string(kMaxElements) + " elements supported");
    if (rel.size() != n) throw Error(ErrorKind::ShapeMismatch, "relation has " + std::to_string(rel.size()) +
                                                                   " rows for " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i].size() != n)
        throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(i) + " has " + std::to_string(rel[i].size()) +
                                                  " entries, expected " + std::to_string(n));

    std::vector<Violation> violations;
    std::unordered_map<std::string, Element> seen;
    for (Element i = 0; i < n; ++i) {
      auto [it, fresh] = seen.emplace(names[i], i);
      if (!fresh) violations.push_back({ErrorKind::DuplicateName, {it->second, i}});
    }
    for (Element x = 0; x < n; ++x)
      if (!rel[x][x]) violations.push_back({ErrorKind::NotReflexive, {x}});
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        if (rel[x][y] && rel[y][x]) violations.push_back({ErrorKind::NotAntisymmetric, {x, y}});
    if (!violations.empty()) {
      std::string msg = std::to_string(violations.size()) + " violation(s):";
      for (const auto& v : violations) {
        msg += std::string(" ") + to_string(v.kind) + "(";
        for (std::size_t k = 0; k < v.elements.size(); ++k) msg += (k ? "," : "") + names[v.elements[k]];
        msg += ")";
      }
      throw ValidationError(std::move(violations), msg);
    }

    Psoset p;
    p.names_ = std::move(names);
    p.index_ = std::move(seen);
    p.up_.assign(n, {});
    p.down_.assign(n, {});
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (rel[x][y]) {
          p.up_[x].insert(y);
          p.down_[y].insert(x);
        }
    p.reach_ = p.up_;
    for (Element k = 0; k < n; ++k)
      for (Element i = 0; i < n; ++i)
        if (p.reach_[i].contains(k)) p.reach_[i] |= p.reach_[k];
    const auto all = ElementSet::full(n);
    for (Element x = 0; x < n; ++x) {
      if (p.up_[x] == all) p.bottom_ = x;
      if (p.down_[x] == all) p.top_ = x;
    }
    return p;
  }

  std::size_t size() const { return names_.size(); }
  ElementSet elements() const { return ElementSet::full(size()); }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  /// x ≲ y: a finite ⊴-path leads from x to y.
  bool reaches(Element x, Element y) const { return reach_[x].contains(y); }

  ElementSet up(Element x) const { return up_[x]; }
  ElementSet down(Element x) const { return down_[x]; }
  ElementSet reach_from(Element x) const { return reach_[x]; }

  std::optional<Element> bottom() const { return bottom_; }
  std::optional<Element> top() const { return top_; }
  bool bounded() const { return bottom_ && top_; }
  bool transitive() const { return reach_ == up_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element e) const { return names_.at(e); }
  std::optional<Element> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Element at(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw Error(ErrorKind::UnknownName, "no element named '" + std::string(name) + "'");
  }

  RelationMatrix matrix() const {
    RelationMatrix m(size(), std::vector<bool>(size(), false));
    for (Element x = 0; x < size(); ++x)
      for (auto y : up_[x]) m[x][y] = true;
    return m;
  }

  bool operator==(const Psoset& o) const { return names_ == o.names_ && up_ == o.up_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<ElementSet> up_, down_, reach_;
  std::optional<Element> bottom_, top_;
};

inline Psoset validate_psoset(const RelationMatrix& rel, std::vector<std::string> names) {
  return Psoset::validate(rel, std::move(names));
}

inline void require_element(const Psoset& p, Element x) {
  if (x >= p.size())
    throw Error(ErrorKind::ElementOutOfRange, "element index " + std::to_string(x) + " out of range");
}

inline void require_subset(const Psoset& p, ElementSet s) {
  if (!s.subset_of(p.elements())) throw Error(ErrorKind::ElementOutOfRange, "subset exceeds the carrier");
}

inline ElementSet subset_of_names(const Psoset& p, const std::vector<std::string>& names) {
  ElementSet s;
  for (const auto& n : names) s.insert(p.at(n));
  return s;
}

inline bool reachable(const Psoset& p, Element x, Element y) {
  require_element(p, x);
  require_element(p, y);
  return p.reaches(x, y);
}

/// ≲_C for every member of C: row x lists the elements reachable from x
/// along ⊴-paths that never leave C.
inline std::vector<ElementSet> restricted_closure(const Psoset& p, ElementSet c) {
  std::vector<ElementSet> r(p.size());
  for (auto x : c) r[x] = p.up(x) & c;
  for (auto k : c)
    for (auto i : c)
      if (r[i].contains(k)) r[i] |= r[k];
  return r;
}

inline bool restricted_reachable(const Psoset& p, ElementSet c, Element x, Element y) {
  require_subset(p, c);
  if (!c.contains(x)) throw Error(ErrorKind::ElementNotInSubset, p.name(x) + " is not in the subset", {x});
  if (!c.contains(y)) throw Error(ErrorKind::ElementNotInSubset, p.name(y) + " is not in the subset", {y});
  ElementSet seen = ElementSet::single(x);
  ElementSet frontier = seen;
  while (!frontier.empty()) {
    ElementSet next;
    for (auto v : frontier) next |= p.up(v) & c;
    frontier = next - seen;
    seen |= next;
  }
  return seen.contains(y);
}

inline bool is_pseudo_chain(const Psoset& p, ElementSet c) {
  require_subset(p, c);
  if (c.empty()) throw Error(ErrorKind::EmptySubset, "pseudo-chain test needs a nonempty subset");
  auto r = restricted_closure(p, c);
  for (auto x : c)
    for (auto y : c)
      if (!r[x].contains(y) && !r[y].contains(x)) return false;
  return true;
}

inline bool is_cycle(const Psoset& p, ElementSet c) {
  require_subset(p, c);
  if (c.empty()) throw Error(ErrorKind::EmptySubset, "cycle test needs a nonempty subset");
  auto r = restricted_closure(p, c);
  for (auto x : c)
    if (!c.subset_of(r[x])) return false;
  return true;
}

/// Strongly connected components with more than one element, ordered by
/// their smallest member.
inline std::vector<ElementSet> maximal_cycles(const Psoset& p) {
  std::vector<ElementSet> out;
  ElementSet done;
  for (Element x = 0; x < p.size(); ++x) {
    if (done.contains(x)) continue;
    ElementSet scc;
    for (auto y : p.reach_from(x))
      if (p.reaches(y, x)) scc.insert(y);
    done |= scc;
    if (scc.size() > 1) out.push_back(scc);
  }
  return out;
}

inline ElementSet down_set(const Psoset& p, Element x) {
  require_element(p, x);
  return p.down(x);
}

inline ElementSet up_set(const Psoset& p, Element x) {
  require_element(p, x);
  return p.up(x);
}

inline ElementSet co_atoms(const Psoset& p) {
  if (!p.top()) throw Error(ErrorKind::NoTop, "co-atoms need a top element");
  const Element one = *p.top();
  ElementSet out;
  for (Element x = 0; x < p.size(); ++x) {
    if (x == one) continue;
    if ((p.up(x) - ElementSet{x, one}).empty()) out.insert(x);
  }
  return out;
}

inline Verdict is_transitive(const Psoset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (auto y : p.up(x))
      for (auto z : p.up(y))
        if (!p.leq(x, z)) return Verdict::fail({x, y, z});
  return Verdict::ok();
}

struct HasseDiagram {
  std::vector<std::pair<Element, Element>> cover_edges;   // (x, y): x below y
  std::vector<std::pair<Element, Element>> dashed_pairs;  // {x, y} stored with x < y
  std::vector<std::pair<Element, Element>> back_edges;    // (y, x): arrow from y to x
  bool operator==(const HasseDiagram&) const = default;
};

/// Cover edges, dashed pairs and back edges. Inside a cycle the element
/// order is taken as the drawing order, so y ⊴ x with x earlier than y and
/// x ≲ y is drawn as an arrow from y back down to x.
inline HasseDiagram hasse(const Psoset& p) {
  HasseDiagram h;
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y) continue;
      if (p.leq(x, y)) {
        if (y < x && p.reaches(y, x)) {
          h.back_edges.emplace_back(x, y);
          continue;
        }
        bool covered = true;
        for (auto z : p.up(x))
          if (z != x && z != y && p.leq(z, y)) {
            covered = false;
            break;
          }
        if (covered) h.cover_edges.emplace_back(x, y);
      } else if (x < y && !p.leq(y, x) && (p.reaches(x, y) || p.reaches(y, x))) {
        h.dashed_pairs.emplace_back(x, y);
      }
    }
  return h;
}

/// A subset viewed as a psoset in its own right, with the index map back
/// into the parent carrier.
struct Restriction {
  Psoset psoset;
  std::vector<Element> to_parent;

  std::optional<Element> from_parent(Element e) const {
    auto it = std::find(to_parent.begin(), to_parent.end(), e);
    if (it == to_parent.end()) return std::nullopt;
    return static_cast<Element>(it - to_parent.begin());
  }
};

inline Restriction induced(const Psoset& p, ElementSet a) {
  require_subset(p, a);
  if (a.empty()) throw Error(ErrorKind::EmptySubset, "cannot restrict to an empty subset");
  Restriction r;
  r.to_parent = a.to_vector();
  std::vector<std::string> names;
  for (auto e : r.to_parent) names.push_back(p.name(e));
  const std::size_t m = r.to_parent.size();
  RelationMatrix rel(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i][j] = p.leq(r.to_parent[i], r.to_parent[j]);
  r.psoset = Psoset::validate(rel, std::move(names));
  return r;
}

}  // namespace trellis
