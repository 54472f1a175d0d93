#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trellis/binary_op.hpp"

namespace trellis {

struct EnumerationOptions {
  std::optional<std::size_t> limit;  // stop after this many t-norms
  std::size_t cap = 10;              // refuse larger carriers
};

struct SearchStats {
  std::uint64_t nodes = 0;                 // value assignments tried
  std::uint64_t monotonicity_prunes = 0;   // assignments refuted by increasingness
  std::uint64_t associativity_prunes = 0;  // assignments refuted by associativity
  std::uint64_t leaf_rejections = 0;       // complete tables failing the final check
};

struct EnumerationResult {
  std::vector<BinaryOpTable> tnorms;  // row-major lexicographic order
  std::vector<std::size_t> maximal;
  std::optional<std::size_t> greatest;
  std::size_t count = 0;
  bool limit_reached = false;
  SearchStats stats;
};

namespace detail {

// Backtracking over the cells T(x,y), x ≤ y, x,y ≠ 1. Row and column of 1
// are fixed by neutrality. Domains start at ↓x ∩ ↓y and shrink by forward
// checking every increasingness constraint against the assigned value.
class TnormSearch {
 public:
  TnormSearch(const Psoset& p, const EnumerationOptions& opts) : p_(p), opts_(opts), n_(p.size()) {
    one_ = *p.top();
    cell_of_.assign(n_ * n_, kNone);
    val_.assign(n_ * n_, kUnset);
    for (Element x = 0; x < n_; ++x) {
      set_val(x, one_, x);
      for (Element y = x; y < n_; ++y) {
        if (x == one_ || y == one_) continue;
        cell_of_[x * n_ + y] = cell_of_[y * n_ + x] = cells_.size();
        cells_.push_back({x, y});
        domain_.push_back(p.down(x) & p.down(y));
      }
    }
    build_constraints();
  }

  bool consistent_root() const { return root_ok_; }

  void run(EnumerationResult& out) {
    out_ = &out;
    if (!root_ok_) return;
    // Fail-first: smallest domain after unary propagation, ties by cell index.
    order_.resize(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return domain_[a].size() < domain_[b].size(); });
    search(0);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr Element kUnset = static_cast<Element>(-1);

  struct Cell {
    Element x, y;
  };

  Element val(Element x, Element y) const { return val_[x * n_ + y]; }
  void set_val(Element x, Element y, Element v) {
    val_[x * n_ + y] = v;
    val_[y * n_ + x] = v;
  }

  void build_constraints() {
    above_.assign(cells_.size(), {});
    below_.assign(cells_.size(), {});
    std::vector<std::uint8_t> seen(cells_.size() * cells_.size(), 0);
    for (Element x = 0; x < n_; ++x)
      for (auto y : p_.up(x))
        for (Element z = 0; z < n_; ++z)
          for (auto t : p_.up(z)) {
            // T(x,z) ⊴ T(y,t)
            const std::size_t a = cell_of_[x * n_ + z], b = cell_of_[y * n_ + t];
            if (a == kNone && b == kNone) {
              if (!p_.leq(val(x, z), val(y, t))) root_ok_ = false;
            } else if (a == kNone) {
              domain_[b] &= p_.up(val(x, z));
            } else if (b == kNone) {
              domain_[a] &= p_.down(val(y, t));
            } else if (a != b && !seen[a * cells_.size() + b]) {
              seen[a * cells_.size() + b] = 1;
              above_[a].push_back(b);
              below_[b].push_back(a);
            }
          }
    for (const auto& d : domain_)
      if (d.empty()) root_ok_ = false;
  }

  bool done() const { return opts_.limit && out_->tnorms.size() >= *opts_.limit; }

  void search(std::size_t depth) {
    if (done()) {
      out_->limit_reached = true;
      return;
    }
    if (depth == order_.size()) {
      BinaryOpTable T(n_);
      for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y) T.set(x, y, val(x, y));
      if (is_tnorm(p_, T))
        out_->tnorms.push_back(std::move(T));
      else
        ++out_->stats.leaf_rejections;
      return;
    }
    const std::size_t c = order_[depth];
    const auto [x, y] = cells_[c];
    for (auto v : domain_[c]) {
      ++out_->stats.nodes;
      const std::size_t mark = trail_.size();
      set_val(x, y, v);
      if (!propagate(c, v)) {
        ++out_->stats.monotonicity_prunes;
      } else if (!associative_around(x, y)) {
        ++out_->stats.associativity_prunes;
      } else {
        search(depth + 1);
      }
      set_val(x, y, kUnset);
      undo(mark);
      if (done()) {
        out_->limit_reached = true;
        return;
      }
    }
  }

  void restrict(std::size_t cell, ElementSet mask) {
    trail_.push_back({cell, domain_[cell]});
    domain_[cell] &= mask;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      domain_[trail_.back().cell] = trail_.back().domain;
      trail_.pop_back();
    }
  }

  bool propagate(std::size_t c, Element v) {
    for (auto b : above_[c]) {
      const auto [bx, by] = cells_[b];
      if (Element w = val(bx, by); w != kUnset) {
        if (!p_.leq(v, w)) return false;
      } else {
        restrict(b, p_.up(v));
        if (domain_[b].empty()) return false;
      }
    }
    for (auto b : below_[c]) {
      const auto [bx, by] = cells_[b];
      if (Element w = val(bx, by); w != kUnset) {
        if (!p_.leq(w, v)) return false;
      } else {
        restrict(b, p_.down(v));
        if (domain_[b].empty()) return false;
      }
    }
    return true;
  }

  // false only when both sides of (x∘y)∘z = x∘(y∘z) are known and differ
  bool triple_ok(Element x, Element y, Element z) const {
    const Element xy = val(x, y);
    if (xy == kUnset) return true;
    const Element yz = val(y, z);
    if (yz == kUnset) return true;
    const Element l = val(xy, z);
    if (l == kUnset) return true;
    const Element r = val(x, yz);
    return r == kUnset || l == r;
  }

  // Every triple in which the freshly assigned cell {a,b} is used, either
  // as an inner product or as the outer product.
  bool associative_around(Element a, Element b) const {
    for (Element z = 0; z < n_; ++z)
      if (!triple_ok(a, b, z) || !triple_ok(b, a, z) || !triple_ok(z, a, b) || !triple_ok(z, b, a)) return false;
    for (Element u = 0; u < n_; ++u)
      for (Element w = 0; w < n_; ++w) {
        const Element uw = val(u, w);
        if (uw == a && !triple_ok(u, w, b)) return false;
        if (uw == b && !triple_ok(u, w, a)) return false;
        if (uw == a && !triple_ok(b, u, w)) return false;
        if (uw == b && !triple_ok(a, u, w)) return false;
      }
    return true;
  }

  struct TrailEntry {
    std::size_t cell;
    ElementSet domain;
  };

  const Psoset& p_;
  EnumerationOptions opts_;
  std::size_t n_;
  Element one_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::size_t> cell_of_;
  std::vector<Element> val_;
  std::vector<ElementSet> domain_;
  std::vector<std::vector<std::size_t>> above_, below_;
  std::vector<std::size_t> order_;
  std::vector<TrailEntry> trail_;
  bool root_ok_ = true;
  EnumerationResult* out_ = nullptr;
};

}  // namespace detail

inline void fill_order_summary(const Psoset& p, EnumerationResult& r) {
  const std::size_t k = r.tnorms.size();
  r.count = k;
  r.maximal.clear();
  r.greatest.reset();
  for (std::size_t i = 0; i < k; ++i) {
    bool maximal = true, greatest = true;
    for (std::size_t j = 0; j < k && (maximal || greatest); ++j) {
      if (i == j) continue;
      if (pointwise_leq(p, r.tnorms[i], r.tnorms[j])) maximal = false;
      if (!pointwise_leq(p, r.tnorms[j], r.tnorms[i])) greatest = false;
    }
    if (maximal) r.maximal.push_back(i);
    if (greatest) r.greatest = i;
  }
}

/// Every t-norm on a bounded psoset, in canonical order.
inline EnumerationResult enumerate(const Psoset& p, const EnumerationOptions& opts = {}) {
  require_top(p);
  if (p.size() > opts.cap)
    throw Error(ErrorKind::CarrierTooLarge,
                std::to_string(p.size()) + " elements exceed the enumeration cap of " + std::to_string(opts.cap));
  EnumerationResult r;
  detail::TnormSearch search(p, opts);
  search.run(r);
  std::sort(r.tnorms.begin(), r.tnorms.end());
  fill_order_summary(p, r);
  return r;
}

inline EnumerationResult enumerate(const Trellis& t, const EnumerationOptions& opts = {}) {
  return enumerate(t.order(), opts);
}

/// Nothing enumerated lies strictly above T.
inline bool is_maximal(const Psoset& p, const BinaryOpTable& T, const EnumerationOptions& opts = {}) {
  auto r = enumerate(p, opts);
  for (const auto& other : r.tnorms)
    if (other != T && pointwise_leq(p, T, other)) return false;
  return true;
}

inline std::optional<BinaryOpTable> greatest(const Psoset& p, const EnumerationOptions& opts = {}) {
  auto r = enumerate(p, opts);
  if (!r.greatest) return std::nullopt;
  return r.tnorms[*r.greatest];
}

struct OrderDiagram {
  Psoset order;  // pointwise order, elements named T1..Tk
  HasseDiagram diagram;
};

/// The pointwise relation among the enumerated t-norms is only a
/// pseudo-order in general, so the diagram is extracted without assuming
/// transitivity.
inline OrderDiagram order_diagram(const Psoset& p, const EnumerationResult& r) {
  const std::size_t k = r.tnorms.size();
  if (k == 0) return {};
  RelationMatrix rel(k, std::vector<bool>(k, false));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("T" + std::to_string(i + 1));
    for (std::size_t j = 0; j < k; ++j) rel[i][j] = pointwise_leq(p, r.tnorms[i], r.tnorms[j]);
  }
  OrderDiagram d;
  d.order = Psoset::validate(rel, std::move(names));
  d.diagram = hasse(d.order);
  return d;
}

}  // namespace trellis
