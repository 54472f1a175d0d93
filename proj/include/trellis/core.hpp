#pragma once

// Shared vocabulary: element indices, bitset subsets, square operation
// tables, verdicts with witnesses and the error hierarchy.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trellis {

/// Dense element index into a carrier's name table.
using Element = std::size_t;

/// Carriers are limited to 64 elements so that subsets fit one machine word.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of a carrier, stored as a 64-bit mask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements) {
    for (auto e : elements) insert(e);
  }

  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(Element e) { return ElementSet(std::uint64_t{1} << e); }

  constexpr bool contains(Element e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Smallest member; undefined on the empty set.
  Element first() const { return static_cast<Element>(std::countr_zero(bits_)); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  std::vector<Element> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// A total n x n table of elements. Used for meet/join tables, candidate
/// t-norms and any other binary operation on a finite carrier.
class BinaryOpTable {
 public:
  BinaryOpTable() = default;
  explicit BinaryOpTable(std::size_t n, Element fill = 0) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Element operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  void set(Element x, Element y, Element v) { cells_[x * n_ + y] = v; }
  void set_symmetric(Element x, Element y, Element v) {
    cells_[x * n_ + y] = v;
    cells_[y * n_ + x] = v;
  }
  const std::vector<Element>& cells() const { return cells_; }

  bool operator==(const BinaryOpTable&) const = default;
  /// Row-major lexicographic order on cells; the canonical order of result lists.
  auto operator<=>(const BinaryOpTable& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return cells_ <=> o.cells_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

/// Outcome of a universally quantified check: either it holds, or the
/// lexicographically first counterexample tuple is reported.
struct Verdict {
  bool holds = true;
  std::vector<Element> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(std::vector<Element> w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
};

enum class ErrorKind {
  NotReflexive,
  NotAntisymmetric,
  DuplicateName,
  ShapeMismatch,
  ElementOutOfRange,
  UnknownName,
  ElementNotInSubset,
  EmptySubset,
  NoTop,
  NotBounded,
  NotATrellis,
  AxiomsFailed,
  NotModular,
  PreconditionViolated,
  NotAnInteriorOperator,
  BottomMissing,
  NotRightTransitiveSubset,
  NotASubTrellis,
  NotASubLattice,
  NotACoAtom,
  RangeNotRightTransitive,
  VNotATnorm,
  TargetMismatch,
  CarrierTooLarge,
  ParseError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ElementNotInSubset: return "ElementNotInSubset";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::NoTop: return "NoTop";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotATrellis: return "NotATrellis";
    case ErrorKind::AxiomsFailed: return "AxiomsFailed";
    case ErrorKind::NotModular: return "NotModular";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotAnInteriorOperator: return "NotAnInteriorOperator";
    case ErrorKind::BottomMissing: return "BottomMissing";
    case ErrorKind::NotRightTransitiveSubset: return "NotRightTransitiveSubset";
    case ErrorKind::NotASubTrellis: return "NotASubTrellis";
    case ErrorKind::NotASubLattice: return "NotASubLattice";
    case ErrorKind::NotACoAtom: return "NotACoAtom";
    case ErrorKind::RangeNotRightTransitive: return "RangeNotRightTransitive";
    case ErrorKind::VNotATnorm: return "VNotATnorm";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<Element> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  /// Offending elements, when the failure has a natural witness.
  const std::vector<Element>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<Element> witness_;
};

/// One offending tuple found while validating a relation.
struct Violation {
  ErrorKind kind;
  std::vector<Element> elements;
  bool operator==(const Violation&) const = default;
};

/// Raised by psoset validation; carries every violation, not just the first.
class ValidationError : public Error {
 public:
  ValidationError(std::vector<Violation> violations, const std::string& message)
      : Error(violations.empty() ? ErrorKind::ShapeMismatch : violations.front().kind, message,
              violations.empty() ? std::vector<Element>{} : violations.front().elements),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace trellis
