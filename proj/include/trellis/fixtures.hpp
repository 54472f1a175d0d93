#pragma once

// Worked examples from the literature on t-norms over trellises, stored as
// explicit relation matrices together with the tables they must reproduce.
// Published t-norm tables usually omit the rows and columns of 0 and 1;
// those are stored here as "inner" tables and completed by neutrality and
// T(0, x) = 0.

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trellis/algebra.hpp"
#include "trellis/interior.hpp"

namespace trellis::fixtures {

struct Fixture {
  std::string id;
  std::string title;
  std::vector<std::string> names;
  std::vector<std::string> rows;  // one 0/1 string per element
  std::map<std::string, std::vector<std::string>> inner_tables;
  std::map<std::string, std::vector<std::string>> full_tables;
  std::map<std::string, std::string> maps;  // unary maps over all elements
  std::map<std::string, std::vector<std::string>> subsets;

  Psoset psoset() const {
    RelationMatrix rel;
    for (const auto& r : rows) {
      std::vector<bool> row;
      for (char ch : r) row.push_back(ch == '1');
      rel.push_back(std::move(row));
    }
    return Psoset::validate(rel, names);
  }
  Trellis trellis() const { return Trellis::build(psoset()); }
};

inline std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// A full n x n table written with element names.
inline BinaryOpTable full_table(const Psoset& p, const std::vector<std::string>& rows) {
  if (rows.size() != p.size()) throw Error(ErrorKind::ShapeMismatch, "full table needs one row per element");
  BinaryOpTable T(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    auto w = split_words(rows[x]);
    if (w.size() != p.size()) throw Error(ErrorKind::ShapeMismatch, "full table row has the wrong length");
    for (Element y = 0; y < p.size(); ++y) T.set(x, y, p.at(w[y]));
  }
  return T;
}

/// A table over X \ {0, 1} completed to X with T(0,x) = T(x,0) = 0 and
/// T(x,1) = T(1,x) = x.
inline BinaryOpTable inner_table(const Psoset& p, const std::vector<std::string>& rows) {
  const Element zero = require_bottom(p), one = require_top(p);
  std::vector<Element> inner;
  for (Element x = 0; x < p.size(); ++x)
    if (x != zero && x != one) inner.push_back(x);
  if (rows.size() != inner.size()) throw Error(ErrorKind::ShapeMismatch, "inner table needs one row per inner element");
  BinaryOpTable T(p.size(), zero);
  for (Element x = 0; x < p.size(); ++x) T.set_symmetric(x, one, x);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    auto w = split_words(rows[i]);
    if (w.size() != inner.size()) throw Error(ErrorKind::ShapeMismatch, "inner table row has the wrong length");
    for (std::size_t j = 0; j < inner.size(); ++j) T.set(inner[i], inner[j], p.at(w[j]));
  }
  return T;
}

inline UnaryMap map_of(const Psoset& p, std::string_view values) {
  UnaryMap m;
  for (const auto& w : split_words(values)) m.values.push_back(p.at(w));
  if (m.size() != p.size()) throw Error(ErrorKind::ShapeMismatch, "map needs one value per element");
  return m;
}

inline const std::vector<Fixture>& all() {
  static const std::vector<Fixture> list = [] {
    std::vector<Fixture> v;

    v.push_back({"cycle6",
                 "six-element psoset with the cycle {d,e,f}",
                 {"a", "b", "c", "d", "e", "f"},
                 {"111111", "010101", "001111", "000110", "000011", "000101"},
                 {},
                 {},
                 {},
                 {{"cycle", {"d", "e", "f"}}}});

    v.push_back({"cycle6-bounded",
                 "the cycle psoset with a new bottom and top",
                 {"0", "a", "b", "c", "d", "e", "f", "1"},
                 {"11111111", "01111111", "00101011", "00011111", "00001101", "00000111", "00001011", "00000001"},
                 {},
                 {},
                 {},
                 {}});

    v.push_back({"broken-chain",
                 "five-element chain 0,a,b,c,1 with a and c incomparable",
                 {"0", "a", "b", "c", "1"},
                 {"11111", "01101", "00111", "00011", "00001"},
                 {{"T1", {"0 0 0", "0 0 0", "0 0 0"}},
                  {"T2", {"0 0 0", "0 0 0", "0 0 c"}},
                  {"T3", {"0 0 0", "0 0 0", "0 0 b"}},
                  {"T4", {"0 0 0", "0 b b", "0 b b"}},
                  {"T5", {"0 0 0", "0 0 b", "0 b c"}},
                  {"T6", {"0 0 0", "0 b b", "0 b c"}}},
                 {{"F", {"0 0 0 0 0", "0 a a b b", "0 a b b b", "0 b b c c", "0 b b c 1"}}},
                 {},
                 {}});

    v.push_back({"tz-modular",
                 "eight-element modular trellis on which T_Z is a t-norm",
                 {"0", "a", "b", "c", "d", "e", "f", "1"},
                 {"11111111", "01101111", "00111111", "00011111", "00001111", "00000101", "00000011", "00000001"},
                 {},
                 {{"TZ",
                   {"0 0 0 0 0 0 0 0", "0 0 0 0 0 0 0 a", "0 0 0 0 0 0 0 b", "0 0 0 0 0 0 0 c", "0 0 0 0 0 0 0 d",
                    "0 0 0 0 0 0 d e", "0 0 0 0 0 d 0 f", "0 a b c d e f 1"}}},
                 {},
                 {}});

    v.push_back({"tz-broken",
                 "seven-element modular trellis on which T_Z is not a t-norm",
                 {"0", "a", "b", "c", "d", "e", "1"},
                 {"1111111", "0111111", "0011101", "0001011", "0000111", "0000011", "0000001"},
                 {{"Trtr", {"a a a a a", "a a a a a", "a a c b c", "a a b d d", "a a c d e"}}},
                 {},
                 {},
                 {{"rtr", {"0", "a", "c", "d", "e", "1"}}}});

    v.push_back({"two-maximal",
                 "seven-element trellis with two maximal t-norms",
                 {"0", "a", "b", "c", "d", "e", "1"},
                 {"1111111", "0110111", "0011111", "0001011", "0000101", "0000011", "0000001"},
                 {{"T1", {"0 0 0 a 0", "0 b b b b", "0 b c b c", "a b b d b", "0 b c b e"}},
                  {"T2", {"0 0 0 0 a", "0 b b b b", "0 b c b c", "0 b b d b", "a b c b e"}}},
                 {},
                 {},
                 {}});

    v.push_back({"rtr-sublattice",
                 "seven-element trellis whose right-transitive elements form a sub-lattice",
                 {"0", "a", "b", "c", "d", "e", "1"},
                 {"1111111", "0101011", "0011111", "0001111", "0000101", "0000011", "0000001"},
                 {{"Vb", {"0 0 0 0 0", "0 b b b b", "0 b b b b", "0 b b b b", "0 b b b b"}},
                  {"Vc", {"0 0 0 0 0", "0 b b b b", "0 b c c c", "0 b c c c", "0 b c c c"}},
                  {"Vd", {"0 0 0 0 0", "0 b b b b", "0 b c c c", "0 b c d c", "0 b c c c"}},
                  {"Ve", {"0 0 0 0 0", "0 b b b b", "0 b c c c", "0 b c c c", "0 b c c e"}},
                  {"greatest", {"0 0 0 0 a", "0 b b b b", "0 b c c c", "0 b c d c", "a b c c e"}}},
                 {},
                 {{"lambda", "0 0 b c d e 1"}},
                 {{"rtr", {"0", "b", "c", "d", "e", "1"}}}});

    v.push_back({"cycle8",
                 "eight-element trellis with the cycle {b,c,e,f}",
                 {"0", "a", "b", "c", "d", "e", "f", "1"},
                 {"11111111", "01111111", "00111001", "00010111", "00001001", "00000111", "00100011", "00000001"},
                 {{"Trtr",
                   {"a a a a a a", "a a a a a a", "a a a a a a", "a a a d a a", "a a a a a a", "a a a a a a"}}},
                 {},
                 {{"lambda", "0 a a a d a a 1"}},
                 {{"rtr", {"0", "a", "d", "1"}}, {"cycle", {"b", "c", "e", "f"}}}});

    return v;
  }();
  return list;
}

inline const Fixture& get(std::string_view id) {
  for (const auto& f : all())
    if (f.id == id) return f;
  throw Error(ErrorKind::UnknownName, "no fixture named '" + std::string(id) + "'");
}

}  // namespace trellis::fixtures
