#pragma once

// Plain-text psoset documents.
//
//   psoset 1
//   elements 0 a b c 1
//   relation
//   1 1 1 1 1
//   ...                      (n rows of n 0/1 entries)
//   meet / join              (optional, n rows of n names)
//   subset <name> <elements...>
//   map <name>               (next line: n names, the images in element order)
//   op <name>                (n rows of n names)
//
// '#' starts a comment. Blank lines are ignored.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trellis/constructions.hpp"
#include "trellis/fixtures.hpp"

namespace trellis {

using NameTable = std::vector<std::vector<std::string>>;

struct PsosetDocument {
  std::vector<std::string> names;
  RelationMatrix relation;
  std::optional<NameTable> meet;
  std::optional<NameTable> join;
  std::vector<std::pair<std::string, std::vector<std::string>>> subsets;
  std::vector<std::pair<std::string, std::vector<std::string>>> maps;
  std::vector<std::pair<std::string, NameTable>> ops;

  bool operator==(const PsosetDocument&) const = default;

  Psoset psoset() const { return Psoset::validate(relation, names); }

  const std::vector<std::string>* find_subset(std::string_view name) const {
    for (const auto& [k, v] : subsets)
      if (k == name) return &v;
    return nullptr;
  }
  const std::vector<std::string>* find_map(std::string_view name) const {
    for (const auto& [k, v] : maps)
      if (k == name) return &v;
    return nullptr;
  }
  const NameTable* find_op(std::string_view name) const {
    for (const auto& [k, v] : ops)
      if (k == name) return &v;
    return nullptr;
  }
};

inline BinaryOpTable resolve_table(const Psoset& p, const NameTable& t) {
  BinaryOpTable T(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) T.set(x, y, p.at(t[x][y]));
  return T;
}

inline NameTable name_table(const Psoset& p, const BinaryOpTable& T) {
  NameTable t(T.size(), std::vector<std::string>(T.size()));
  for (Element x = 0; x < T.size(); ++x)
    for (Element y = 0; y < T.size(); ++y) t[x][y] = p.name(T(x, y));
  return t;
}

inline UnaryMap resolve_map(const Psoset& p, const std::vector<std::string>& values) {
  UnaryMap m;
  for (const auto& v : values) m.values.push_back(p.at(v));
  return m;
}

inline bool valid_element_name(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch == ':' || ch == ',' || ch == '#' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') return false;
  return true;
}

namespace detail {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : lines_(tokenize(text)), last_line_(count_lines(text)) {}

  PsosetDocument parse() {
    PsosetDocument doc;
    const Line& header = next("header 'psoset 1'");
    if (header.tokens[0].text != "psoset") fail(header, 0, "expected 'psoset'");
    if (header.tokens.size() != 2 || header.tokens[1].text != "1")
      fail(header, std::min<std::size_t>(1, header.tokens.size() - 1), "unsupported format version");

    const Line& el = next("'elements' line");
    if (el.tokens[0].text != "elements") fail(el, 0, "expected 'elements'");
    if (el.tokens.size() < 2) fail(el, 0, "no elements listed");
    for (std::size_t i = 1; i < el.tokens.size(); ++i) {
      const auto& t = el.tokens[i].text;
      if (!valid_element_name(t)) fail(el, i, "invalid element name '" + t + "'");
      for (const auto& prev : doc.names)
        if (prev == t) fail(el, i, "duplicate element name '" + t + "'");
      doc.names.push_back(t);
    }
    if (doc.names.size() > kMaxElements)
      fail(el, 0, "at most " + std::to_string(kMaxElements) + " elements supported");
    names_ = &doc.names;
    const std::size_t n = doc.names.size();

    const Line& rel = next("'relation' line");
    if (rel.tokens[0].text != "relation" || rel.tokens.size() != 1) fail(rel, 0, "expected 'relation'");
    for (std::size_t r = 0; r < n; ++r) {
      const Line& row = next("relation row");
      expect_width(row, n, "relation row");
      std::vector<bool> bits;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& t = row.tokens[i].text;
        if (t != "0" && t != "1") fail(row, i, "relation entries must be 0 or 1");
        bits.push_back(t == "1");
      }
      doc.relation.push_back(std::move(bits));
    }

    while (pos_ < lines_.size()) {
      const Line& kw = lines_[pos_++];
      const std::string& key = kw.tokens[0].text;
      if (key == "meet" || key == "join") {
        if (kw.tokens.size() != 1) fail(kw, 1, "unexpected token after '" + key + "'");
        auto& slot = key == "meet" ? doc.meet : doc.join;
        if (slot) fail(kw, 0, "duplicate '" + key + "' block");
        slot = table(n, key);
      } else if (key == "subset") {
        if (kw.tokens.size() < 2) fail(kw, 0, "subset needs a name");
        check_block_name(kw, doc.find_subset(kw.tokens[1].text) != nullptr);
        std::vector<std::string> members;
        for (std::size_t i = 2; i < kw.tokens.size(); ++i) members.push_back(element(kw, i));
        doc.subsets.emplace_back(kw.tokens[1].text, std::move(members));
      } else if (key == "map") {
        if (kw.tokens.size() != 2) fail(kw, 0, "expected 'map <name>'");
        check_block_name(kw, doc.find_map(kw.tokens[1].text) != nullptr);
        const Line& row = next("map values");
        expect_width(row, n, "map");
        std::vector<std::string> values;
        for (std::size_t i = 0; i < n; ++i) values.push_back(element(row, i));
        doc.maps.emplace_back(kw.tokens[1].text, std::move(values));
      } else if (key == "op") {
        if (kw.tokens.size() != 2) fail(kw, 0, "expected 'op <name>'");
        check_block_name(kw, doc.find_op(kw.tokens[1].text) != nullptr);
        doc.ops.emplace_back(kw.tokens[1].text, table(n, "op"));
      } else {
        fail(kw, 0, "unknown block '" + key + "'");
      }
    }
    return doc;
  }

 private:
  static std::size_t count_lines(std::string_view text) {
    std::size_t c = 1;
    for (char ch : text) c += ch == '\n';
    return c;
  }

  [[noreturn]] void fail(const Line& line, std::size_t token, const std::string& msg) const {
    throw ParseError(line.number, line.tokens.empty() ? 1 : line.tokens[token].column, msg);
  }

  const Line& next(const std::string& what) {
    if (pos_ >= lines_.size()) throw ParseError(last_line_, 1, "unexpected end of input, expected " + what);
    return lines_[pos_++];
  }

  void expect_width(const Line& row, std::size_t n, const std::string& what) const {
    if (row.tokens.size() != n)
      fail(row, row.tokens.size() > n ? n : 0,
           what + " has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(n));
  }

  void check_block_name(const Line& kw, bool duplicate) const {
    if (!valid_element_name(kw.tokens[1].text)) fail(kw, 1, "invalid block name");
    if (duplicate) fail(kw, 1, "duplicate block name '" + kw.tokens[1].text + "'");
  }

  std::string element(const Line& line, std::size_t i) const {
    const auto& t = line.tokens[i].text;
    for (const auto& nm : *names_)
      if (nm == t) return t;
    fail(line, i, "unknown element '" + t + "'");
  }

  NameTable table(std::size_t n, const std::string& what) {
    NameTable t;
    for (std::size_t r = 0; r < n; ++r) {
      const Line& row = next(what + " row");
      expect_width(row, n, what + " row");
      std::vector<std::string> cells;
      for (std::size_t i = 0; i < n; ++i) cells.push_back(element(row, i));
      t.push_back(std::move(cells));
    }
    return t;
  }

  std::vector<Line> lines_;
  std::size_t last_line_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* names_ = nullptr;
};

inline void write_row(std::ostringstream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? " " : "") << cells[i];
  out << '\n';
}

}  // namespace detail

inline PsosetDocument parse_document(std::string_view text) { return detail::DocumentParser(text).parse(); }

/// Canonical form: header, relation, meet, join, then subsets, maps and ops
/// in their stored order.
inline std::string serialize(const PsosetDocument& doc) {
  std::ostringstream out;
  out << "psoset 1\nelements";
  for (const auto& n : doc.names) out << ' ' << n;
  out << "\nrelation\n";
  for (const auto& row : doc.relation) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << (row[i] ? '1' : '0');
    out << '\n';
  }
  if (doc.meet) {
    out << "meet\n";
    for (const auto& r : *doc.meet) detail::write_row(out, r);
  }
  if (doc.join) {
    out << "join\n";
    for (const auto& r : *doc.join) detail::write_row(out, r);
  }
  for (const auto& [name, members] : doc.subsets) {
    out << "subset " << name;
    for (const auto& m : members) out << ' ' << m;
    out << '\n';
  }
  for (const auto& [name, values] : doc.maps) {
    out << "map " << name << '\n';
    detail::write_row(out, values);
  }
  for (const auto& [name, t] : doc.ops) {
    out << "op " << name << '\n';
    for (const auto& r : t) detail::write_row(out, r);
  }
  return out.str();
}

inline PsosetDocument document_of(const Psoset& p) {
  PsosetDocument d;
  d.names = p.names();
  d.relation = p.matrix();
  return d;
}

/// The document form of a built-in fixture. Trellis fixtures carry their
/// meet and join tables; inner tables are stored completed.
inline PsosetDocument document_of(const fixtures::Fixture& f) {
  const Psoset p = f.psoset();
  PsosetDocument d = document_of(p);
  if (structure_kind(p).trellis) {
    const Trellis t = Trellis::build(p);
    d.meet = name_table(p, t.meet_table());
    d.join = name_table(p, t.join_table());
  }
  for (const auto& [name, members] : f.subsets) d.subsets.emplace_back(name, members);
  for (const auto& [name, values] : f.maps) d.maps.emplace_back(name, fixtures::split_words(values));
  for (const auto& [name, rows] : f.full_tables) d.ops.emplace_back(name, name_table(p, fixtures::full_table(p, rows)));
  for (const auto& [name, rows] : f.inner_tables)
    d.ops.emplace_back(name, name_table(p, fixtures::inner_table(p, rows)));
  return d;
}

}  // namespace trellis
