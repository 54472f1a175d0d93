#pragma once

// JSON views of library results. External output always uses element
// names, never indices.

#include <json.hpp>
#include <string>
#include <vector>

#include "trellis/element_classes.hpp"
#include "trellis/enumeration.hpp"
#include "trellis/interior.hpp"

namespace trellis::report {

using nlohmann::ordered_json;

inline constexpr const char* kSchema = "trellis-report/1";

inline ordered_json envelope(const std::string& command) {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

inline ordered_json names_of(const Psoset& p, ElementSet s) {
  auto j = ordered_json::array();
  for (auto e : s) j.push_back(p.name(e));
  return j;
}

inline ordered_json names_of(const Psoset& p, const std::vector<Element>& v) {
  auto j = ordered_json::array();
  for (auto e : v) j.push_back(p.name(e));
  return j;
}

inline ordered_json table(const Psoset& p, const BinaryOpTable& T) {
  auto j = ordered_json::array();
  for (Element x = 0; x < T.size(); ++x) {
    auto row = ordered_json::array();
    for (Element y = 0; y < T.size(); ++y) row.push_back(p.name(T(x, y)));
    j.push_back(row);
  }
  return j;
}

inline ordered_json verdict(const Psoset& p, const Verdict& v) {
  ordered_json j;
  j["holds"] = v.holds;
  if (!v.holds) j["witness"] = names_of(p, v.witness);
  return j;
}

inline ordered_json property(const Psoset& p, const Property& prop) {
  ordered_json j;
  j["applicable"] = prop.applicable;
  if (!prop.applicable) return j;
  j["holds"] = prop.holds;
  if (!prop.holds) j["witness"] = names_of(p, prop.witness);
  return j;
}

inline ordered_json tnorm_report(const Psoset& p, const TnormReport& r) {
  ordered_json j;
  j["is_tnorm"] = r.is_tnorm();
  j["commutative"] = property(p, r.commutative);
  j["associative"] = property(p, r.associative);
  j["increasing"] = property(p, r.increasing);
  j["left_increasing"] = property(p, r.left_increasing);
  j["right_increasing"] = property(p, r.right_increasing);
  j["neutral_top"] = property(p, r.neutral_top);
  j["conjunctive"] = property(p, r.conjunctive);
  j["disjunctive"] = property(p, r.disjunctive);
  j["idempotent"] = property(p, r.idempotent);
  j["meet_preserving"] = property(p, r.meet_preserving);
  return j;
}

inline ordered_json structure(const StructureKind& k) {
  return {{"meet_semi_trellis", k.meet_semi_trellis}, {"join_semi_trellis", k.join_semi_trellis},
          {"trellis", k.trellis},                     {"lattice", k.lattice},
          {"modular", k.modular},                     {"bounded", k.bounded}};
}

inline ordered_json classification(const Psoset& p, const ElementClassification& c) {
  ordered_json j;
  auto elements = ordered_json::array();
  for (Element e = 0; e < c.flags.size(); ++e) {
    ordered_json row;
    row["element"] = p.name(e);
    for (auto cls : kElementClasses) row[to_string(cls)] = c.has(e, cls);
    elements.push_back(row);
  }
  j["elements"] = elements;
  ordered_json subsets;
  for (auto cls : kElementClasses) subsets[to_string(cls)] = names_of(p, subset(c, cls));
  j["subsets"] = subsets;
  return j;
}

inline ordered_json hasse(const std::vector<std::string>& names, const HasseDiagram& h) {
  auto pairs = [&](const std::vector<std::pair<Element, Element>>& v) {
    auto a = ordered_json::array();
    for (auto [x, y] : v) a.push_back({names[x], names[y]});
    return a;
  };
  return {{"cover_edges", pairs(h.cover_edges)}, {"dashed_pairs", pairs(h.dashed_pairs)},
          {"back_edges", pairs(h.back_edges)}};
}

inline ordered_json unary_map(const Psoset& p, const UnaryMap& m) {
  ordered_json j;
  for (Element x = 0; x < m.size(); ++x) j[p.name(x)] = p.name(m(x));
  return j;
}

inline ordered_json enumeration(const Psoset& p, const EnumerationResult& r) {
  ordered_json j;
  j["count"] = r.count;
  j["limit_reached"] = r.limit_reached;
  auto tables = ordered_json::array();
  for (const auto& T : r.tnorms) tables.push_back(table(p, T));
  j["tnorms"] = tables;
  auto label = [](std::size_t i) { return "T" + std::to_string(i + 1); };
  auto maximal = ordered_json::array();
  for (auto i : r.maximal) maximal.push_back(label(i));
  j["maximal"] = maximal;
  j["greatest"] = r.greatest ? ordered_json(label(*r.greatest)) : ordered_json(nullptr);
  j["stats"] = {{"nodes", r.stats.nodes},
                {"monotonicity_prunes", r.stats.monotonicity_prunes},
                {"associativity_prunes", r.stats.associativity_prunes},
                {"leaf_rejections", r.stats.leaf_rejections}};
  return j;
}

}  // namespace trellis::report
