#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trellis/relation.hpp"

namespace trellis {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

// Longest cover-edge path from a minimal element. Cover edges never close a
// cycle because the edges that would are classified as back edges.
inline std::vector<std::size_t> cover_levels(std::size_t n, const HasseDiagram& h) {
  std::vector<std::vector<Element>> below(n);
  for (auto [x, y] : h.cover_edges) below[y].push_back(x);
  std::vector<std::size_t> level(n, 0);
  std::vector<int> state(n, 0);
  auto visit = [&](auto&& self, Element v) -> std::size_t {
    if (state[v] == 2) return level[v];
    state[v] = 1;
    std::size_t best = 0;
    for (auto u : below[v])
      if (state[u] != 1) best = std::max(best, self(self, u) + 1);
    level[v] = best;
    state[v] = 2;
    return best;
  };
  for (Element v = 0; v < n; ++v) visit(visit, v);
  return level;
}

}  // namespace detail

inline std::string export_dot(const HasseDiagram& h, const std::vector<std::string>& names,
                              const std::string& graph_name = "psoset") {
  using detail::dot_quote;
  std::ostringstream out;
  out << "digraph " << dot_quote(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (const auto& n : names) out << "  " << dot_quote(n) << ";\n";
  auto level = detail::cover_levels(names.size(), h);
  std::map<std::size_t, std::vector<Element>> ranks;
  for (Element v = 0; v < names.size(); ++v) ranks[level[v]].push_back(v);
  for (const auto& [lvl, members] : ranks) {
    if (members.size() < 2) continue;
    out << "  { rank=same;";
    for (auto v : members) out << ' ' << dot_quote(names[v]) << ';';
    out << " }\n";
  }
  for (auto [x, y] : h.cover_edges) out << "  " << dot_quote(names[x]) << " -> " << dot_quote(names[y]) << " [dir=none];\n";
  for (auto [x, y] : h.dashed_pairs)
    out << "  " << dot_quote(names[x]) << " -> " << dot_quote(names[y])
        << " [style=dashed, dir=none, constraint=false];\n";
  for (auto [y, x] : h.back_edges)
    out << "  " << dot_quote(names[y]) << " -> " << dot_quote(names[x]) << " [constraint=false];\n";
  out << "}\n";
  return out.str();
}

}  // namespace trellis
