#pragma once

// Acceptance criteria over the built-in fixtures plus the seeded oracle and
// property corpora. Shared by the acceptance test binary and the CLI.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trellis/constructions.hpp"
#include "trellis/enumeration.hpp"
#include "trellis/fixtures.hpp"
#include "trellis/verify/generators.hpp"
#include "trellis/verify/oracle.hpp"

namespace trellis::verify {

// Pinned corpus sizes and seeds. Every comparison below is exact.
inline constexpr std::uint64_t kOracleSeed = 0x5eed0006;
inline constexpr std::uint64_t kPropertySeed = 0x5eed0010;
inline constexpr std::size_t kMinOracleInstances = 200;
inline constexpr std::size_t kMinPropertyTrellises = 500;
inline constexpr std::size_t kMaxPropertySize = 7;

struct AcceptanceOptions {
  std::uint64_t oracle_seed = kOracleSeed;
  std::uint64_t property_seed = kPropertySeed;
  std::size_t oracle_instances = kMinOracleInstances;
  std::size_t property_trellises = kMinPropertyTrellises;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> failures;
  std::string summary;
  double seconds = 0;
};

/// Collects failed expectations with readable messages.
class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}
  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      r_.passed = false;
      r_.failures.push_back(what);
    }
    return ok;
  }

 private:
  CriterionResult& r_;
};

inline std::string names_str(const Psoset& p, const std::vector<Element>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + p.name(v[i]);
  return s + ")";
}

inline std::string set_str(const Psoset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (auto e : s) {
    out += (first ? "" : ",") + p.name(e);
    first = false;
  }
  return out + "}";
}

inline std::vector<Element> elems(const Psoset& p, std::initializer_list<const char*> names) {
  std::vector<Element> v;
  for (auto n : names) v.push_back(p.at(n));
  return v;
}

inline ElementSet elem_set(const Psoset& p, const std::vector<std::string>& names) {
  ElementSet s;
  for (const auto& n : names) s.insert(p.at(n));
  return s;
}

// 1. Table-1 psoset and Table-9 trellis with their maximal cycles.
inline void acc_fixture_validation(Checker& c) {
  const auto& f1 = fixtures::get("cycle6");
  const Psoset p1 = f1.psoset();
  auto cyc1 = maximal_cycles(p1);
  c.expect(cyc1 == std::vector<ElementSet>{elem_set(p1, {"d", "e", "f"})}, "cycle6 maximal cycles are [{d,e,f}]");
  c.expect(is_cycle(p1, elem_set(p1, {"d", "e", "f"})), "cycle6 {d,e,f} is a cycle");
  const auto& f9 = fixtures::get("cycle8");
  const Psoset p9 = f9.psoset();
  c.expect(structure_kind(p9).trellis, "cycle8 relation is a trellis");
  c.expect(maximal_cycles(p9) == std::vector<ElementSet>{elem_set(p9, {"b", "c", "e", "f"})},
           "cycle8 maximal cycles are [{b,c,e,f}]");
}

// 2. Meet of the Fig-2 trellis and the operation F.
inline void acc_increasing_witnesses(Checker& c) {
  const auto& f = fixtures::get("broken-chain");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  auto rm = check(t, t.meet_table());
  auto w = elems(p, {"b", "c", "a"});
  c.expect(rm.left_increasing.applicable && !rm.left_increasing.holds, "meet is not left-increasing");
  c.expect(rm.left_increasing.witness == w, "meet left-increasing witness is (b,c,a), got " +
                                                names_str(p, rm.left_increasing.witness));
  c.expect(!rm.right_increasing.holds, "meet is not right-increasing");
  c.expect(rm.right_increasing.witness == w, "meet right-increasing witness is (b,c,a), got " +
                                                 names_str(p, rm.right_increasing.witness));
  const auto F = fixtures::full_table(p, f.full_tables.at("F"));
  auto rf = check(t, F);
  c.expect(rf.left_increasing.holds && rf.right_increasing.holds, "F is left- and right-increasing");
  c.expect(!rf.increasing.holds, "F is not increasing");
  c.expect(rf.increasing.witness == elems(p, {"a", "1", "b", "c"}),
           "F increasing witness is (a,1,b,c), got " + names_str(p, rf.increasing.witness));
}

// 3. T_Z and its side condition.
inline void acc_tz(Checker& c) {
  const auto& f = fixtures::get("tz-modular");
  const Trellis t = f.trellis();
  c.expect(is_modular(t).holds, "tz-modular trellis is modular");
  c.expect(condition4(t).holds, "tz-modular satisfies the T_Z condition");
  const auto expected = fixtures::full_table(t.order(), f.full_tables.at("TZ"));
  const auto tz = t_z(t);
  std::size_t diff = 0;
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y) diff += tz(x, y) != expected(x, y);
  c.expect(diff == 0, "tz-modular T_Z matches the published table (" + std::to_string(diff) + " cells differ)");
  c.expect(check(t, tz).is_tnorm(), "tz-modular T_Z is a t-norm");

  const Trellis t4 = fixtures::get("tz-broken").trellis();
  c.expect(is_modular(t4).holds, "tz-broken trellis is modular");
  auto c4 = condition4(t4);
  c.expect(!c4.holds, "tz-broken violates the T_Z condition");
  c.expect(!check(t4, t_z(t4)).increasing.holds, "tz-broken T_Z is not increasing");
}

// 4. The six t-norms of the Fig-2 trellis and their order diagram.
inline void acc_six_tnorms(Checker& c) {
  const auto& f = fixtures::get("broken-chain");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  std::map<std::string, BinaryOpTable> published;
  for (const auto& [name, rows] : f.inner_tables) published[name] = fixtures::inner_table(p, rows);
  c.expect(published.at("T1") == t_drastic(p), "T1 is the drastic t-norm");
  c.expect(published.at("T1") == t_z(t), "T1 is T_Z");
  c.expect(published.at("T2") == t_coatom(p, p.at("c")), "T2 is the co-atom t-norm of c");

  auto r = enumerate(t);
  c.expect(r.count == 6, "enumeration finds 6 t-norms, found " + std::to_string(r.count));
  std::vector<std::string> label(r.count);
  for (std::size_t i = 0; i < r.count; ++i)
    for (const auto& [name, T] : published)
      if (T == r.tnorms[i]) label[i] = name;
  std::set<std::string> found(label.begin(), label.end());
  c.expect(found == std::set<std::string>{"T1", "T2", "T3", "T4", "T5", "T6"}, "enumerated set equals {T1..T6}");
  c.expect(r.greatest && label[*r.greatest] == "T6", "T6 is the greatest t-norm");
  if (found.size() != 6 || r.count != 6) return;
  auto d = order_diagram(p, r);
  std::set<std::pair<std::string, std::string>> covers;
  for (auto [x, y] : d.diagram.cover_edges) covers.emplace(label[x], label[y]);
  const std::set<std::pair<std::string, std::string>> expected{{"T1", "T3"}, {"T3", "T2"}, {"T3", "T4"},
                                                               {"T2", "T5"}, {"T4", "T6"}, {"T5", "T6"}};
  c.expect(covers == expected, "order diagram covers match the published diagram");
  c.expect(d.diagram.dashed_pairs.empty() && d.diagram.back_edges.empty(), "order diagram has no dashed or back edges");
}

// 5. Ex-4.9: two maximal t-norms and no greatest one.
inline void acc_no_greatest(Checker& c) {
  const auto& f = fixtures::get("two-maximal");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const auto T1 = fixtures::inner_table(p, f.inner_tables.at("T1"));
  const auto T2 = fixtures::inner_table(p, f.inner_tables.at("T2"));
  auto r = enumerate(t);
  auto index_of = [&](const BinaryOpTable& T) -> std::optional<std::size_t> {
    auto it = std::find(r.tnorms.begin(), r.tnorms.end(), T);
    if (it == r.tnorms.end()) return std::nullopt;
    return static_cast<std::size_t>(it - r.tnorms.begin());
  };
  auto i1 = index_of(T1), i2 = index_of(T2);
  c.expect(i1.has_value(), "published T1 is enumerated");
  c.expect(i2.has_value(), "published T2 is enumerated");
  auto is_max = [&](std::optional<std::size_t> i) {
    return i && std::find(r.maximal.begin(), r.maximal.end(), *i) != r.maximal.end();
  };
  c.expect(is_max(i1) && is_max(i2), "T1 and T2 are both maximal");
  c.expect(!r.greatest.has_value(), "there is no greatest t-norm");

  const Element a = p.at("a"), e = p.at("e"), d = p.at("d");
  auto bumped = T1;
  bumped.set_symmetric(a, e, a);
  c.expect(bumped(bumped(a, e), d) != bumped(a, bumped(e, d)), "T1 with T(a,e)=a breaks associativity on (a,e,d)");
  bool extension_found = false;
  for (const auto& T : r.tnorms)
    if (pointwise_leq(p, T1, T) && T(a, e) == a) extension_found = true;
  c.expect(!extension_found, "no t-norm above T1 has T(a,e)=a");
}

// 6. Pruned enumeration equals the brute-force oracle.
inline void acc_oracle(Checker& c, const AcceptanceOptions& o, std::string& summary) {
  // Every bounded psoset on at most five elements with 0 first and 1 last.
  std::vector<Psoset> base;
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::size_t m = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::size_t states = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) states *= 3;
    for (std::size_t code = 0; code < states; ++code) {
      RelationMatrix inner(m, std::vector<bool>(m, false));
      for (std::size_t i = 0; i < m; ++i) inner[i][i] = true;
      std::size_t rest = code;
      for (auto [i, j] : pairs) {
        if (rest % 3 == 1) inner[i][j] = true;
        if (rest % 3 == 2) inner[j][i] = true;
        rest /= 3;
      }
      base.push_back(Psoset::validate(with_bounds(inner), bounded_names(n)));
    }
  }
  // Fill the corpus with random relabelings so 0 and 1 sit at arbitrary
  // indices and the search order is exercised.
  std::vector<Psoset> corpus = base;
  Random rng(o.oracle_seed);
  while (corpus.size() < o.oracle_instances) {
    const Psoset& src = base[rng.below(base.size())];
    const std::size_t n = src.size();
    std::vector<Element> perm(n);
    for (Element i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    RelationMatrix rel(n, std::vector<bool>(n, false));
    std::vector<std::string> names(n);
    for (Element x = 0; x < n; ++x) {
      names[perm[x]] = src.name(x);
      for (Element y = 0; y < n; ++y) rel[perm[x]][perm[y]] = src.leq(x, y);
    }
    corpus.push_back(Psoset::validate(rel, names));
  }
  std::size_t mismatches = 0, trellises = 0, total_tnorms = 0, by_size[6] = {0, 0, 0, 0, 0, 0};
  std::uint64_t nodes = 0, tables = 0;
  for (const auto& p : corpus) {
    auto oracle = brute_force_tnorms(p);
    auto pruned = enumerate(p);
    ++by_size[p.size()];
    trellises += structure_kind(p).trellis;
    total_tnorms += oracle.tnorms.size();
    nodes += pruned.stats.nodes;
    tables += oracle.tables;
    if (oracle.tnorms != pruned.tnorms) {
      ++mismatches;
      c.expect(false, "enumeration differs from the oracle on a " + std::to_string(p.size()) + "-element carrier");
    }
  }
  c.expect(corpus.size() >= kMinOracleInstances, "corpus has at least 200 instances");
  std::ostringstream s;
  s << corpus.size() << " carriers (n=2..5: " << by_size[2] << "/" << by_size[3] << "/" << by_size[4] << "/"
    << by_size[5] << ", " << trellises << " trellises), " << total_tnorms << " t-norms, " << mismatches
    << " mismatches; search nodes " << nodes << " vs oracle tables " << tables;
  summary = s.str();
}

// 7. Ex-6.1 interior operator, the four V_a constructions and the greatest t-norm.
inline void acc_interior_lambda(Checker& c) {
  const auto& f = fixtures::get("rtr-sublattice");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const ElementSet rtr = subset(classify(t), ElementClass::rtr);
  c.expect(rtr == elem_set(p, f.subsets.at("rtr")), "X^rtr = {0,b,c,d,e,1}, got " + set_str(p, rtr));
  c.expect(is_sub_lattice(t, rtr).holds, "X^rtr is a sub-lattice");
  const UnaryMap l = lambda(t, rtr);
  c.expect(l == fixtures::map_of(p, f.maps.at("lambda")), "lambda matches the published table");
  c.expect(validate_interior(t, l).interior(), "lambda is an interior operator");
  for (const char* a : {"b", "c", "d", "e"}) {
    const std::string key = std::string("V") + a;
    const auto T = t_lambda(t, rtr, v_scaled(t, rtr, p.at(a)));
    c.expect(T == fixtures::inner_table(p, f.inner_tables.at(key)), "T^[rtr,V_" + std::string(a) + "] matches");
    c.expect(check(t, T).is_tnorm(), "T^[rtr,V_" + std::string(a) + "] is a t-norm");
  }
  const auto G = fixtures::inner_table(p, f.inner_tables.at("greatest"));
  c.expect(check(t, G).is_tnorm(), "published greatest table is a t-norm");
  auto r = enumerate(t);
  c.expect(r.greatest && r.tnorms[*r.greatest] == G, "enumeration confirms it is the greatest t-norm");
}

// 8. Ex-6.3 cycle example.
inline void acc_cycle_example(Checker& c) {
  const auto& f = fixtures::get("cycle8");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const ElementSet rtr = subset(classify(t), ElementClass::rtr);
  c.expect(rtr == elem_set(p, f.subsets.at("rtr")), "X^rtr = {0,a,d,1}, got " + set_str(p, rtr));
  c.expect(is_sub_trellis(t, rtr).holds, "X^rtr is a sub-trellis");
  c.expect(lambda(t, rtr) == fixtures::map_of(p, f.maps.at("lambda")), "lambda matches the published table");
  const auto T = t_lambda_meet(t, rtr);
  c.expect(T == fixtures::inner_table(p, f.inner_tables.at("Trtr")), "T^[rtr] matches the published table");
  c.expect(check(t, T).is_tnorm(), "T^[rtr] is a t-norm");
}

// 9. Ex-6.7 counterexample.
inline void acc_counterexample(Checker& c) {
  const auto& f = fixtures::get("tz-broken");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const ElementSet rtr = subset(classify(t), ElementClass::rtr);
  c.expect(rtr == elem_set(p, f.subsets.at("rtr")), "X^rtr = {0,a,c,d,e,1}, got " + set_str(p, rtr));
  auto v = is_meet_sub_trellis(t, rtr);
  c.expect(!v.holds && v.witness == elems(p, {"c", "d"}), "meet-closure fails at (c,d)");
  c.expect(t.meet(p.at("c"), p.at("d")) == p.at("b"), "c meet d = b");
  bool refused = false;
  try {
    (void)t_lambda_meet(t, rtr);
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::NotASubTrellis;
  }
  c.expect(refused, "checked construction refuses the non-sub-trellis");
  const auto T = t_lambda_meet_unchecked(t, rtr);
  c.expect(T == fixtures::inner_table(p, f.inner_tables.at("Trtr")), "unchecked T^[rtr] matches the published table");
  auto r = check(t, T);
  c.expect(!r.increasing.holds, "T^[rtr] is not increasing");
  if (r.increasing.witness.size() == 4) {
    auto& w = r.increasing.witness;
    c.expect(t.leq(w[0], w[1]) && t.leq(w[2], w[3]) && !t.leq(T(w[0], w[2]), T(w[1], w[3])),
             "reported witness " + names_str(p, w) + " is a genuine violation");
  }
  const Element cc = p.at("c"), d = p.at("d"), e = p.at("e");
  c.expect(t.leq(cc, e) && t.leq(d, e) && T(cc, d) == p.at("b") && !t.leq(T(cc, d), T(e, e)),
           "T(c,d) = b is not below e = T(e,e)");
}

// 10. Property suites over random trellises.
struct PropertyTally {
  std::size_t trellises = 0, proper = 0, modular = 0, pseudo_chain = 0, with_cycles = 0;
  std::size_t interior_checks = 0, lambda_checks = 0, dominance_checks = 0;
  std::map<std::string, std::size_t> violations;
};

inline std::vector<ElementSet> subsets_containing(ElementSet universe, Element must) {
  std::vector<ElementSet> out;
  const auto rest = (universe - ElementSet::single(must)).to_vector();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
    ElementSet s = ElementSet::single(must);
    for (std::size_t i = 0; i < rest.size(); ++i)
      if ((mask >> i) & 1U) s.insert(rest[i]);
    out.push_back(s);
  }
  return out;
}

/// Every interior operator on t, by exhaustive search over maps.
inline std::vector<UnaryMap> all_interior_operators(const Trellis& t) {
  const std::size_t n = t.size();
  std::vector<UnaryMap> out;
  UnaryMap m{std::vector<Element>(n, 0)};
  // Contractive maps only: each image ranges over ↓x.
  std::vector<std::vector<Element>> choices(n);
  for (Element x = 0; x < n; ++x) choices[x] = t.order().down(x).to_vector();
  std::vector<std::size_t> digit(n, 0);
  for (Element x = 0; x < n; ++x) m.values[x] = choices[x][0];
  while (true) {
    if (validate_interior(t, m).interior()) out.push_back(m);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++digit[i] < choices[i].size()) {
        m.values[i] = choices[i][digit[i]];
        break;
      }
      digit[i] = 0;
      m.values[i] = choices[i][0];
    }
    if (i == n) break;
  }
  return out;
}

inline void property_suite(const Trellis& t, PropertyTally& tally) {
  auto bad = [&](const std::string& what) { ++tally.violations[what]; };
  const Psoset& p = t.order();
  const std::size_t n = t.size();
  const auto cls = classify(t);
  auto X = [&](ElementClass c) { return subset(cls, c); };
  const ElementSet all = p.elements();
  const bool lattice = p.transitive();
  const bool modular = is_modular(t).holds;
  const bool chain = is_pseudo_chain(p, all);
  ++tally.trellises;
  tally.proper += !lattice;
  tally.modular += modular;
  tally.pseudo_chain += chain;
  tally.with_cycles += !maximal_cycles(p).empty();

  // Inclusion chains.
  if (!(X(ElementClass::dis).subset_of(X(ElementClass::ass)) &&
        X(ElementClass::ass).subset_of(X(ElementClass::meet_ass)) &&
        X(ElementClass::meet_ass).subset_of(X(ElementClass::tr)) && X(ElementClass::tr).subset_of(X(ElementClass::rtr)) &&
        X(ElementClass::ass).subset_of(X(ElementClass::join_ass)) &&
        X(ElementClass::join_ass).subset_of(X(ElementClass::tr)) && X(ElementClass::tr).subset_of(X(ElementClass::ltr))))
    bad("inclusion chains");
  for (Element e = 0; e < n; ++e)
    if (cls.flags[e].meet_dis != cls.flags[e].join_dis) bad("meet-distributive iff join-distributive");

  // Closure of X^ltr under meet and X^rtr under join; associativity inside.
  const ElementSet rtr = X(ElementClass::rtr), ltr = X(ElementClass::ltr);
  if (!is_meet_sub_trellis(t, ltr).holds) bad("X^ltr meet-closed");
  if (!is_join_sub_trellis(t, rtr).holds) bad("X^rtr join-closed");
  for (auto x : rtr)
    for (auto y : rtr)
      for (auto z : rtr)
        if (t.join(x, t.join(y, z)) != t.join(t.join(x, y), z)) bad("join associative on X^rtr");
  for (auto x : ltr)
    for (auto y : ltr)
      for (auto z : ltr)
        if (t.meet(x, t.meet(y, z)) != t.meet(t.meet(x, y), z)) bad("meet associative on X^ltr");

  // Equality chain on modular trellises and pseudo-chains.
  if ((modular || chain) &&
      !(X(ElementClass::ass) == X(ElementClass::meet_ass) && X(ElementClass::meet_ass) == X(ElementClass::join_ass) &&
        X(ElementClass::join_ass) == X(ElementClass::tr)))
    bad("ass = meet-ass = join-ass = tr on modular or pseudo-chain");

  // Meet increasing, transitivity and meet associativity coincide.
  const bool inc = check(p, t.meet_table()).increasing.holds;
  const bool assoc = meet_associative(t).holds;
  if (inc != lattice || assoc != lattice) bad("meet increasing iff transitive iff meet associative");

  // Interior operators: λ_A for every sub-trellis A of X^rtr containing 0,
  // and every interior operator when the carrier is small.
  const Element zero = *p.bottom(), one = *p.top();
  std::vector<UnaryMap> interiors;
  for (auto a : subsets_containing(rtr, zero)) {
    if (!is_sub_trellis(t, a).holds) continue;
    ++tally.lambda_checks;
    const UnaryMap l = lambda(t, a);
    auto rep = validate_interior(t, l);
    if (!rep.interior() || image(l) != a) bad("lambda_A interior with range A");
    interiors.push_back(l);
  }
  if (n <= 5)
    for (auto& m : all_interior_operators(t))
      if (image(m).subset_of(rtr)) interiors.push_back(std::move(m));

  for (const auto& I : interiors) {
    const ElementSet R = image(I);
    std::vector<SubOperation> vs;
    vs.push_back(restricted_meet(t, R));
    for (auto a : R) vs.push_back(v_scaled(t, R, a));
    const Restriction sub = induced(p, R);
    for (const auto& V : enumerate(sub.psoset).tnorms) vs.push_back({sub, V});
    for (const auto& V : vs) {
      ++tally.interior_checks;
      BinaryOpTable T;
      try {
        T = t_interior(t, I, V);
      } catch (const Error&) {
        bad("T^{I,V} preconditions accepted");
        continue;
      }
      if (!check(t, T).is_tnorm()) bad("T^{I,V} is a t-norm");
    }
    const auto TI = t_interior_meet(t, I);
    auto rep = check(t, TI);
    if (!rep.is_tnorm()) bad("T^I is a t-norm");
    if (!rep.meet_preserving.holds) bad("T^I is meet-preserving");
  }

  // Pseudo-chains: every A ⊆ X^rtr with 0 gives T^[A] ⊴ T^[X^rtr].
  if (chain) {
    BinaryOpTable top_op;
    try {
      top_op = t_lambda_meet(t, rtr);
    } catch (const Error&) {
      bad("X^rtr is a sub-trellis of a pseudo-chain");
      return;
    }
    for (auto a : subsets_containing(rtr, zero)) {
      ++tally.dominance_checks;
      try {
        if (!pointwise_leq(p, t_lambda_meet(t, a), top_op)) bad("T^[A] below T^[X^rtr] on pseudo-chains");
      } catch (const Error&) {
        bad("A within X^rtr is a sub-trellis of a pseudo-chain");
      }
    }
  }
  (void)one;
}

inline void acc_properties(Checker& c, const AcceptanceOptions& o, std::string& summary) {
  Random rng(o.property_seed);
  PropertyTally tally;
  for (std::size_t i = 0; i < o.property_trellises; ++i) property_suite(random_trellis(rng, kMaxPropertySize), tally);
  for (const auto& [what, count] : tally.violations)
    c.expect(false, what + ": " + std::to_string(count) + " violation(s)");
  c.expect(tally.trellises >= kMinPropertyTrellises, "at least 500 trellises checked");
  c.expect(tally.proper > 0 && tally.modular > 0 && tally.pseudo_chain > 0 && tally.with_cycles > 0,
           "corpus contains proper, modular, pseudo-chain and cyclic trellises");
  std::ostringstream s;
  s << tally.trellises << " trellises (" << tally.proper << " proper, " << tally.modular << " modular, "
    << tally.pseudo_chain << " pseudo-chains, " << tally.with_cycles << " with cycles); " << tally.interior_checks
    << " T^{I,V} checks, " << tally.lambda_checks << " lambda checks, " << tally.dominance_checks
    << " dominance checks";
  summary = s.str();
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o = {},
                                                   const std::function<void(const CriterionResult&)>& on_done = {}) {
  using Fn = std::function<void(Checker&, std::string&)>;
  const std::vector<std::pair<std::string, Fn>> criteria = {
      {"fixture validation and maximal cycles", [](Checker& c, std::string&) { acc_fixture_validation(c); }},
      {"increasingness flags and witnesses", [](Checker& c, std::string&) { acc_increasing_witnesses(c); }},
      {"T_Z reproduction and its side condition", [](Checker& c, std::string&) { acc_tz(c); }},
      {"six t-norms and their order diagram", [](Checker& c, std::string&) { acc_six_tnorms(c); }},
      {"maximal t-norms without a greatest one", [](Checker& c, std::string&) { acc_no_greatest(c); }},
      {"pruned enumeration equals brute-force oracle", [&](Checker& c, std::string& s) { acc_oracle(c, o, s); }},
      {"interior operator and V_a constructions", [](Checker& c, std::string&) { acc_interior_lambda(c); }},
      {"cycle example", [](Checker& c, std::string&) { acc_cycle_example(c); }},
      {"non-sub-trellis counterexample", [](Checker& c, std::string&) { acc_counterexample(c); }},
      {"property suites on random trellises", [&](Checker& c, std::string& s) { acc_properties(c, o, s); }},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.title = criteria[i].first;
    Checker c(r);
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c, r.summary);
    } catch (const std::exception& e) {
      c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << "ACC-" << r.id << (r.id < 10 ? "  " : " ") << (r.passed ? "PASS" : "FAIL") << "  " << r.title;
  if (!r.summary.empty()) s << " [" << r.summary << "]";
  for (const auto& f : r.failures) s << "\n        - " << f;
  return s.str();
}

}  // namespace trellis::verify
