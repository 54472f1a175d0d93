#include "support.hpp"
#include "trellis/verify/acceptance.hpp"

using namespace trellis;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Drastic, BrokenChain) {
  const auto& f = fixtures::get("broken-chain");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const auto td = t_drastic(p);
  EXPECT_EQ(td, fixtures::inner_table(p, f.inner_tables.at("T1")));
  EXPECT_EQ(td, t_z(t));
  for (Element x = 0; x < p.size(); ++x) {
    EXPECT_EQ(td(x, p.at("1")), x);
    EXPECT_EQ(td(p.at("1"), x), x);
    for (Element y = 0; y < p.size(); ++y)
      if (x != p.at("1") && y != p.at("1")) {
        EXPECT_EQ(td(x, y), p.at("0"));
      }
  }
  EXPECT_TRUE(check(t, td).is_tnorm());
  EXPECT_EQ(kind_of([] { t_drastic(fixtures::get("cycle6").psoset()); }), ErrorKind::NotBounded);
}

TEST(ConditionFour, Examples) {
  EXPECT_TRUE(condition4(fixtures::get("tz-modular").trellis()).holds);
  const Trellis f4 = fixtures::get("tz-broken").trellis();
  auto v = condition4(f4);
  ASSERT_FALSE(v.holds);
  const auto& w = v.witness;
  const Element zero = *f4.bottom(), one = *f4.top();
  EXPECT_NE(f4.meet(w[0], w[1]), zero);
  EXPECT_EQ(f4.join(w[0], w[1]), one);
  EXPECT_NE(f4.join(f4.join(w[0], w[2]), f4.join(w[1], w[3])), one);
}

TEST(ConditionFour, VacuousWhenComplementsMeetAtBottom) {
  // Four-element Boolean lattice.
  std::vector<std::vector<int>> m{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  RelationMatrix rel(4, std::vector<bool>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rel[i][j] = m[i][j];
  const Trellis t = Trellis::build(Psoset::validate(rel, {"0", "p", "q", "1"}));
  // Pairs joining to 1 either meet at 0 or contain 1 themselves.
  EXPECT_TRUE(condition4(t).holds);
  EXPECT_TRUE(check(t, t_z(t)).is_tnorm());
}

TEST(TZ, PublishedTable) {
  const auto& f = fixtures::get("tz-modular");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const auto tz = t_z(t);
  EXPECT_EQ(tz, fixtures::full_table(p, f.full_tables.at("TZ")));
  EXPECT_EQ(tz(p.at("e"), p.at("f")), p.at("d"));
  EXPECT_EQ(tz(p.at("a"), p.at("c")), p.at("0"));
  for (Element x = 0; x < p.size(); ++x) EXPECT_EQ(tz(x, p.at("1")), x);
  EXPECT_TRUE(check(t, tz).is_tnorm());
}

TEST(TZ, TwoElementLatticeGivesMeet) {
  const Trellis t = Trellis::build(chain(2));
  EXPECT_EQ(t_z(t), t.meet_table());
}

TEST(TZ, TzBrokenIsNotIncreasing) {
  const Trellis t = fixtures::get("tz-broken").trellis();
  EXPECT_FALSE(check(t, t_z(t)).increasing.holds);
}

TEST(TZ, TnormIffConditionFourOnModularTrellises) {
  verify::Random rng(61);
  int modular = 0;
  for (int i = 0; i < 300; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    if (!is_modular(t).holds) continue;
    ++modular;
    ASSERT_EQ(check(t, t_z(t)).is_tnorm(), condition4(t).holds);
  }
  EXPECT_GT(modular, 100);
}

TEST(CoAtom, Examples) {
  const auto& f = fixtures::get("broken-chain");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const auto tc = t_coatom(p, p.at("c"));
  EXPECT_EQ(tc, fixtures::inner_table(p, f.inner_tables.at("T2")));
  EXPECT_EQ(tc(p.at("c"), p.at("c")), p.at("c"));
  EXPECT_EQ(kind_of([&] { t_coatom(p, p.at("b")); }), ErrorKind::NotACoAtom);

  const Trellis e49 = fixtures::get("two-maximal").trellis();
  const Psoset& q = e49.order();
  EXPECT_TRUE(check(e49, t_coatom(q, q.at("d"))).is_tnorm());
  EXPECT_TRUE(check(e49, t_coatom(q, q.at("e"))).is_tnorm());
}

TEST(CoAtom, AlwaysATnormOnRandomPsosets) {
  verify::Random rng(62);
  for (int i = 0; i < 150; ++i) {
    const Psoset p = verify::random_bounded_psoset(rng, 3 + rng.below(5), 0.5, rng.chance(0.4));
    for (auto c : co_atoms(p)) ASSERT_TRUE(is_tnorm(p, t_coatom(p, c)));
    ASSERT_TRUE(is_tnorm(p, t_drastic(p)));
  }
}

TEST(Scaled, Examples) {
  const Trellis t = fixtures::get("rtr-sublattice").trellis();
  const Psoset& p = t.order();
  const ElementSet a = S(p, {"0", "b", "c", "d", "e", "1"});
  const auto vc = v_scaled(t, a, p.at("c"));
  EXPECT_EQ(vc(p.at("d"), p.at("e")), p.at("c"));
  const auto vtop = v_scaled(t, a, p.at("1"));
  const auto meet = restricted_meet(t, a);
  EXPECT_EQ(vtop.table, meet.table);
  const auto vbot = v_scaled(t, a, p.at("0"));
  for (auto v : vbot.table.cells()) EXPECT_EQ(vbot.carrier.to_parent[v], p.at("0"));
  EXPECT_EQ(kind_of([&] { v_scaled(t, a, p.at("a")); }), ErrorKind::ElementNotInSubset);

  const Trellis f4 = fixtures::get("tz-broken").trellis();
  EXPECT_EQ(kind_of([&] { v_scaled(f4, S(f4.order(), {"0", "a", "c", "d", "e", "1"}), f4.order().at("c")); }),
            ErrorKind::NotASubLattice);
}

TEST(Interior, PublishedScaledConstructions) {
  const auto& f = fixtures::get("rtr-sublattice");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const ElementSet rtr = S(p, {"0", "b", "c", "d", "e", "1"});
  for (const char* a : {"b", "c", "d", "e"}) {
    const auto T = t_lambda(t, rtr, v_scaled(t, rtr, p.at(a)));
    EXPECT_EQ(T, fixtures::inner_table(p, f.inner_tables.at(std::string("V") + a))) << a;
  }
  const auto Te = t_lambda(t, rtr, v_scaled(t, rtr, p.at("e")));
  EXPECT_EQ(Te(p.at("d"), p.at("d")), p.at("c"));
  EXPECT_EQ(Te(p.at("e"), p.at("e")), p.at("e"));
}

TEST(Interior, LambdaMeetAgainstGreatestOfRtrSublattice) {
  const auto& f = fixtures::get("rtr-sublattice");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const auto T = t_lambda_meet(t, S(p, {"0", "b", "c", "d", "e", "1"}));
  const auto G = fixtures::inner_table(p, f.inner_tables.at("greatest"));
  std::vector<std::pair<Element, Element>> diff;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (T(x, y) != G(x, y)) diff.emplace_back(x, y);
  const Element a = p.at("a"), e = p.at("e");
  EXPECT_EQ(diff, (std::vector<std::pair<Element, Element>>{{a, e}, {e, a}}));
  EXPECT_EQ(T(a, e), p.at("0"));
  EXPECT_EQ(G(a, e), a);
}

TEST(Interior, CycleExample) {
  const auto& f = fixtures::get("cycle8");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  EXPECT_EQ(t_lambda_meet(t, S(p, {"0", "a", "d", "1"})), fixtures::inner_table(p, f.inner_tables.at("Trtr")));
}

TEST(Interior, SpecialSubsets) {
  const Trellis f2 = fixtures::get("broken-chain").trellis();
  const Psoset& p = f2.order();
  EXPECT_EQ(t_lambda_meet(f2, S(p, {"0", "c"})), t_coatom(p, p.at("c")));
  EXPECT_EQ(t_lambda_meet(f2, S(p, {"0", "1"})), t_drastic(p));
  const Trellis lat = Trellis::build(chain(4));
  EXPECT_EQ(t_lambda_meet(lat, lat.order().elements()), lat.meet_table());
  EXPECT_EQ(t_interior_meet(lat, UnaryMap::identity(4)), lat.meet_table());
}

TEST(Interior, SixTnormCorrespondences) {
  const auto& f = fixtures::get("broken-chain");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  auto T = [&](const char* name) { return fixtures::inner_table(p, f.inner_tables.at(name)); };
  EXPECT_EQ(t_lambda_meet(t, S(p, {"0", "c", "1"})), T("T2"));
  EXPECT_EQ(t_lambda_meet(t, S(p, {"0", "b"})), T("T4"));
  EXPECT_EQ(t_lambda_meet(t, S(p, {"0", "b", "1"})), T("T4"));
  EXPECT_EQ(t_lambda_meet(t, S(p, {"0", "b", "c"})), T("T6"));
  EXPECT_EQ(t_lambda_meet(t, S(p, {"0", "b", "c", "1"})), T("T6"));
}

TEST(Interior, Preconditions) {
  const Trellis f2 = fixtures::get("broken-chain").trellis();
  const Psoset& p = f2.order();
  // The identity is interior, but a is not right-transitive.
  EXPECT_EQ(kind_of([&] { t_interior_meet(f2, UnaryMap::identity(p.size())); }), ErrorKind::RangeNotRightTransitive);
  const auto l = lambda(f2, S(p, {"0", "b", "c", "1"}));
  EXPECT_EQ(kind_of([&] { t_interior(f2, l, restricted_meet(f2, S(p, {"0", "c", "1"}))); }),
            ErrorKind::TargetMismatch);
  // A non-commutative V on the range.
  auto bad = restricted_meet(f2, S(p, {"0", "b", "c", "1"}));
  bad.table.set(1, 2, 0);
  EXPECT_EQ(kind_of([&] { t_interior(f2, l, bad); }), ErrorKind::VNotATnorm);
  UnaryMap up = UnaryMap::identity(p.size());
  up.values[p.at("0")] = p.at("a");
  EXPECT_EQ(kind_of([&] { t_interior_meet(f2, up); }), ErrorKind::NotAnInteriorOperator);

  const Trellis f4 = fixtures::get("tz-broken").trellis();
  EXPECT_EQ(kind_of([&] { t_lambda_meet(f4, S(f4.order(), {"0", "a", "c", "d", "e", "1"})); }),
            ErrorKind::NotASubTrellis);
}

TEST(Interior, UncheckedCounterexample) {
  const auto& f = fixtures::get("tz-broken");
  const Trellis t = f.trellis();
  const Psoset& p = t.order();
  const auto T = t_lambda_meet_unchecked(t, S(p, {"0", "a", "c", "d", "e", "1"}));
  EXPECT_EQ(T, fixtures::inner_table(p, f.inner_tables.at("Trtr")));
  auto r = check(t, T);
  EXPECT_FALSE(r.increasing.holds);
  EXPECT_EQ(T(p.at("c"), p.at("d")), p.at("b"));
  EXPECT_FALSE(t.leq(T(p.at("c"), p.at("d")), T(p.at("e"), p.at("e"))));
}

TEST(Interior, UncheckedAgreesWithCheckedOnSubTrellises) {
  verify::Random rng(63);
  for (int i = 0; i < 150; ++i) {
    const Trellis t = verify::random_trellis(rng, 7);
    const auto rtr = subset(classify(t), ElementClass::rtr);
    for (auto a : verify::subsets_containing(rtr, *t.bottom()))
      if (is_sub_trellis(t, a).holds) {
        ASSERT_EQ(t_lambda_meet_unchecked(t, a), t_lambda_meet(t, a));
      }
  }
}

TEST(Interior, ConstructionsAppearInTheEnumeration) {
  verify::Random rng(64);
  for (int i = 0; i < 60; ++i) {
    const Trellis t = verify::random_trellis(rng, 6);
    const auto all = enumerate(t).tnorms;
    auto listed = [&](const BinaryOpTable& T) { return std::find(all.begin(), all.end(), T) != all.end(); };
    ASSERT_TRUE(listed(t_drastic(t.order())));
    for (auto c : co_atoms(t.order())) ASSERT_TRUE(listed(t_coatom(t.order(), c)));
    for (const auto& I : verify::all_interior_operators(t)) {
      if (!image(I).subset_of(subset(classify(t), ElementClass::rtr))) continue;
      ASSERT_TRUE(listed(t_interior_meet(t, I)));
    }
  }
}
