#include "support.hpp"
#include "trellis/verify/generators.hpp"

using namespace trellis;
using namespace testing_support;

TEST(Infimum, Examples) {
  const Psoset f2 = fixtures::get("broken-chain").psoset();
  EXPECT_EQ(infimum(f2, S(f2, {"a", "c"})), f2.at("0"));
  for (Element x = 0; x < f2.size(); ++x) EXPECT_EQ(infimum(f2, ElementSet::single(x)), x);
  const Psoset t9 = fixtures::get("cycle8").psoset();
  EXPECT_EQ(infimum(t9, S(t9, {"e", "f"})), t9.at("e"));
  EXPECT_THROW(infimum(f2, ElementSet{}), Error);
}

TEST(Infimum, UndefinedWithoutGreatestLowerBound) {
  // Two incomparable elements below two incomparable elements.
  std::vector<std::vector<int>> rel{{1, 0, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  RelationMatrix r(4, std::vector<bool>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = rel[i][j];
  const Psoset p = Psoset::validate(r, {"a", "b", "c", "d"});
  EXPECT_FALSE(infimum(p, ElementSet{2, 3}));
  EXPECT_FALSE(supremum(p, ElementSet{0, 1}));
  EXPECT_FALSE(structure_kind(p).trellis);
  try {
    Trellis::build(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotATrellis);
    EXPECT_EQ(e.witness(), (std::vector<Element>{0, 1}));
  }
}

TEST(BuildTrellis, TablesMatchTheDefinitionOracle) {
  verify::Random rng(21);
  int trellises = 0;
  for (int i = 0; i < 150; ++i) {
    const Psoset p = verify::random_bounded_psoset(rng, 3 + rng.below(6), 0.5, rng.chance(0.5));
    const auto rel = p.matrix();
    bool oracle_trellis = true;
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y)
        oracle_trellis &= oracle_meet(rel, x, y) >= 0 && oracle_join(rel, x, y) >= 0;
    ASSERT_EQ(structure_kind(p).trellis, oracle_trellis);
    if (!oracle_trellis) continue;
    ++trellises;
    const Trellis t = Trellis::build(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        ASSERT_EQ(static_cast<long>(t.meet(x, y)), oracle_meet(rel, x, y));
        ASSERT_EQ(static_cast<long>(t.join(x, y)), oracle_join(rel, x, y));
      }
  }
  EXPECT_GT(trellises, 20);
}

TEST(BuildTrellis, BrokenChainIsAProperModularTrellis) {
  const Trellis t = fixtures::get("broken-chain").trellis();
  auto k = structure_kind(t.order());
  EXPECT_TRUE(k.trellis);
  EXPECT_FALSE(k.lattice);
  EXPECT_TRUE(k.modular);
  EXPECT_TRUE(k.bounded);
  EXPECT_TRUE(k.meet_semi_trellis && k.join_semi_trellis);
}

TEST(BuildTrellis, ChainIsALattice) {
  auto k = structure_kind(chain(5));
  EXPECT_TRUE(k.lattice);
  EXPECT_TRUE(k.modular);
}

TEST(BuildTrellis, BoundedCycle6HasACycleAndPassesTheAxioms) {
  const Trellis t = fixtures::get("cycle6-bounded").trellis();
  EXPECT_FALSE(maximal_cycles(t.order()).empty());
  EXPECT_TRUE(check_skala_axioms(t.meet_table(), t.join_table()).ok());
}

TEST(Skala, EveryFixtureTrellisPasses) {
  for (const auto& id : trellis_fixture_ids()) {
    const Trellis t = fixtures::get(id).trellis();
    EXPECT_TRUE(check_skala_axioms(t.meet_table(), t.join_table()).ok()) << id;
  }
}

TEST(Skala, MinMaxOnAChain) {
  BinaryOpTable mn(3), mx(3);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) {
      mn.set(x, y, std::min(x, y));
      mx.set(x, y, std::max(x, y));
    }
  EXPECT_TRUE(check_skala_axioms(mn, mx).ok());
  auto rel = induced_order(mn, mx);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) EXPECT_EQ(rel[x][y], x <= y);
}

TEST(Skala, InjectedAsymmetryIsReported) {
  const Trellis t = fixtures::get("broken-chain").trellis();
  auto meet = t.meet_table();
  meet.set(1, 2, 0);
  auto r = check_skala_axioms(meet, t.join_table());
  ASSERT_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations) found |= v.axiom == "meet-commutativity" && v.tuple == std::vector<Element>{1, 2};
  EXPECT_TRUE(found);
  try {
    induced_order(meet, t.join_table());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomsFailed);
  }
}

TEST(InducedOrder, RoundTripsOnFixturesAndRandomTrellises) {
  for (const auto& id : trellis_fixture_ids()) {
    const Trellis t = fixtures::get(id).trellis();
    EXPECT_EQ(induced_order(t.meet_table(), t.join_table()), t.order().matrix()) << id;
  }
  verify::Random rng(22);
  for (int i = 0; i < 100; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    ASSERT_EQ(induced_order(t.meet_table(), t.join_table()), t.order().matrix());
  }
}

TEST(Modularity, Examples) {
  EXPECT_TRUE(is_modular(fixtures::get("broken-chain").trellis()).holds);
  EXPECT_TRUE(is_modular(fixtures::get("tz-modular").trellis()).holds);
  const Trellis t9 = fixtures::get("cycle8").trellis();
  auto v = is_modular(t9);
  ASSERT_FALSE(v.holds);
  const auto& w = v.witness;
  ASSERT_EQ(w.size(), 3u);
  EXPECT_TRUE(t9.leq(w[0], w[2]));
  EXPECT_NE(t9.join(w[0], t9.meet(w[1], w[2])), t9.meet(t9.join(w[0], w[1]), w[2]));
  EXPECT_FALSE(structure_kind(t9.order()).modular);
}

TEST(Modularity, NoThreeElementCyclesInModularTrellises) {
  verify::Random rng(23);
  int modular_with_cycle_checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    if (!is_modular(t).holds) continue;
    for (auto c : maximal_cycles(t.order())) {
      ++modular_with_cycle_checked;
      for (auto x : c)
        for (auto y : c)
          for (auto z : c)
            if (x != y && y != z && x != z) {
              EXPECT_FALSE(is_cycle(t.order(), ElementSet{x, y, z}));
            }
    }
  }
  SUCCEED() << modular_with_cycle_checked;
}

TEST(Modularity, ImplicationHoldsOnModularTrellises) {
  EXPECT_TRUE(modular_implication_check(fixtures::get("tz-modular").trellis()).holds);
  EXPECT_TRUE(modular_implication_check(fixtures::get("tz-broken").trellis()).holds);
  EXPECT_TRUE(modular_implication_check(Trellis::build(chain(2))).holds);
  verify::Random rng(24);
  for (int i = 0; i < 200; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    if (is_modular(t).holds) {
      ASSERT_TRUE(modular_implication_check(t).holds);
    }
  }
  try {
    modular_implication_check(fixtures::get("cycle8").trellis());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotModular);
  }
}

TEST(Associativity, TransitivityIffMeetAndJoinAssociative) {
  verify::Random rng(25);
  for (int i = 0; i < 300; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    const bool tr = t.order().transitive();
    ASSERT_EQ(meet_associative(t).holds, tr);
    ASSERT_EQ(join_associative(t).holds, tr);
  }
}

TEST(SubStructures, Examples) {
  const Trellis e61 = fixtures::get("rtr-sublattice").trellis();
  const Psoset& p61 = e61.order();
  EXPECT_TRUE(is_sub_lattice(e61, S(p61, {"0", "b", "c", "d", "e", "1"})).holds);
  EXPECT_TRUE(is_sub_trellis(e61, p61.elements()).holds);
  const Trellis f4 = fixtures::get("tz-broken").trellis();
  const Psoset& p4 = f4.order();
  auto v = is_meet_sub_trellis(f4, S(p4, {"0", "a", "c", "d", "e", "1"}));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness, W(p4, {"c", "d"}));
  EXPECT_EQ(f4.meet(p4.at("c"), p4.at("d")), p4.at("b"));
  EXPECT_TRUE(is_join_sub_trellis(f4, S(p4, {"0", "a", "c", "d", "e", "1"})).holds);
}

TEST(SubStructures, SubLatticeNeedsTransitivity) {
  const Trellis f2 = fixtures::get("broken-chain").trellis();
  const Psoset& p = f2.order();
  EXPECT_TRUE(is_sub_trellis(f2, p.elements()).holds);
  auto v = is_sub_lattice(f2, p.elements());
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness, W(p, {"a", "b", "c"}));
  EXPECT_TRUE(is_meet_sub_lattice(f2, S(p, {"0", "b", "c", "1"})).holds);
}
