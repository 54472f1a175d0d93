#include "support.hpp"
#include "trellis/verify/acceptance.hpp"

using namespace trellis;
using namespace testing_support;

TEST(Properties, SuiteHoldsOnAnotherSeed) {
  verify::Random rng(0xabcdef);
  verify::PropertyTally tally;
  for (int i = 0; i < 150; ++i) verify::property_suite(verify::random_trellis(rng, 6), tally);
  EXPECT_EQ(tally.trellises, 150u);
  for (const auto& [what, n] : tally.violations) ADD_FAILURE() << what << ": " << n;
  EXPECT_GT(tally.proper, 0u);
  EXPECT_GT(tally.with_cycles, 0u);
  EXPECT_GT(tally.interior_checks, 0u);
}

TEST(Properties, IdempotentTnormOnlyOnLattices) {
  verify::Random rng(61);
  int proper = 0;
  for (int i = 0; i < 150; ++i) {
    const Trellis t = verify::random_trellis(rng, 6);
    const bool lattice = t.order().transitive();
    proper += !lattice;
    for (const auto& T : enumerate(t).tnorms) {
      if (!check(t, T).idempotent.holds) continue;
      ASSERT_TRUE(lattice);
      ASSERT_EQ(T, t.meet_table());
    }
    if (lattice) {
      ASSERT_TRUE(is_tnorm(t.order(), t.meet_table()));
    }
  }
  EXPECT_GT(proper, 10);
}

TEST(Properties, LatticeIffEveryElementRightTransitive) {
  verify::Random rng(62);
  for (int i = 0; i < 300; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    const auto rtr = subset(classify(t), ElementClass::rtr);
    ASSERT_EQ(t.order().transitive(), rtr == t.order().elements());
  }
}

TEST(Properties, ModularTrellisesHaveNoThreeCycles) {
  verify::Random rng(63);
  int modular = 0;
  for (int i = 0; i < 300; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    if (!is_modular(t).holds) continue;
    ++modular;
    const Psoset& p = t.order();
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y)
        for (Element z = 0; z < p.size(); ++z)
          if (x != y && y != z && x != z) {
            ASSERT_FALSE(p.leq(x, y) && p.leq(y, z) && p.leq(z, x));
          }
  }
  EXPECT_GT(modular, 50);
}

TEST(Properties, MeetIsTnormIffLattice) {
  verify::Random rng(64);
  for (int i = 0; i < 300; ++i) {
    const Trellis t = verify::random_trellis(rng, 7);
    ASSERT_EQ(is_tnorm(t.order(), t.meet_table()), t.order().transitive());
  }
}
