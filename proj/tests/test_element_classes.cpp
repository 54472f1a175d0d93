#include "support.hpp"
#include "trellis/verify/generators.hpp"

using namespace trellis;
using namespace testing_support;

namespace {

// Quantifier scans over the raw matrix and tables.
struct Naive {
  const Trellis& t;
  std::size_t n() const { return t.size(); }
  bool le(Element x, Element y) const { return t.leq(x, y); }

  bool rtr(Element a) const {
    for (Element x = 0; x < n(); ++x)
      for (Element y = 0; y < n(); ++y)
        if (le(a, x) && le(x, y) && !le(a, y)) return false;
    return true;
  }
  bool ltr(Element a) const {
    for (Element x = 0; x < n(); ++x)
      for (Element y = 0; y < n(); ++y)
        if (le(x, y) && le(y, a) && !le(x, a)) return false;
    return true;
  }
  bool mtr(Element a) const {
    for (Element x = 0; x < n(); ++x)
      for (Element y = 0; y < n(); ++y)
        if (le(x, a) && le(a, y) && !le(x, y)) return false;
    return true;
  }
  // Every permutation of every triple containing a.
  template <class Op>
  bool ass(Element a, Op op) const {
    for (Element u = 0; u < n(); ++u)
      for (Element v = 0; v < n(); ++v) {
        const Element tr[3][3] = {{a, u, v}, {u, a, v}, {u, v, a}};
        for (const auto& w : tr)
          if (op(op(w[0], w[1]), w[2]) != op(w[0], op(w[1], w[2]))) return false;
      }
    return true;
  }
};

}  // namespace

TEST(Classes, AgreeWithNaiveScansOnRandomTrellises) {
  verify::Random rng(31);
  for (int i = 0; i < 200; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    const auto c = classify(t);
    Naive nv{t};
    auto meet = [&](Element x, Element y) { return t.meet(x, y); };
    auto join = [&](Element x, Element y) { return t.join(x, y); };
    for (Element a = 0; a < t.size(); ++a) {
      const auto& f = c.flags[a];
      ASSERT_EQ(f.rtr, nv.rtr(a));
      ASSERT_EQ(f.ltr, nv.ltr(a));
      ASSERT_EQ(f.mtr, nv.mtr(a));
      ASSERT_EQ(f.tr, f.rtr && f.ltr && f.mtr);
      // Checking (a,x,y) only is enough once every position is tried.
      ASSERT_EQ(f.meet_ass, nv.ass(a, meet));
      ASSERT_EQ(f.join_ass, nv.ass(a, join));
      ASSERT_EQ(f.ass, f.meet_ass && f.join_ass);
      ASSERT_EQ(f.meet_dis, f.join_dis);
      ASSERT_EQ(f.dis, f.meet_dis);
    }
  }
}

TEST(Classes, InclusionChains) {
  verify::Random rng(32);
  for (int i = 0; i < 200; ++i) {
    const auto c = classify(verify::random_trellis(rng, 8));
    auto X = [&](ElementClass k) { return subset(c, k); };
    ASSERT_TRUE(X(ElementClass::dis).subset_of(X(ElementClass::ass)));
    ASSERT_TRUE(X(ElementClass::ass).subset_of(X(ElementClass::meet_ass)));
    ASSERT_TRUE(X(ElementClass::ass).subset_of(X(ElementClass::join_ass)));
    ASSERT_TRUE(X(ElementClass::meet_ass).subset_of(X(ElementClass::tr)));
    ASSERT_TRUE(X(ElementClass::join_ass).subset_of(X(ElementClass::tr)));
    ASSERT_TRUE(X(ElementClass::tr).subset_of(X(ElementClass::rtr)));
    ASSERT_TRUE(X(ElementClass::tr).subset_of(X(ElementClass::ltr)));
  }
}

TEST(Classes, PublishedSubsets) {
  const Trellis f2 = fixtures::get("broken-chain").trellis();
  const Psoset& p2 = f2.order();
  const auto c2 = classify(f2);
  EXPECT_EQ(subset(c2, ElementClass::rtr), S(p2, {"0", "b", "c", "1"}));
  for (auto k : {ElementClass::dis, ElementClass::ass, ElementClass::meet_ass, ElementClass::join_ass, ElementClass::tr})
    EXPECT_EQ(subset(c2, k), S(p2, {"0", "1"})) << to_string(k);

  const Trellis e61 = fixtures::get("rtr-sublattice").trellis();
  EXPECT_EQ(subset(classify(e61), ElementClass::rtr), S(e61.order(), {"0", "b", "c", "d", "e", "1"}));
  const Trellis t9 = fixtures::get("cycle8").trellis();
  EXPECT_EQ(subset(classify(t9), ElementClass::rtr), S(t9.order(), {"0", "a", "d", "1"}));
  const Trellis f4 = fixtures::get("tz-broken").trellis();
  EXPECT_EQ(subset(classify(f4), ElementClass::rtr), S(f4.order(), {"0", "a", "c", "d", "e", "1"}));
}

TEST(Classes, LatticeElementsAreTransitiveAndAssociative) {
  const Trellis t = Trellis::build(chain(5));
  const auto c = classify(t);
  for (auto k : kElementClasses) EXPECT_EQ(subset(c, k), t.order().elements()) << to_string(k);
}

TEST(Classes, ModularAndPseudoChainEqualityChain) {
  verify::Random rng(33);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    if (!is_modular(t).holds && !is_pseudo_chain(t.order(), t.order().elements())) continue;
    ++checked;
    const auto c = classify(t);
    const auto tr = subset(c, ElementClass::tr);
    ASSERT_EQ(subset(c, ElementClass::ass), tr);
    ASSERT_EQ(subset(c, ElementClass::meet_ass), tr);
    ASSERT_EQ(subset(c, ElementClass::join_ass), tr);
  }
  EXPECT_GT(checked, 50);
}

TEST(Classes, ClosureAndAssociativityInsideClasses) {
  verify::Random rng(34);
  for (int i = 0; i < 200; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    const auto c = classify(t);
    const auto rtr = subset(c, ElementClass::rtr), ltr = subset(c, ElementClass::ltr);
    ASSERT_TRUE(is_join_sub_trellis(t, rtr).holds);
    ASSERT_TRUE(is_meet_sub_trellis(t, ltr).holds);
    for (auto x : rtr)
      for (auto y : rtr)
        for (auto z : rtr) ASSERT_EQ(t.join(x, t.join(y, z)), t.join(t.join(x, y), z));
  }
}

TEST(Classes, NamesRoundTrip) {
  for (auto k : kElementClasses) EXPECT_EQ(parse_element_class(to_string(k)), k);
  EXPECT_FALSE(parse_element_class("nope"));
}

TEST(IteratedJoin, Examples) {
  const Trellis e61 = fixtures::get("rtr-sublattice").trellis();
  const Psoset& p = e61.order();
  EXPECT_EQ(iterated_join(e61, S(p, {"b", "c"})), p.at("c"));
  EXPECT_EQ(iterated_join(e61, S(p, {"d"})), p.at("d"));
  const Trellis t9 = fixtures::get("cycle8").trellis();
  EXPECT_EQ(iterated_join(t9, S(t9.order(), {"a", "d"})), t9.order().at("d"));
  EXPECT_THROW(iterated_join(e61, ElementSet{}), Error);
  try {
    iterated_join(e61, S(p, {"a", "b"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
}

TEST(IteratedJoin, OrderIndependentOnRightTransitiveSets) {
  verify::Random rng(35);
  for (int i = 0; i < 200; ++i) {
    const Trellis t = verify::random_trellis(rng, 8);
    const auto rtr = subset(classify(t), ElementClass::rtr).to_vector();
    if (rtr.size() < 2) continue;
    ElementSet s;
    for (auto e : rtr)
      if (rng.chance(0.6)) s.insert(e);
    if (s.empty()) continue;
    auto v = s.to_vector();
    const Element expected = iterated_join(t, s);
    for (int k = 0; k < 4; ++k) {
      for (std::size_t j = v.size(); j > 1; --j) std::swap(v[j - 1], v[rng.below(j)]);
      Element acc = v[0];
      for (auto e : v) acc = t.join(acc, e);
      ASSERT_EQ(acc, expected);
    }
  }
}
