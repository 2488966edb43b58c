#include <gtest/gtest.h>

#include "notions/adjunction.hpp"
#include "notions/controls.hpp"
#include "notions/monoidal.hpp"
#include "notions/profunctor.hpp"

using namespace notions;

TEST(Hom, CarrierAndActions) {
  Profunctor h = homProf();
  EXPECT_EQ(h(FinSet{2}, FinSet{2}).card, 4u);
  FinFun g(FinSet{2}, FinSet{3}, {2, 0});
  for (const auto& k : enumHom(FinSet{2}, FinSet{2})) {
    FinFun out = indexToFun(FinSet{2}, FinSet{3},
                            h.onMaps(FinFun::identity(FinSet{2}), g)(funToIndex(k)));
    EXPECT_EQ(out, compose(g, k));
  }
}

TEST(Hom, StrengthOfIdentityIsIdentity) {
  FinSet two{2};
  std::size_t id = funToIndex(FinFun::identity(two));
  std::size_t s = homProf().strength(two, two, two, id);
  EXPECT_EQ(indexToFun(product(two, two), product(two, two), s),
            FinFun::identity(product(two, two)));
}

TEST(Sigma, BijectiveAtTerminal) {
  for (const auto& p : {homProf(), kleisliMaybeProf()}) {
    for (std::size_t x = 0; x <= 2; ++x) {
      for (std::size_t y = 0; y <= 2; ++y) {
        EXPECT_TRUE(sigmaStrength(p, FinSet{x}, FinSet{y}, kTerminal).isBijective());
      }
    }
  }
}

// Oracle: for Hom, sigma(h, z) = h . pi_1.
TEST(Sigma, HomIsPrecompositionWithProjection) {
  FinSet x{2}, y{2}, z{2};
  FinFun s = sigmaStrength(homProf(), x, y, z);
  for (const auto& h : enumHom(x, y)) {
    for (std::size_t c = 0; c < z.card; ++c) {
      FinFun expected = compose(h, proj1(x, z));
      EXPECT_EQ(s(funToIndex(h) * z.card + c), funToIndex(expected));
    }
  }
}

TEST(Sigma, NaturalInY) {
  Profunctor p = homProf();
  FinSet x{2}, y{2}, z{2};
  FinFun f(y, y, {1, 1});
  FinFun lhs = compose(p.onMaps(FinFun::identity(product(x, z)), f),
                       sigmaStrength(p, x, y, z));
  FinFun rhs = compose(sigmaStrength(p, x, y, z),
                       productMap(p.onMaps(FinFun::identity(x), f),
                                  FinFun::identity(z)));
  EXPECT_EQ(lhs, rhs);
}

// Oracle: for Hom into 2, varsigma(h, a) = h . (b |-> (a, b)).
TEST(Varsigma, HomIsPairingWithA) {
  FinSet a{2}, b{2}, y{2};
  FinFun s = varsigmaStrength(homProf(), a, b, y);
  for (const auto& h : enumHom(product(a, b), y)) {
    for (std::size_t av = 0; av < a.card; ++av) {
      std::vector<std::size_t> t(b.card);
      for (std::size_t bv = 0; bv < b.card; ++bv) t[bv] = h(av * b.card + bv);
      EXPECT_EQ(s(funToIndex(h) * a.card + av), funToIndex(FinFun(b, y, t)));
    }
  }
}

TEST(Varsigma, BijectiveAtTerminal) {
  for (std::size_t b = 0; b <= 2; ++b) {
    for (std::size_t y = 0; y <= 2; ++y) {
      EXPECT_TRUE(
          varsigmaStrength(homProf(), kTerminal, FinSet{b}, FinSet{y}).isBijective());
    }
  }
}

TEST(Varsigma, DinaturalInA) {
  Profunctor p = homProf();
  FinSet a{1}, a2{2}, b{2}, y{2};
  FinFun k(a, a2, {1});
  // varsigma_{A} . (P(k x id, id) x id) = varsigma_{A'} . (id x k)
  FinFun lhs = compose(varsigmaStrength(p, a, b, y),
                       productMap(p.onMaps(productMap(k, FinFun::identity(b)),
                                           FinFun::identity(y)),
                                  FinFun::identity(a)));
  FinFun rhs = compose(varsigmaStrength(p, a2, b, y),
                       productMap(FinFun::identity(p(product(a2, b), y)), k));
  EXPECT_EQ(lhs, rhs);
}

TEST(StrengthLaws, LibraryPasses) {
  EXPECT_TRUE(checkStrengthLaws(homProf(), 2).passed());
  EXPECT_TRUE(checkStrengthLaws(kleisliMaybeProf(), 2).passed());
  EXPECT_TRUE(checkStrengthLaws(cayley(maybeFunctor()), 2).passed());
  EXPECT_TRUE(checkProfunctorLaws(homProf(), 2).passed());
}

TEST(StrengthLaws, TwistedStrengthIsRejected) {
  auto rep = checkStrengthLaws(homWithTwistedStrength(), 2);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.firstCounterexample().empty());
}

TEST(StrengthLaws, UnitLawCatchesAStrengthBrokenAtOne) {
  Profunctor bad = withStrength(homProf(), "hom (broken at 1)",
                                [](FinSet x, FinSet y, FinSet z, std::size_t h) {
                                  std::size_t s = homTimesId(x, y, z, h);
                                  std::size_t n = exponential(product(x, z),
                                                              product(y, z)).card;
                                  return z.card == 1 && n > 1 ? (s + 1) % n : s;
                                });
  auto rep = checkStrengthLaws(bad, 2);
  EXPECT_FALSE(rep.passed());
  bool unitLaw = false;
  for (const auto& c : rep.counterexamples) unitLaw |= c.rfind("unit law", 0) == 0;
  EXPECT_TRUE(unitLaw) << rep.firstCounterexample();
}

TEST(StrongNaturality, IdentityAndArr) {
  EXPECT_TRUE(checkStrongNaturality(identityOf(homProf()), 2).passed());
  EXPECT_TRUE(
      checkStrongNaturality(kleisliMaybeArrow(benabouCategory()).unit, 2).passed());
}

TEST(StrongNaturality, NonStrongIsRejected) {
  auto rep = checkStrongNaturality(nonStrongIdentity(), 2);
  EXPECT_FALSE(rep.passed());
  EXPECT_NE(rep.firstCounterexample().find("(X,Y,Z)"), std::string::npos);
}
