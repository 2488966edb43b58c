#include <gtest/gtest.h>

#include "notions/adjunction.hpp"
#include "notions/controls.hpp"
#include "notions/monoidal.hpp"

using namespace notions;

namespace {

std::vector<Functor> library() {
  return {maybeFunctor(), readerFunctor(2), writerOr2Functor(),
          identityFunctor(), inclusionFunctor()};
}

std::vector<Profunctor> profunctors() {
  return {homProf(), kleisliMaybeProf(), cayley(maybeFunctor())};
}

}  // namespace

TEST(Hat, Cardinalities) {
  for (std::size_t z = 0; z <= 3; ++z) {
    EXPECT_EQ(hat(homProf())(FinSet{z}).card, z);
  }
  EXPECT_EQ(hat(kleisliMaybeProf())(FinSet{2}).card, 3u);
  EXPECT_EQ(hat(cayley(maybeFunctor()))(FinSet{2}).card, 3u);
}

TEST(Cayley, CarrierAndStrength) {
  Profunctor cm = cayley(maybeFunctor());
  EXPECT_EQ(cm(FinSet{2}, FinSet{2}).card, 5u);
  // Nothing of Maybe(1 -> 1) goes to Nothing of Maybe(2 -> 2)
  FinSet one{1}, two{2};
  EXPECT_EQ(cm.strength(one, one, two, 1), 4u);
}

TEST(Cayley, OfInclusionIsHom) {
  Profunctor ci = cayley(inclusionFunctor());
  Profunctor h = homProf();
  for (std::size_t x = 0; x <= 2; ++x) {
    for (std::size_t y = 0; y <= 2; ++y) {
      FinSet X{x}, Y{y};
      ASSERT_EQ(ci(X, Y).card, h(X, Y).card);
      for (const auto& f : enumHom(X, X)) {
        for (const auto& g : enumHom(Y, Y)) {
          EXPECT_EQ(ci.onMaps(f, g), h.onMaps(f, g));
        }
      }
    }
  }
}

TEST(Kleisli, CarrierAndAgreement) {
  Profunctor km = kleisli(maybeFunctor());
  Profunctor hand = kleisliMaybeProf();
  EXPECT_EQ(km(FinSet{2}, FinSet{2}).card, 9u);
  for (std::size_t x = 0; x <= 2; ++x) {
    for (std::size_t y = 0; y <= 2; ++y) {
      FinSet X{x}, Y{y};
      ASSERT_EQ(km(X, Y).card, hand(X, Y).card);
      for (const auto& f : enumHom(X, X)) {
        for (const auto& g : enumHom(Y, Y)) {
          EXPECT_EQ(km.onMaps(f, g), hand.onMaps(f, g));
        }
      }
      for (std::size_t z = 0; z <= 2; ++z) {
        EXPECT_EQ(km.strengthMap(X, Y, FinSet{z}), hand.strengthMap(X, Y, FinSet{z}));
      }
    }
  }
  Profunctor ki = kleisli(inclusionFunctor());
  EXPECT_EQ(ki(FinSet{2}, FinSet{3}).card, homProf()(FinSet{2}, FinSet{3}).card);
}

TEST(CayleyUnit, MaybeAtTwo) {
  FinFun e = cayleyUnit(maybeFunctor()).component({2, 0});
  // constant maps 1 -> 2 are indexed by their value
  EXPECT_EQ(e.table(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(e.isBijective());
}

TEST(CayleyUnit, DisplayedInverse) {
  for (const auto& f : library()) {
    EXPECT_TRUE(twoSidedInverseOnWindow("eta!", cayleyUnit(f), cayleyUnitInverse(f),
                                        Functor::points(2))
                    .passed())
        << f.name();
  }
}

TEST(KleisliCounit, DisplayedInverse) {
  for (const auto& f : library()) {
    EXPECT_TRUE(twoSidedInverseOnWindow("eps*", kleisliCounit(f),
                                        kleisliCounitInverse(f), Functor::points(2))
                    .passed())
        << f.name();
  }
  EXPECT_TRUE(kleisliCounit(maybeFunctor()).component({2, 0}).isBijective());
}

TEST(CayleyCounit, IsoOnTheImage) {
  auto e = cayleyCounit(cayley(maybeFunctor()));
  for (Point p : Profunctor::points(2)) EXPECT_TRUE(e.component(p).isBijective());
}

TEST(CayleyCounit, NotOntoAtKleisliMaybe) {
  FinFun e = cayleyCounit(kleisliMaybeProf()).component({2, 2});
  EXPECT_EQ(e.dom().card, 5u);
  EXPECT_EQ(e.cod().card, 9u);
  EXPECT_FALSE(e.isSurjective());
}

TEST(KleisliUnit, IsoOnTheImage) {
  auto e = kleisliUnit(kleisliMaybeProf());
  for (Point p : Profunctor::points(2)) EXPECT_TRUE(e.component(p).isBijective());
}

TEST(KleisliUnit, InjectiveNotOntoAtCayleyMaybe) {
  FinFun e = kleisliUnit(cayley(maybeFunctor())).component({2, 2});
  EXPECT_EQ(e.dom().card, 5u);
  EXPECT_EQ(e.cod().card, 9u);
  EXPECT_TRUE(e.isInjective());
  EXPECT_FALSE(e.isSurjective());
}

TEST(Triangles, BothAdjunctions) {
  auto ca = cayleyAdjunction();
  auto ka = kleisliAdjunction();
  for (const auto& f : library()) {
    for (const auto& p : profunctors()) {
      EXPECT_TRUE(checkTriangles(ca, f, p, 2).passed()) << f.name() << p.name();
      EXPECT_TRUE(checkTriangles(ka, p, f, 2).passed()) << f.name() << p.name();
    }
  }
}

TEST(Triangles, CorruptedUnitIsRejected) {
  auto rep = checkTriangles(corruptedUnit(cayleyAdjunction()), maybeFunctor(),
                            homProf(), 2);
  EXPECT_FALSE(rep.passed());
}

TEST(Units, StrongNaturality) {
  for (const auto& p : profunctors()) {
    EXPECT_TRUE(checkStrongNaturality(cayleyCounit(p), 2).passed()) << p.name();
    EXPECT_TRUE(checkStrongNaturality(kleisliUnit(p), 2).passed()) << p.name();
  }
}

TEST(Idempotent, BoxAndDiamond) {
  EXPECT_EQ(boxComonad(kleisliMaybeProf()).object(FinSet{2}, FinSet{2}).card, 5u);
  EXPECT_EQ(diamondMonad(cayley(maybeFunctor())).object(FinSet{2}, FinSet{2}).card,
            9u);
  for (const auto& p : profunctors()) {
    EXPECT_TRUE(bijectiveOnWindow("box", boxComonad(p).comult, 2).passed());
    EXPECT_TRUE(bijectiveOnWindow("diamond", diamondMonad(p).mult, 2).passed());
  }
}

TEST(Faithfulness, CayleyAndKleisliOnMaybe) {
  for (const auto& which : {cayleyFunctor(), kleisliFunctor()}) {
    auto probe = fullFaithfulnessProbe(which, maybeFunctor(), maybeFunctor(), 2);
    EXPECT_TRUE(probe.injective.passed()) << which.name;
    EXPECT_EQ(probe.transformations, 2u);
    EXPECT_EQ(probe.familiesInImage, probe.strongFamilies) << which.name;
  }
}

TEST(Faithfulness, HatSearchRuns) {
  // absence of a witness at this scale is a valid outcome
  auto w = hatNonFaithfulWitness(homProf(), kleisliMaybeProf(), 1);
  if (w) {
    EXPECT_NE(w->first, w->second);
  }
}
