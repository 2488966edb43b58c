#include <gtest/gtest.h>

#include "notions/controls.hpp"
#include "notions/functor.hpp"
#include "notions/monoidal.hpp"

using namespace notions;

TEST(Polynomial, MaybeObjectsAndMaps) {
  Functor m = maybeFunctor();
  EXPECT_EQ(m(FinSet{2}).card, 3u);
  EXPECT_EQ(maybeNothing(FinSet{2}), 2u);
  FinFun swap(FinSet{2}, FinSet{2}, {1, 0});
  EXPECT_EQ(m.onMorphism(swap).table(), (std::vector<std::size_t>{1, 0, 2}));
}

TEST(Polynomial, ReaderCardinality) {
  EXPECT_EQ(readerFunctor(2)(FinSet{2}).card, 4u);
  EXPECT_EQ(readerFunctor(2)(FinSet{3}).card, 9u);
}

TEST(Polynomial, WriterCardinality) {
  EXPECT_EQ(writerOr2Functor()(FinSet{3}).card, 6u);
}

TEST(Polynomial, ArityIsMaxConstructorArity) {
  EXPECT_EQ(maybeFunctor().arity(), 1u);
  EXPECT_EQ(readerFunctor(2).arity(), 2u);
  EXPECT_EQ(writerOr2Functor().arity(), 1u);
}

TEST(Polynomial, SupportAndRestriction) {
  Functor r = readerFunctor(2);
  // (2, 0) in Reader(3): index 2 * 3 + 0
  auto sup = r.support(FinSet{3}, 6);
  ASSERT_TRUE(sup);
  EXPECT_EQ(*sup, (std::vector<std::size_t>{0, 2}));
  auto res = restrictToSupport(r, FinSet{3}, 6);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->first.table(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.apply(LazyFun(res->first), res->second), 6u);
}

TEST(FunctorLaws, LibraryInstancesPass) {
  EXPECT_TRUE(checkFunctorLaws(maybeFunctor(), 2).passed());
  EXPECT_TRUE(checkFunctorLaws(readerFunctor(2), 2).passed());
  EXPECT_TRUE(checkFunctorLaws(writerOr2Functor(), 2).passed());
  EXPECT_TRUE(checkFunctorLaws(inclusionFunctor(), 3).passed());
}

TEST(FunctorLaws, CorruptedMapIsRejected) {
  auto rep = checkFunctorLaws(corruptedFunctor(maybeFunctor()), 2);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.firstCounterexample().empty());
}

TEST(Inclusion, ActsAsIdentity) {
  Functor i = inclusionFunctor();
  EXPECT_EQ(i(FinSet{3}).card, 3u);
  FinFun f(FinSet{3}, FinSet{3}, {2, 0, 1});
  EXPECT_EQ(i.onMorphism(f), f);
}

TEST(Strength, MaybeAtTerminalIsBijective) {
  FinFun s = canonicalStrength(maybeFunctor(), FinSet{2}, kTerminal);
  EXPECT_TRUE(s.isBijective());
}

TEST(Strength, MaybeKeepsNothing) {
  FinSet one{1}, two{2};
  FinFun s = canonicalStrength(maybeFunctor(), one, two);
  // (Nothing, b) for b = 0, 1
  std::size_t nothingOut = maybeNothing(product(one, two));
  EXPECT_EQ(s(pairIndex(FinSet{2}, two, 1, 0)), nothingOut);
  EXPECT_EQ(s(pairIndex(FinSet{2}, two, 1, 1)), nothingOut);
}

// Oracle: Reader2 A = A^2 as (r0, r1) with index r0 |A| + r1; strength
// (r, b) |-> ((r0, b), (r1, b)).
TEST(Strength, ReaderMatchesBruteForce) {
  FinSet a{2}, b{2};
  FinFun s = canonicalStrength(readerFunctor(2), a, b);
  std::size_t ab = a.card * b.card;
  for (std::size_t r0 = 0; r0 < 2; ++r0) {
    for (std::size_t r1 = 0; r1 < 2; ++r1) {
      for (std::size_t y = 0; y < 2; ++y) {
        std::size_t in = (r0 * 2 + r1) * 2 + y;
        std::size_t out = (r0 * 2 + y) * ab + (r1 * 2 + y);
        EXPECT_EQ(s(in), out);
      }
    }
  }
}

TEST(Naturality, JustIsNatural) {
  Nat e = makeNat("return", inclusionFunctor(), maybeFunctor(),
                  [](FinSet, std::size_t x) { return maybeJust(x); });
  EXPECT_TRUE(checkNaturality(e, 2).passed());
}

TEST(Naturality, CorruptedComponentIsRejected) {
  Nat e = makeNat("return", inclusionFunctor(), maybeFunctor(),
                  [](FinSet, std::size_t x) { return maybeJust(x); });
  auto rep = checkNaturality(swapOutputs(e, 0, 1), 2);
  EXPECT_FALSE(rep.passed());
  EXPECT_NE(rep.firstCounterexample().find("f="), std::string::npos);
}

TEST(Naturality, IdentityOnReader) {
  EXPECT_TRUE(checkNaturality(identityOf(readerFunctor(2)), 2).passed());
}

TEST(Naturality, YonedaCountForMaybe) {
  // Nat(Maybe, Maybe) = Maybe(1) x Maybe(0) = 2 x 1
  EXPECT_EQ(enumerateNatFromPoly(maybeFunctor(), maybeFunctor()).size(), 2u);
  for (const auto& t : enumerateNatFromPoly(maybeFunctor(), readerFunctor(2))) {
    EXPECT_TRUE(checkNaturality(t, 2).passed()) << t.name;
  }
}
