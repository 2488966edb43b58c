#include <gtest/gtest.h>

#include <set>

#include "notions/finset.hpp"
#include "notions/finset_laws.hpp"

using namespace notions;

namespace {

FinFun fun(std::size_t dom, std::size_t cod, std::vector<std::size_t> t) {
  return FinFun(FinSet{dom}, FinSet{cod}, std::move(t));
}

}  // namespace

TEST(Compose, SwapIsAnInvolution) {
  FinFun s = fun(2, 2, {1, 0});
  EXPECT_EQ(compose(s, s), FinFun::identity(FinSet{2}));
}

TEST(Compose, IdentityLawUpToThree) {
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      for (const auto& f : enumHom(FinSet{a}, FinSet{b})) {
        EXPECT_EQ(compose(FinFun::identity(FinSet{b}), f), f);
        EXPECT_EQ(compose(f, FinFun::identity(FinSet{a})), f);
      }
    }
  }
}

TEST(Compose, FactorsThroughTerminal) {
  EXPECT_EQ(compose(fun(2, 1, {0, 0}), fun(2, 2, {1, 1})), fun(2, 1, {0, 0}));
}

TEST(Compose, MismatchIsADomainError) {
  EXPECT_THROW(compose(fun(2, 2, {0, 1}), fun(1, 3, {2})), DomainError);
}

TEST(FinFun, RejectsOutOfRangeTable) {
  EXPECT_THROW(fun(2, 2, {0, 2}), DomainError);
  EXPECT_THROW(fun(2, 2, {0}), DomainError);
}

TEST(Product, CardinalityAndPairing) {
  EXPECT_EQ(product(FinSet{2}, FinSet{3}).card, 6u);
  EXPECT_EQ(pairIndex(FinSet{2}, FinSet{3}, 1, 0), 3u);
  auto [a, b] = unpairIndex(FinSet{2}, FinSet{3}, 5);
  EXPECT_EQ(a, 1u);
  EXPECT_EQ(b, 2u);
}

TEST(Product, TupleWithBangIsBijective) {
  FinSet two{2};
  FinFun t = tuple(FinFun::identity(two), bang(two));
  EXPECT_EQ(t.cod().card, 2u);
  EXPECT_TRUE(t.isBijective());
  EXPECT_EQ(t, cartRhoInv(two));
}

TEST(Exponential, Cardinality) {
  EXPECT_EQ(exponential(FinSet{2}, FinSet{3}).card, 9u);
  EXPECT_EQ(exponential(FinSet{0}, FinSet{5}).card, 1u);
  EXPECT_EQ(exponential(FinSet{3}, FinSet{0}).card, 0u);
}

TEST(Exponential, EmptyDomainHasOneFunction) {
  auto hom = enumHom(FinSet{0}, FinSet{4});
  ASSERT_EQ(hom.size(), 1u);
  EXPECT_TRUE(hom[0].table().empty());
}

TEST(Exponential, CurryOfAnd) {
  FinFun conj = fun(4, 2, {0, 0, 0, 1});
  FinFun c = curry(conj, FinSet{2}, FinSet{2});
  EXPECT_EQ(c.table(), (std::vector<std::size_t>{0, 1}));
  // index 0 is the constant 0 map, index 1 is [0,1]
  EXPECT_EQ(indexToFun(FinSet{2}, FinSet{2}, 0), fun(2, 2, {0, 0}));
  EXPECT_EQ(indexToFun(FinSet{2}, FinSet{2}, 1), fun(2, 2, {0, 1}));
  EXPECT_EQ(compose(ev(FinSet{2}, FinSet{2}),
                    productMap(c, FinFun::identity(FinSet{2}))),
            conj);
}

TEST(Exponential, CodecIsBigEndian) {
  FinFun f = fun(3, 4, {1, 2, 3});
  EXPECT_EQ(funToIndex(f), 1u * 16 + 2u * 4 + 3u);
}

// Independent oracle: evaluation by decoding digits by hand.
TEST(Exponential, EvMatchesDigitDecoding) {
  FinSet a{3}, b{2};
  FinFun e = ev(a, b);
  for (std::size_t h = 0; h < 8; ++h) {
    for (std::size_t x = 0; x < 3; ++x) {
      std::size_t digit = (h >> (2 - x)) & 1u;
      EXPECT_EQ(e(h * 3 + x), digit);
    }
  }
}

TEST(Cartesian, UnitorsAndAssociator) {
  EXPECT_EQ(cartLambda(FinSet{3}).table(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(cartRho(FinSet{2}).table(), (std::vector<std::size_t>{0, 1}));
  FinSet two{2};
  FinFun a = cartAlpha(two, two, two);
  EXPECT_TRUE(a.isBijective());
  EXPECT_EQ(compose(cartAlphaInv(two, two, two), a),
            FinFun::identity(a.dom()));
}

TEST(Enumeration, HomSetsHaveDistinctMembers) {
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      auto hom = enumHom(FinSet{a}, FinSet{b});
      std::set<std::vector<std::size_t>> seen;
      for (const auto& f : hom) seen.insert(f.table());
      EXPECT_EQ(seen.size(), hom.size());
    }
  }
}

TEST(Capacity, ExponentialOverflowIsReported) {
  EXPECT_THROW(exponential(FinSet{64}, FinSet{64}), CapacityError);
}

TEST(LazyFun, AgreesWithTabulation) {
  FinFun f = fun(3, 3, {2, 0, 1});
  LazyFun l(f);
  EXPECT_EQ(l.tabulate(), f);
  EXPECT_EQ(composeLazy(l, l).tabulate(), compose(f, f));
}

TEST(Laws, ExhaustiveUpToThree) {
  EXPECT_TRUE(checkCompositionLaws(3).passed());
  EXPECT_TRUE(checkHomEnumeration(3).passed());
  EXPECT_TRUE(checkProductUniversal(3).passed());
  EXPECT_TRUE(checkExponentialLaws(2).passed());
  EXPECT_TRUE(checkCartesianIsos(3).passed());
}
