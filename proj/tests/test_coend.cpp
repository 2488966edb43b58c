#include <gtest/gtest.h>

#include "notions/controls.hpp"
#include "notions/coend.hpp"
#include "oracle.hpp"

using namespace notions;

namespace {

Functor constantOne() {
  return makeFunctor("1", [](FinSet) { return kTerminal; },
                     [](const LazyFun&, std::size_t) { return std::size_t{0}; },
                     0);
}

ContraFunctor constantOneContra() {
  return {"1", [](FinSet) { return kTerminal; },
          [](const LazyFun&, std::size_t) { return std::size_t{0}; }};
}

/// Index of (v, k) in F W x (W -> X).
std::size_t gen(FinSet w, FinSet x, std::size_t v, const FinFun& k) {
  return v * exponential(w, x).card + funToIndex(k);
}

}  // namespace

TEST(Coend, CoYonedaMatchesOracle) {
  struct Case {
    Functor f;
    std::size_t x;
    std::size_t expected;
  };
  std::vector<Case> cases{{maybeFunctor(), 2, 3},
                          {inclusionFunctor(), 2, 2},
                          {maybeFunctor(), 0, 1},
                          {readerFunctor(2), 2, 4},
                          {writerOr2Functor(), 1, 2}};
  for (const auto& c : cases) {
    auto H = coYonedaIntegrand(c.f, FinSet{c.x});
    auto space = computeCoend(H, 2, {.clampToArity = false});
    auto q = oracle::coend(H, 2);
    EXPECT_EQ(q.classes(), c.expected) << c.f.name() << " at " << c.x;
    EXPECT_EQ(space->carrier().card, c.expected) << c.f.name() << " at " << c.x;
  }
}

TEST(Coend, ElementaryAndAllMorphismModesAgree) {
  auto H = coYonedaIntegrand(readerFunctor(2), FinSet{2});
  auto a = computeCoend(H, 3, {.mode = RelationMode::Elementary});
  auto b = computeCoend(H, 3, {.mode = RelationMode::AllMorphisms});
  EXPECT_EQ(a->classes(), b->classes());
}

TEST(Coend, ConstantIntegrandCollapses) {
  auto H = separable("const", constantOne(), constantOneContra());
  for (std::size_t k = 0; k <= 3; ++k) {
    EXPECT_EQ(computeCoend(H, k, {.clampToArity = false})->carrier().card, 1u);
  }
}

TEST(Coend, EmptyDiagonalGivesEmptyCarrier) {
  // H(W1, W2) = W2 x (W1 -> 1): empty at W = 0.
  auto H = coYonedaIntegrand(inclusionFunctor(), kTerminal);
  EXPECT_EQ(computeCoend(H, 0, {.clampToArity = false})->carrier().card, 0u);
}

TEST(Coend, InjectIdentifiesRelatedGenerators) {
  Functor m = maybeFunctor();
  FinSet x{2};
  auto space = computeCoend(coYonedaIntegrand(m, x), 2, {.clampToArity = false});
  // h : 1 -> 2, h(0) = 1 relates (Just 0, k . h) at 1 with (Just 1, k) at 2.
  FinFun k = FinFun::identity(FinSet{2});
  FinFun h(FinSet{1}, FinSet{2}, {1});
  std::size_t left = space->inject(FinSet{1}, gen(FinSet{1}, x, 0, compose(k, h)));
  std::size_t right = space->inject(FinSet{2}, gen(FinSet{2}, x, 1, k));
  EXPECT_EQ(left, right);
  auto q = oracle::coend(coYonedaIntegrand(m, x), 2);
  EXPECT_TRUE(q.same(1, gen(FinSet{1}, x, 0, compose(k, h)), 2,
                     gen(FinSet{2}, x, 1, k)));
}

TEST(Coend, NothingBlockIsOneClass) {
  Functor m = maybeFunctor();
  FinSet x{2};
  auto space = computeCoend(coYonedaIntegrand(m, x), 2, {.clampToArity = false});
  std::size_t cls = space->inject(kEmpty, gen(kEmpty, x, 0, fromEmpty(x)));
  for (std::size_t w = 0; w <= 2; ++w) {
    for (const auto& k : enumHom(FinSet{w}, x)) {
      EXPECT_EQ(space->inject(FinSet{w}, gen(FinSet{w}, x, w, k)), cls);
    }
  }
}

TEST(Coend, InjectAboveBoundReduces) {
  Functor m = maybeFunctor();
  FinSet x{2};
  auto space = computeCoend(coYonedaIntegrand(m, x), 3);
  EXPECT_EQ(space->bound(), 1u);
  FinFun k(FinSet{3}, x, {0, 1, 1});
  // Just 2 at W = 3 sits over k(2) = 1
  std::size_t c = space->inject(FinSet{3}, gen(FinSet{3}, x, 2, k));
  FinFun k1(FinSet{1}, x, {1});
  EXPECT_EQ(c, space->inject(kTerminal, gen(kTerminal, x, 0, k1)));
}

TEST(Factorize, CoYonedaWedgeRecoversIso) {
  for (const auto& f : {maybeFunctor(), readerFunctor(2), writerOr2Functor()}) {
    for (std::size_t x = 0; x <= 2; ++x) {
      auto cy = coYonedaReduce(f, FinSet{x}, 3);
      EXPECT_TRUE(cy.iso.isBijective()) << f.name() << " at " << x;
      EXPECT_TRUE(verifyRelations(*cy.space).passed());
    }
  }
}

TEST(Factorize, ConstantWedgeIntoTerminal) {
  auto cy = coYonedaReduce(maybeFunctor(), FinSet{2}, 3);
  FinFun t = factorize(*cy.space, [](FinSet, std::size_t) { return std::size_t{0}; },
                       kTerminal);
  EXPECT_EQ(t, bang(cy.space->carrier()));
}

TEST(Factorize, UniqueAmongAllMapsToSmallTargets) {
  auto cy = coYonedaReduce(maybeFunctor(), FinSet{1}, 3);
  const CoendSpace& s = *cy.space;
  FinSet target{3};
  Wedge w = [](FinSet wobj, std::size_t g) {
    std::size_t nb = exponential(wobj, kTerminal).card;
    return g / nb == wobj.card ? std::size_t{2} : std::size_t{0};
  };
  FinFun t = factorize(s, w, target);
  std::size_t commuting = 0;
  for (const auto& cand : enumHom(s.carrier(), target)) {
    bool ok = true;
    for (std::size_t g = 0; g < s.generatorCount(); ++g) {
      auto [wobj, x] = s.generatorAt(g);
      ok = ok && cand(s.classOf(wobj, x)) == w(wobj, x);
    }
    if (ok) {
      ++commuting;
      EXPECT_EQ(cand, t);
    }
  }
  EXPECT_EQ(commuting, 1u);
}

TEST(Factorize, BrokenWedgeRaises) {
  auto cy = coYonedaReduce(maybeFunctor(), FinSet{2}, 1);
  EXPECT_THROW(factorize(*cy.space, brokenCoYonedaWedge(maybeFunctor(), FinSet{2}),
                         FinSet{3}),
               DinaturalityError);
}

TEST(Stabilization, MaybeStableAtOne) {
  EXPECT_TRUE(stabilizationCheck(coYonedaIntegrand(maybeFunctor(), FinSet{2}), 1)
                  .stable);
}

TEST(Stabilization, ReaderNeedsTwo) {
  auto H = coYonedaIntegrand(readerFunctor(2), FinSet{2});
  EXPECT_FALSE(stabilizationCheck(H, 1).stable);
  EXPECT_TRUE(stabilizationCheck(H, 2).stable);
}

TEST(Stabilization, ConstantStableAtZero) {
  auto H = separable("const", constantOne(), constantOneContra());
  EXPECT_TRUE(stabilizationCheck(H, 0).stable);
}

TEST(Stabilization, CoYonedaBelowArityIsABoundError) {
  EXPECT_THROW(coYonedaReduce(readerFunctor(2), FinSet{2}, 1,
                              {.clampToArity = false}),
               CoendBoundError);
}

TEST(Capacity, GeneratorCapIsEnforced) {
  auto H = coYonedaIntegrand(readerFunctor(2), FinSet{2});
  EXPECT_THROW(computeCoend(H, 3, {.cap = 10, .clampToArity = false}),
               CapacityError);
}
