#include <gtest/gtest.h>

#include "notions/controls.hpp"
#include "notions/equivalence.hpp"

using namespace notions;

namespace {

const Equivalences& eq() {
  static const Equivalences e = makeEquivalences(3, 2);
  return e;
}

const Equivalences& eq4() {
  static const Equivalences e = makeEquivalences(4, 2);
  return e;
}

/// Every generator (W, a, b) of P (x) Q at (X, Y) with |W| <= bound.
template <class Fn>
void forEachGenerator(const Profunctor& p, const Profunctor& q, Point pt,
                      std::size_t bound, Fn&& fn) {
  FinSet x{pt.x}, y{pt.y};
  for (std::size_t w = 0; w <= bound; ++w) {
    FinSet W{w};
    for (std::size_t a = 0; a < p(x, W).card; ++a) {
      for (std::size_t b = 0; b < q(W, y).card; ++b) fn(W, a, b);
    }
  }
}

/// Maybe(X -> Y): Just h = index of h, Nothing = |Y|^|X|.
std::size_t staticMult(FinSet x, FinSet w, FinSet y, std::size_t u,
                       std::size_t v) {
  std::size_t nu = exponential(x, w).card;
  std::size_t nv = exponential(w, y).card;
  if (u == nu || v == nv) return exponential(x, y).card;
  return funToIndex(compose(indexToFun(w, y, v), indexToFun(x, w, u)));
}

}  // namespace

TEST(CayleyStructure, UnitComponentIsBijective) {
  FinFun phi0 = eq().cayleyStructure.gamma0().component({2, 2});
  EXPECT_EQ(phi0.dom().card, 4u);
  EXPECT_TRUE(phi0.isBijective());
}

TEST(CayleyStructure, StrongOnMaybeAndReader) {
  const auto& s = eq().cayleyStructure;
  Functor m = maybeFunctor();
  EXPECT_TRUE(s.gamma(m, m).component({1, 1}).isBijective());
  EXPECT_TRUE(checkStrongComponents(s, m, m, 2).passed());
  EXPECT_TRUE(checkStrongComponents(s, m, readerFunctor(2), 2).passed());
}

TEST(CayleyStructure, Coherence) {
  Functor m = maybeFunctor();
  EXPECT_TRUE(checkMonoidalCoherence(eq().cayleyStructure, m, m, m, 2).passed());
}

TEST(CayleyStructure, CorruptedPhiIsRejected) {
  Functor m = maybeFunctor();
  auto rep = checkMonoidalCoherence(corruptedGamma(eq().cayleyStructure), m, m, m, 2);
  EXPECT_FALSE(rep.passed());
}

TEST(KleisliStructure, UnitComponentIsBijective) {
  FinFun xi0 = eq().kleisliStructure.gamma0().component({2, 2});
  EXPECT_EQ(xi0.dom().card, 4u);
  EXPECT_TRUE(xi0.isBijective());
}

// Oracle: after kleisli(join), xi is Kleisli composition of Maybe maps.
TEST(KleisliStructure, XiFollowedByJoinIsKleisliComposition) {
  const auto& e = eq();
  Functor m = maybeFunctor();
  auto xi = e.kleisliStructure.gamma(m, m);
  auto join = kleisliT(maybeMonad(e.subst).mult);
  Profunctor km = kleisli(m);
  for (Point pt : Profunctor::points(1)) {
    FinSet x{pt.x}, y{pt.y};
    forEachGenerator(km, km, pt, 2, [&](FinSet w, std::size_t a, std::size_t b) {
      auto p = decodeDigits(a, w.card + 1, x.card);
      auto q = decodeDigits(b, y.card + 1, w.card);
      std::size_t expected = 0;
      for (std::size_t i = 0; i < x.card; ++i) {
        std::size_t r = p[i] == w.card ? y.card : q[p[i]];
        expected = expected * (y.card + 1) + r;
      }
      std::size_t got = join.at(pt, evalOnGenerator(xi, pt, w, a, b));
      EXPECT_EQ(got, expected);
    });
  }
}

TEST(KleisliStructure, Coherence) {
  Functor m = maybeFunctor();
  EXPECT_TRUE(checkMonoidalCoherence(eq().kleisliStructure, m, m, m, 2).passed());
  EXPECT_TRUE(checkMonoidalCoherence(eq().kleisliStructure, m, writerOr2Functor(),
                                     identityFunctor(), 2)
                  .passed());
}

TEST(KleisliStructure, XiNotOntoForReader) {
  Functor r = readerFunctor(2);
  auto wit = nonSurjectiveWitness(eq().kleisliStructure.gamma(r, r), 2);
  ASSERT_TRUE(wit.has_value());
  EXPECT_FALSE(wit->second.isSurjective());
}

TEST(Mates, HatStructuresAreCoherent) {
  Profunctor h = homProf();
  Profunctor k = kleisliMaybeProf();
  EXPECT_TRUE(checkMonoidalCoherence(eq().hatLax, h, k, h, 2).passed());
  EXPECT_TRUE(checkMonoidalCoherence(eq().hatOplax, k, h, k, 2).passed());
}

TEST(Mates, ColaxLaxIdentities) {
  const auto& e = eq();
  Profunctor h = homProf();
  Profunctor k = kleisliMaybeProf();
  EXPECT_TRUE(checkColaxLax(e.kleisliAdj, e.hatOplax, e.kleisliStructure, k, h, 2)
                  .passed());
  EXPECT_TRUE(checkColaxLax(e.cayleyAdj, inverseStructure(e.cayleyStructure),
                            e.hatLax, maybeFunctor(), readerFunctor(2), 2)
                  .passed());
}

TEST(Mates, ColaxLaxRejectsCorruptedUnit) {
  const auto& e = eq();
  auto rep = checkColaxLax(e.kleisliAdj, corruptedGamma0(e.hatOplax),
                           e.kleisliStructure, kleisliMaybeProf(), homProf(), 2);
  EXPECT_FALSE(rep.passed());
}

TEST(Mates, IdentityAdjunctionGivesTheStructureBack) {
  auto id = identityStructure<Functor>(eq().day);
  auto mate = mateToRight(identityAdjunction<Functor>(), inverseStructure(id));
  Functor m = maybeFunctor();
  Functor r = readerFunctor(2);
  EXPECT_TRUE(equalOnWindow("gamma", mate.gamma(m, r), id.gamma(m, r), 2).passed());
  EXPECT_TRUE(equalOnWindow("gamma0", mate.gamma0(), id.gamma0(), 2).passed());
}

TEST(Mates, OplaxInputRequired) {
  EXPECT_THROW(mateToRight(eq().cayleyAdj, eq().cayleyStructure), DomainError);
}

TEST(MonoidalTransformations, CayleyUnitAndCounit) {
  const auto& e = eq();
  auto idF = identityStructure<Functor>(e.day);
  auto rl = composeStructures(e.hatLax, e.cayleyStructure);
  auto unit = checkMonoidalNatTrans<Functor, Functor>(
      "eta!", cayleyUnit, idF, rl, maybeFunctor(), writerOr2Functor(), 2);
  EXPECT_TRUE(unit.passed()) << unit.firstCounterexample();
  auto idP = identityStructure<Profunctor>(e.ben);
  auto lr = composeStructures(e.cayleyStructure, e.hatLax);
  auto counit = checkMonoidalNatTrans<Profunctor, Profunctor>(
      "eps!", cayleyCounit, lr, idP, kleisliMaybeProf(), homProf(), 2);
  EXPECT_TRUE(counit.passed()) << counit.firstCounterexample();
}

TEST(MonoidalTransformations, CorruptedUnitIsRejected) {
  const auto& e = eq();
  auto idF = identityStructure<Functor>(e.day);
  auto rl = composeStructures(e.hatLax, e.cayleyStructure);
  std::function<Nat(const Functor&)> bad = [](const Functor& f) {
    Nat t = cayleyUnit(f);
    return f.name() == "maybe" ? collapseToNothing(t) : t;
  };
  Functor m = maybeFunctor();
  auto rep = checkMonoidalNatTrans<Functor, Functor>("eta!", bad, idF, rl, m, m, 2);
  EXPECT_FALSE(rep.passed());
}

// Oracle: the static arrow on Maybe(X -> Y) written out by hand.
TEST(Lift, MaybeIdiomIsTheStaticArrow) {
  const auto& e = eq();
  auto a = liftMonoid(e.cayleyStructure, maybeIdiom(e.day));
  EXPECT_TRUE(checkMonoidLaws(a, 2).passed());
  for (Point pt : Profunctor::points(2)) {
    FinSet x{pt.x}, y{pt.y};
    for (const auto& h : enumHom(x, y)) {
      EXPECT_EQ(a.unit.at(pt, funToIndex(h)), funToIndex(h));
    }
    forEachGenerator(a.carrier, a.carrier, pt, 2,
                     [&](FinSet w, std::size_t u, std::size_t v) {
                       EXPECT_EQ(evalOnGenerator(a.mult, pt, w, u, v),
                                 staticMult(x, w, y, u, v));
                     });
  }
}

TEST(Lift, MaybeMonadIsTheKleisliArrow) {
  const auto& e = eq();
  auto a = liftMonoid(e.kleisliStructure, maybeMonad(e.subst));
  auto hand = kleisliMaybeArrow(e.ben);
  EXPECT_TRUE(equalOnWindow("e", a.unit, hand.unit, 2).passed());
  for (Point pt : Profunctor::points(2)) {
    forEachGenerator(a.carrier, a.carrier, pt, 2,
                     [&](FinSet w, std::size_t u, std::size_t v) {
                       EXPECT_EQ(evalOnGenerator(a.mult, pt, w, u, v),
                                 evalOnGenerator(hand.mult, pt, w, u, v));
                     });
  }
}

TEST(Lift, TrivialIdiomGivesTheUnitArrow) {
  const auto& e = eq();
  auto a = liftMonoid(e.cayleyStructure, trivialMonoid(e.day, "identity-idiom"));
  EXPECT_TRUE(checkMonoidLaws(a, 2).passed());
  EXPECT_EQ(a.carrier(FinSet{2}, FinSet{2}).card, 4u);
}

TEST(Lift, OplaxLemmaRecoversMaybeMonad) {
  const auto& e = eq();
  auto t = makeTMonoid(kleisliMaybeArrow(e.ben), TKind::DiamondAlgebra, 2);
  auto m = arrowToMonad(e, t);
  EXPECT_TRUE(checkMonoidLaws(m, 2).passed());
  Nat iso = makeNat("h |-> h", m.carrier, maybeFunctor(),
                    [](FinSet, std::size_t h) { return h; });
  EXPECT_TRUE(checkMonoidMorphism(iso, m, maybeMonad(e.subst), 2).passed());
}

TEST(Lift, OplaxLemmaOnHomGivesTheTrivialMonad) {
  const auto& e = eq();
  auto m = arrowToMonad(e, makeTMonoid(homArrow(e.ben), TKind::DiamondAlgebra, 2));
  EXPECT_TRUE(checkMonoidLaws(m, 2).passed());
  for (std::size_t z = 0; z <= 2; ++z) EXPECT_EQ(m.carrier(FinSet{z}).card, z);
}

TEST(Lift, StaticWriterIsNotADiamondMonoid) {
  const auto& e = eq();
  auto a = idiomToArrow(e, writerIdiom(e.day, orMonoid()));
  EXPECT_THROW(makeTMonoid(a.base, TKind::DiamondAlgebra, 2), InvertibilityError);
}

TEST(TMonoids, SuppliedStructureIsValidated) {
  const auto& e = eq();
  auto a = kleisliMaybeArrow(e.ben);
  auto good = inverseT(kleisliUnit(a.carrier));
  EXPECT_NO_THROW(makeTMonoid(a, TKind::DiamondAlgebra, 2, good));
  EXPECT_THROW(makeTMonoid(a, TKind::DiamondAlgebra, 2, swapOutputs(good, 0, 1)),
               DomainError);
}

TEST(RoundTrips, Idioms) {
  const auto& e = eq();
  for (const auto& m : {maybeIdiom(e.day), writerIdiom(e.day, orMonoid()),
                        trivialMonoid(e.day, "identity-idiom")}) {
    auto arrow = idiomToArrow(e, m);
    EXPECT_TRUE(checkMonoidLaws(arrow.base, 2).passed()) << m.name;
    auto back = arrowToIdiom(e, arrow);
    EXPECT_TRUE(checkMonoidMorphism(cayleyUnit(m.carrier), m, back, 2).passed())
        << m.name;
    EXPECT_TRUE(bijectiveOnWindow("eta!", cayleyUnit(m.carrier), 2).passed());
  }
}

TEST(RoundTrips, ReaderIdiom) {
  const auto& e = eq4();
  auto m = readerIdiom(e.day, 2);
  auto arrow = idiomToArrow(e, m);
  EXPECT_TRUE(checkMonoidLaws(arrow.base, 1).passed());
  auto back = arrowToIdiom(e, arrow);
  EXPECT_TRUE(checkMonoidMorphism(cayleyUnit(m.carrier), m, back, 2).passed());
}

TEST(RoundTrips, Monads) {
  const auto& e = eq();
  for (const auto& m : {maybeMonad(e.subst), writerMonad(e.subst, orMonoid()),
                        trivialMonoid(e.subst, "identity-monad")}) {
    auto arrow = monadToArrow(e, m);
    EXPECT_TRUE(checkMonoidLaws(arrow.base, 2).passed()) << m.name;
    auto back = arrowToMonad(e, arrow);
    EXPECT_TRUE(checkMonoidMorphism(kleisliCounit(m.carrier), back, m, 2).passed())
        << m.name;
  }
}

TEST(RoundTrips, BoxMonoid) {
  const auto& e = eq();
  auto a = idiomToArrow(e, maybeIdiom(e.day));
  auto a2 = idiomToArrow(e, arrowToIdiom(e, a));
  EXPECT_TRUE(
      checkMonoidMorphism(cayleyCounit(a.base.carrier), a2.base, a.base, 2).passed());
}

TEST(Invertibility, HatXi) {
  const auto& e = eq();
  FinFun hx0 = hatT(e.kleisliStructure.gamma0()).component({2, 0});
  EXPECT_EQ(hx0.dom().card, 2u);
  EXPECT_TRUE(hx0.isBijective());
  EXPECT_TRUE(hatXiInvertibility(e, kleisliMaybeProf(), maybeFunctor()).passed());
  EXPECT_TRUE(hatXiInvertibility(e, homProf(), readerFunctor(2)).passed());
}

TEST(Combinators, ForceAndEval) {
  const auto& e = eq();
  auto k = kleisliMaybeArrow(e.ben);
  auto s = idiomToArrow(e, maybeIdiom(e.day)).base;
  for (const auto& a : {k, s}) {
    EXPECT_TRUE(equalOnWindow("force", forceViaCombinators(a),
                              cayleyCounit(a.carrier), 2)
                    .passed())
        << a.name;
    EXPECT_TRUE(equalOnWindow("eval", evalViaCombinators(a),
                              kleisliUnit(a.carrier), 2)
                    .passed())
        << a.name;
  }
  EXPECT_TRUE(evalViaCombinators(k).component({2, 2}).isBijective());
  EXPECT_TRUE(laveWitness(k, {2, 2}).has_value());
  FinFun ev = evalViaCombinators(s).component({2, 2});
  EXPECT_EQ(ev.dom().card, 5u);
  EXPECT_EQ(ev.cod().card, 9u);
  EXPECT_TRUE(ev.isInjective());
  EXPECT_FALSE(laveWitness(s, {2, 2}).has_value());
}
