#pragma once

// Verification suites over the instance library, one per module.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "adjunction.hpp"
#include "coend.hpp"
#include "controls.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "finset_laws.hpp"
#include "functor.hpp"
#include "library.hpp"
#include "monoidal.hpp"
#include "profunctor.hpp"
#include "report.hpp"

namespace notions {

enum class Status { Pass, Fail, Skipped };

inline const char* statusName(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

struct SuiteConfig {
  std::size_t maxObj = 2;
  std::size_t coendBound = 3;
  bool failFast = false;
  /// Replaces cayley(maybe)'s strength in the adjunctions suite by a broken
  /// one.
  bool injectStrengthBug = false;
};

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  /// First counterexample of a failing check.
  std::string counterexample;
  /// Evidence recorded by a passing check (expected failures, witnesses).
  std::string note;
  std::size_t elapsedMs = 0;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(),
        [s](const CheckResult& c) { return c.status == s; }));
  }
  bool passed() const {
    return count(Status::Fail) == 0 && count(Status::Skipped) == 0;
  }
};

struct SuiteCheck {
  std::string name;
  std::function<CheckReport()> run;
};

inline const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{
      "finset",   "functors",    "coends",   "profunctors", "monoids",
      "adjunctions", "monoidal", "equivalences", "all"};
  return names;
}

namespace suites {

using Checks = std::vector<SuiteCheck>;

inline void add(Checks& out, std::string name, std::function<CheckReport()> run) {
  out.push_back({std::move(name), std::move(run)});
}

/// A passing report carrying a note.
inline CheckReport noted(const std::string& name, std::string note) {
  CheckReport r(name);
  r.pass();
  r.counterexamples.push_back(std::move(note));
  return r;
}

inline std::vector<Functor> libraryFunctors() {
  std::vector<Functor> out;
  for (const auto& n : functorInstanceNames()) out.push_back(functorInstance(n));
  out.push_back(inclusionFunctor());
  return out;
}

inline std::vector<Profunctor> libraryProfunctors() {
  std::vector<Profunctor> out;
  for (const auto& n : profunctorInstanceNames()) {
    out.push_back(profunctorInstance(n));
  }
  out.push_back(kleisli(maybeFunctor()));
  return out;
}

/// Reader instances need a coend bound of at least 4 (arity 2 * 2).
inline std::size_t readerBound(std::size_t k) { return std::max<std::size_t>(k, 4); }

/// Strength checks on coend-backed profunctors stay at points whose
/// coends are exact under the bound.
inline StrengthWindow tensorStrengthWindow(std::size_t w) {
  return {std::min<std::size_t>(w, 1), std::min<std::size_t>(w, 2), 3};
}

// ---------------------------------------------------------------------------

inline Checks finset(const SuiteConfig& c) {
  Checks out;
  std::size_t n = c.maxObj + 1;
  add(out, "finset/composition laws", [n] { return checkCompositionLaws(n); });
  add(out, "finset/hom enumeration", [n] { return checkHomEnumeration(n); });
  add(out, "finset/product universal property",
      [n] { return checkProductUniversal(n); });
  add(out, "finset/exponential laws",
      [w = c.maxObj] { return checkExponentialLaws(w); });
  add(out, "finset/cartesian isos and coherence",
      [n] { return checkCartesianIsos(n); });
  return out;
}

/// F(f x g) . sigma = sigma . (F f x g) for f, g in the window.
inline CheckReport checkStrengthNaturality(const Functor& f, std::size_t w) {
  CheckReport rep("canonical strength naturality: " + f.name());
  for (std::size_t a = 0; a <= w; ++a) {
    for (std::size_t a2 = 0; a2 <= w; ++a2) {
      for (std::size_t b = 0; b <= w; ++b) {
        for (std::size_t b2 = 0; b2 <= w; ++b2) {
          FinSet A{a}, A2{a2}, B{b}, B2{b2};
          FinFun s = canonicalStrength(f, A, B);
          FinFun s2 = canonicalStrength(f, A2, B2);
          for (const auto& g : enumHom(A, A2)) {
            FinFun fg = f.onMorphism(g);
            for (const auto& h : enumHom(B, B2)) {
              rep.expect(compose(f.onMorphism(productMap(g, h)), s) ==
                             compose(s2, productMap(fg, h)),
                         [&] {
                           return "f=" + g.str() + ", g=" + h.str();
                         });
            }
          }
        }
      }
    }
  }
  return rep;
}

inline Checks functors(const SuiteConfig& c) {
  Checks out;
  std::size_t w = c.maxObj;
  for (const auto& f : libraryFunctors()) {
    add(out, "functors/functor laws: " + f.name(),
        [f, w] { return checkFunctorLaws(f, w + 1); });
    add(out, "functors/canonical strength at B=1 bijective: " + f.name(),
        [f, w] {
          CheckReport r("strength at 1");
          for (std::size_t a = 0; a <= w; ++a) {
            FinFun s = canonicalStrength(f, FinSet{a}, kTerminal);
            r.expect(s.isBijective(), [&] {
              return "A=" + std::to_string(a) + ": " + s.str();
            });
          }
          return r;
        });
    add(out, "functors/canonical strength naturality: " + f.name(),
        [f, w] { return checkStrengthNaturality(f, w); });
  }
  add(out, "functors/naturality: return i -> maybe", [w] {
    return checkNaturality(makeNat("return", inclusionFunctor(), maybeFunctor(),
                                   [](FinSet, std::size_t x) { return x; }),
                           w);
  });
  add(out, "functors/naturality: identity on reader2", [w] {
    return checkNaturality(identityOf(readerFunctor(2)), w);
  });
  add(out, "functors/negative control: functor laws reject corrupted maybe",
      [w] {
        return expectRejected("corrupted maybe", [w] {
          return checkFunctorLaws(corruptedFunctor(maybeFunctor()), w);
        });
      });
  add(out, "functors/negative control: naturality rejects corrupted return",
      [w] {
        return expectRejected("corrupted return", [w] {
          Nat e = makeNat("return", inclusionFunctor(), maybeFunctor(),
                          [](FinSet, std::size_t x) { return x; });
          return checkNaturality(swapOutputs(e, 0, 1), w);
        });
      });
  return out;
}

inline Checks coends(const SuiteConfig& c) {
  Checks out;
  std::size_t w = c.maxObj;
  std::size_t k = c.coendBound;
  for (const auto& f : libraryFunctors()) {
    std::size_t arity = f.arity().value_or(k);
    add(out, "coends/co-Yoneda: " + f.name(), [f, w, arity] {
      CheckReport r("co-Yoneda");
      for (std::size_t x = 0; x <= w; ++x) {
        auto cy = coYonedaReduce(f, FinSet{x}, arity);
        r.expect(cy.space->carrier() == f(FinSet{x}) && cy.iso.isBijective(),
                 [&] {
                   return "X=" + std::to_string(x) + ": " +
                          std::to_string(cy.space->carrier().card) +
                          " classes vs " + std::to_string(f(FinSet{x}).card);
                 });
        r.merge(verifyRelations(*cy.space));
      }
      return r;
    });
    bool expectUnstable = k < arity;
    std::string name = "coends/stabilization at K=" + std::to_string(k) +
                       ": " + f.name() +
                       (expectUnstable ? " [expected failure]" : "");
    // a bound below the arity only shows up once X has arity-many points
    std::size_t xmax = std::max(w, arity);
    add(out, name, [f, xmax, k, expectUnstable] {
      CheckReport r("stabilization");
      std::string notes;
      for (std::size_t x = 0; x <= xmax; ++x) {
        auto v = stabilizationCheck(coYonedaIntegrand(f, FinSet{x}), k);
        std::string where = "X=" + std::to_string(x) + ": ";
        if (expectUnstable) {
          if (!v.stable) {
            notes += (notes.empty() ? "" : "; ") + where + v.detail;
          }
          r.pass();
        } else {
          r.expect(v.stable, [&] { return where + "not stable: " + v.detail; });
        }
      }
      if (expectUnstable) {
        r.counterexamples.push_back(
            notes.empty() ? "stable at this window"
                          : "not stable (expected below arity): " + notes);
      }
      return r;
    });
  }
  add(out, "coends/constant integrand", [k] {
    CheckReport r("constant");
    auto H = separable("const", makeFunctor("1", [](FinSet) { return kTerminal; },
                                            [](const LazyFun&, std::size_t) {
                                              return std::size_t{0};
                                            },
                                            0),
                       ContraFunctor{"1", [](FinSet) { return kTerminal; },
                                     [](const LazyFun&, std::size_t) {
                                       return std::size_t{0};
                                     }});
    for (std::size_t b = 0; b <= k; ++b) {
      auto s = computeCoend(H, b, {.clampToArity = false});
      r.expect(s->carrier().card == 1, [&] {
        return "K=" + std::to_string(b) + ": " +
               std::to_string(s->carrier().card) + " classes";
      });
    }
    auto v = stabilizationCheck(H, 0);
    r.expect(v.stable, [&] { return "K=0: " + v.detail; });
    return r;
  });
  add(out, "coends/negative control: factorize rejects a broken wedge", [] {
    return expectThrows<DinaturalityError>("broken wedge", [] {
      auto cy = coYonedaReduce(maybeFunctor(), FinSet{2}, 1);
      factorize(*cy.space, brokenCoYonedaWedge(maybeFunctor(), FinSet{2}),
                FinSet{3});
    });
  });
  return out;
}

inline Checks profunctors(const SuiteConfig& c) {
  Checks out;
  std::size_t w = c.maxObj;
  for (const auto& p : libraryProfunctors()) {
    add(out, "profunctors/profunctor laws: " + p.name(),
        [p, w] { return checkProfunctorLaws(p, w); });
    add(out, "profunctors/strength laws: " + p.name(),
        [p, w] { return checkStrengthLaws(p, w); });
    add(out, "profunctors/sigma and varsigma at 1 bijective: " + p.name(),
        [p, w] {
          CheckReport r("canonical strengths at 1");
          for (std::size_t x = 0; x <= w; ++x) {
            for (std::size_t y = 0; y <= w; ++y) {
              FinSet X{x}, Y{y};
              r.expect(sigmaStrength(p, X, Y, kTerminal).isBijective(), [&] {
                return "sigma at (X,Y)=(" + std::to_string(x) + "," +
                       std::to_string(y) + ")";
              });
              r.expect(varsigmaStrength(p, kTerminal, X, Y).isBijective(),
                       [&] {
                         return "varsigma at (B,Y)=(" + std::to_string(x) +
                                "," + std::to_string(y) + ")";
                       });
            }
          }
          return r;
        });
  }
  add(out, "profunctors/strong naturality: identity on hom",
      [w] { return checkStrongNaturality(identityOf(homProf()), w); });
  add(out, "profunctors/strong naturality: arr of kleisli-maybe-arrow", [w] {
    return checkStrongNaturality(kleisliMaybeArrow(benabouCategory()).unit, w);
  });
  add(out, "profunctors/negative control: strength laws reject a twisted "
           "strength",
      [w] {
        return expectRejected("twisted strength", [w] {
          return checkStrengthLaws(homWithTwistedStrength(), w);
        });
      });
  add(out, "profunctors/negative control: strong naturality rejects a "
           "non-strong transformation",
      [w] {
        return expectRejected("non-strong",
                              [w] { return checkStrongNaturality(nonStrongIdentity(), w); });
      });
  return out;
}

inline Checks monoids(const SuiteConfig& c) {
  Checks out;
  std::size_t w = c.maxObj;
  std::size_t k = c.coendBound;
  auto day = dayCategory(k);
  auto subst = substCategory(k);
  auto ben = benabouCategory(k);
  auto day4 = dayCategory(readerBound(k));
  auto subst4 = substCategory(readerBound(k));
  std::vector<FunctorMonoid> fms{
      maybeMonad(subst),         readerMonad(subst4, 2),
      writerMonad(subst, orMonoid()), trivialMonoid(subst, "identity-monad"),
      maybeIdiom(day),           readerIdiom(day4, 2),
      writerIdiom(day, orMonoid()),  trivialMonoid(day, "identity-idiom")};
  for (const auto& m : fms) {
    add(out, "monoids/monoid laws: " + m.name + " (" + tagName(m.tag()) + ")",
        [m, w] { return checkMonoidLaws(m, w); });
  }
  for (const auto& a : {kleisliMaybeArrow(ben), homArrow(ben)}) {
    add(out, "monoids/monoid laws: " + a.name + " (" + tagName(a.tag()) + ")",
        [a, w] { return checkMonoidLaws(a, w); });
    add(out, "monoids/arrow strength: " + a.name,
        [a, w] { return checkArrowStrength(a, tensorStrengthWindow(w)); });
  }
  add(out, "monoids/monoid morphism: return from the trivial monad", [subst, w] {
    auto m = maybeMonad(subst);
    return checkMonoidMorphism(m.unit, trivialMonoid(subst, "identity-monad"),
                               m, w);
  });
  add(out, "monoids/monoid morphism: identity on maybe-monad", [subst, w] {
    auto m = maybeMonad(subst);
    return checkMonoidMorphism(identityOf(m.carrier), m, m, w);
  });
  add(out, "monoids/negative control: monoid laws reject a corrupted mult",
      [subst, w] {
        return expectRejected("corrupted mult", [&] {
          return checkMonoidLaws(corruptedMultiplication(maybeMonad(subst)), w);
        });
      });
  add(out, "monoids/negative control: monoid laws reject a collapsed mult",
      [subst, w] {
        return expectRejected("collapsed mult", [&] {
          auto m = maybeMonad(subst);
          m.mult = collapseToNothing(m.mult);
          return checkMonoidLaws(m, w);
        });
      });
  add(out, "monoids/negative control: morphism check rejects a collapsed map",
      [subst, w] {
        return expectRejected("collapsed morphism", [&] {
          auto m = maybeMonad(subst);
          return checkMonoidMorphism(collapseToNothing(identityOf(m.carrier)),
                                     m, m, w);
        });
      });
  add(out, "monoids/negative control: morphism check rejects a broken map",
      [subst, w] {
        return expectRejected("broken morphism", [&] {
          auto m = maybeMonad(subst);
          return checkMonoidMorphism(swapOutputs(identityOf(m.carrier), 0, 1),
                                     m, m, w);
        });
      });
  return out;
}

inline Checks adjunctions(const SuiteConfig& c) {
  Checks out;
  std::size_t w = c.maxObj;
  auto ca = cayleyAdjunction();
  auto ka = kleisliAdjunction();
  std::vector<Profunctor> tri{homProf(), kleisliMaybeProf(),
                              cayley(maybeFunctor())};
  for (const auto& f : libraryFunctors()) {
    for (const auto& p : tri) {
      add(out, "adjunctions/triangles: cayley -| hat at " + f.name() + ", " +
                   p.name(),
          [ca, f, p, w] { return checkTriangles(ca, f, p, w); });
      add(out, "adjunctions/triangles: hat -| kleisli at " + p.name() + ", " +
                   f.name(),
          [ka, f, p, w] { return checkTriangles(ka, p, f, w); });
    }
    add(out, "adjunctions/eta! inverted by F(ev . rho^-1): " + f.name(),
        [f, w] {
          return twoSidedInverseOnWindow("eta!", cayleyUnit(f),
                                         cayleyUnitInverse(f),
                                         Functor::points(w));
        });
    add(out, "adjunctions/eps* inverted by curry rho: " + f.name(), [f, w] {
      return twoSidedInverseOnWindow("eps*", kleisliCounit(f),
                                     kleisliCounitInverse(f),
                                     Functor::points(w));
    });
    Profunctor cf = cayley(f);
    if (c.injectStrengthBug && f.name() == "maybe") {
      cf = cayleyMaybeWithStrengthBug();
    }
    add(out, "adjunctions/strength laws: cayley(" + f.name() + ")",
        [cf, w] { return checkStrengthLaws(cf, w); });
    add(out, "adjunctions/strength laws: kleisli(" + f.name() + ")",
        [f, w] { return checkStrengthLaws(kleisli(f), w); });
  }
  for (const auto& p : libraryProfunctors()) {
    add(out, "adjunctions/box idempotent: " + p.name(), [p, w] {
      return bijectiveOnWindow("box comultiplication", boxComonad(p).comult,
                               Profunctor::points(w));
    });
    add(out, "adjunctions/diamond idempotent: " + p.name(), [p, w] {
      return bijectiveOnWindow("diamond multiplication", diamondMonad(p).mult,
                               Profunctor::points(w));
    });
    add(out, "adjunctions/eps! strong natural: " + p.name(),
        [p, w] { return checkStrongNaturality(cayleyCounit(p), w); });
    add(out, "adjunctions/eta* strong natural: " + p.name(),
        [p, w] { return checkStrongNaturality(kleisliUnit(p), w); });
  }
  for (const auto& f : libraryFunctors()) {
    add(out, "adjunctions/eta! natural: " + f.name(),
        [f, w] { return checkNaturality(cayleyUnit(f), w); });
    add(out, "adjunctions/eps* natural: " + f.name(),
        [f, w] { return checkNaturality(kleisliCounit(f), w); });
  }
  add(out, "adjunctions/eps! invertible at cayley(maybe)", [w] {
    return bijectiveOnWindow("eps!", cayleyCounit(cayley(maybeFunctor())),
                             Profunctor::points(w));
  });
  add(out, "adjunctions/eta* invertible at kleisli-maybe", [w] {
    return bijectiveOnWindow("eta*", kleisliUnit(kleisliMaybeProf()),
                             Profunctor::points(w));
  });
  add(out, "adjunctions/eps! not onto at kleisli-maybe", [w] {
    CheckReport r("eps! at kleisli-maybe");
    FinFun e = cayleyCounit(kleisliMaybeProf()).component({w, w});
    r.expect(!e.isSurjective(), [] { return std::string("surjective"); });
    r.counterexamples.push_back("component " + std::to_string(e.dom().card) +
                                " -> " + std::to_string(e.cod().card));
    return r;
  });
  add(out, "adjunctions/eta* injective, not onto at cayley(maybe)", [w] {
    CheckReport r("eta* at cayley(maybe)");
    FinFun e = kleisliUnit(cayley(maybeFunctor())).component({w, w});
    r.expect(e.isInjective() && !e.isSurjective(),
             [&] { return "component " + e.str(); });
    r.counterexamples.push_back("component " + std::to_string(e.dom().card) +
                                " -> " + std::to_string(e.cod().card));
    return r;
  });
  for (const auto& [label, which] :
       {std::pair{"cayley", cayleyFunctor()}, std::pair{"kleisli", kleisliFunctor()}}) {
    add(out, std::string("adjunctions/full faithfulness: ") + label +
                 " on Nat(maybe, maybe)",
        [which, w] {
          auto probe =
              fullFaithfulnessProbe(which, maybeFunctor(), maybeFunctor(), w);
          CheckReport r = probe.injective;
          r.expect(probe.familiesInImage == probe.strongFamilies, [&] {
            return std::to_string(probe.strongFamilies - probe.familiesInImage) +
                   " strong families outside the image";
          });
          r.counterexamples.push_back(
              std::to_string(probe.transformations) + " transformations, " +
              std::to_string(probe.strongFamilies) + " strong families, " +
              std::to_string(probe.familiesInImage) + " in the image");
          return r;
        });
  }
  add(out, "adjunctions/hat non-faithfulness search", [] {
    std::string found;
    auto ps = std::vector<Profunctor>{homProf(), kleisliMaybeProf(),
                                      cayley(maybeFunctor())};
    for (const auto& p : ps) {
      for (const auto& q : ps) {
        if (found.empty() && hatNonFaithfulWitness(p, q, 1)) {
          found = p.name() + " -> " + q.name();
        }
      }
    }
    return noted("hat search", found.empty()
                                   ? "no witness at this scale"
                                   : "witness between " + found);
  });
  add(out, "adjunctions/negative control: triangles reject a corrupted unit",
      [ca, w] {
        return expectRejected("corrupted unit", [&] {
          return checkTriangles(corruptedUnit(ca), maybeFunctor(), homProf(), w);
        });
      });
  return out;
}

inline Checks monoidal(const SuiteConfig& c) {
  Checks out;
  std::size_t w = c.maxObj;
  std::size_t k = c.coendBound;
  auto E = std::make_shared<Equivalences>(makeEquivalences(k, w));
  Functor M = maybeFunctor();
  Functor R = readerFunctor(2);
  Functor W = writerOr2Functor();
  Functor I = identityFunctor();
  Profunctor H = homProf();
  Profunctor KM = kleisliMaybeProf();
  auto strWin = tensorStrengthWindow(w);

  add(out, "monoidal/structural isos: Day",
      [E, M, W, I, w] { return checkStructuralIsos(*E->day, M, W, I, w); });
  add(out, "monoidal/structural isos: substitution",
      [E, M, W, I, w] { return checkStructuralIsos(*E->subst, M, W, I, w); });
  add(out, "monoidal/structural isos: Benabou",
      [E, H, KM, w] { return checkStructuralIsos(*E->ben, KM, H, KM, w); });
  add(out, "monoidal/coherence: Day",
      [E, M, I, w] { return checkCoherence(*E->day, M, I, M, I, w); });
  add(out, "monoidal/coherence: substitution",
      [E, M, I, w] { return checkCoherence(*E->subst, M, I, M, I, w); });
  add(out, "monoidal/coherence: Benabou",
      [E, H, KM, w] { return checkCoherence(*E->ben, KM, H, KM, H, w); });
  add(out, "monoidal/tensor strength: kleisli-maybe (x) hom", [E, H, KM, strWin] {
    return checkStrengthLaws(E->ben->tensor(KM, H), strWin);
  });
  add(out, "monoidal/day sizes symmetric", [E, M, R, W, w] {
    CheckReport r("day symmetry on sizes");
    std::vector<Functor> fs{M, R, W};
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        for (std::size_t x = 0; x <= w; ++x) {
          std::size_t a = E->day->tensor(f, g)(FinSet{x}).card;
          std::size_t b = E->day->tensor(g, f)(FinSet{x}).card;
          r.expect(a == b, [&] {
            return f.name() + " * " + g.name() + " at " + std::to_string(x) +
                   ": " + std::to_string(a) + " vs " + std::to_string(b);
          });
        }
      }
    }
    return r;
  });

  add(out, "monoidal/cayley phi strong: (maybe, maybe)", [E, M, w] {
    return checkStrongComponents(E->cayleyStructure, M, M, w);
  });
  add(out, "monoidal/cayley phi strong: (maybe, reader2)", [E, M, R, w] {
    return checkStrongComponents(E->cayleyStructure, M, R, w);
  });
  add(out, "monoidal/cayley phi coherence: (maybe, maybe, maybe)",
      [E, M, w] { return checkMonoidalCoherence(E->cayleyStructure, M, M, M, w); });
  add(out, "monoidal/kleisli xi coherence: (maybe, maybe, maybe)",
      [E, M, w] { return checkMonoidalCoherence(E->kleisliStructure, M, M, M, w); });
  add(out, "monoidal/kleisli xi coherence: (maybe, writer-or2, identity)",
      [E, M, W, I, w] {
        return checkMonoidalCoherence(E->kleisliStructure, M, W, I, w);
      });
  add(out, "monoidal/kleisli xi0 bijective", [E, w] {
    return bijectiveOnWindow("xi0", E->kleisliStructure.gamma0(),
                             Profunctor::points(w));
  });
  add(out, "monoidal/kleisli xi surjectivity search", [E, M, R, W, w] {
    std::vector<Functor> fs{M, R, W};
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        if (auto wit = nonSurjectiveWitness(E->kleisliStructure.gamma(f, g), w)) {
          return noted("xi", "xi(" + f.name() + "," + g.name() +
                                 ") not onto at " +
                                 Profunctor::describe(wit->first) + " (" +
                                 std::to_string(wit->second.dom().card) +
                                 " -> " +
                                 std::to_string(wit->second.cod().card) + ")");
        }
      }
    }
    return noted("xi", "no witness at this scale");
  });
  add(out, "monoidal/mate on hat of cayley coherence",
      [E, H, KM, w] { return checkMonoidalCoherence(E->hatLax, H, KM, H, w); });
  add(out, "monoidal/mate on hat of kleisli coherence",
      [E, H, KM, w] { return checkMonoidalCoherence(E->hatOplax, KM, H, KM, w); });
  add(out, "monoidal/colax-lax identities: hat -| kleisli", [E, H, KM, w] {
    CheckReport r = checkColaxLax(E->kleisliAdj, E->hatOplax,
                                  E->kleisliStructure, KM, H, w);
    r.merge(checkColaxLax(E->kleisliAdj, E->hatOplax, E->kleisliStructure, KM,
                          KM, w));
    return r;
  });
  add(out, "monoidal/colax-lax identities: cayley -| hat", [E, M, R, w] {
    return checkColaxLax(E->cayleyAdj, inverseStructure(E->cayleyStructure),
                         E->hatLax, M, R, w);
  });
  add(out, "monoidal/mate of the identity adjunction", [E, M, R, w] {
    auto id = identityStructure<Functor>(E->day);
    auto mate = mateToRight(identityAdjunction<Functor>(), inverseStructure(id));
    CheckReport r("identity mate");
    r.merge(equalOnWindow("gamma", mate.gamma(M, R), id.gamma(M, R), w));
    r.merge(equalOnWindow("gamma0", mate.gamma0(), id.gamma0(), w));
    return r;
  });
  add(out, "monoidal/cayley unit is monoidal", [E, M, W, w] {
    auto id = identityStructure<Functor>(E->day);
    auto rl = composeStructures(E->hatLax, E->cayleyStructure);
    return checkMonoidalNatTrans<Functor, Functor>("eta!", cayleyUnit, id, rl,
                                                   M, W, w);
  });
  add(out, "monoidal/cayley counit is monoidal", [E, H, KM, w] {
    auto id = identityStructure<Profunctor>(E->ben);
    auto lr = composeStructures(E->cayleyStructure, E->hatLax);
    return checkMonoidalNatTrans<Profunctor, Profunctor>("eps!", cayleyCounit,
                                                         lr, id, KM, H, w);
  });
  add(out, "monoidal/negative control: coherence rejects a corrupted phi",
      [E, M, w] {
        return expectRejected("corrupted phi", [&] {
          return checkMonoidalCoherence(corruptedGamma(E->cayleyStructure), M,
                                        M, M, w);
        });
      });
  add(out, "monoidal/negative control: monoidal transformation check rejects "
           "a corrupted unit",
      [E, M, w] {
        return expectRejected("corrupted eta!", [&] {
          auto id = identityStructure<Functor>(E->day);
          auto rl = composeStructures(E->hatLax, E->cayleyStructure);
          std::function<Nat(const Functor&)> bad = [](const Functor& f) {
            return swapOutputs(cayleyUnit(f), 0, 1);
          };
          return checkMonoidalNatTrans<Functor, Functor>("eta!", bad, id, rl,
                                                         M, M, w);
        });
      });
  add(out, "monoidal/negative control: monoidal transformation check rejects "
           "a collapsed unit",
      [E, M, w] {
        return expectRejected("collapsed eta!", [&] {
          auto id = identityStructure<Functor>(E->day);
          auto rl = composeStructures(E->hatLax, E->cayleyStructure);
          std::function<Nat(const Functor&)> bad = [](const Functor& f) {
            Nat t = cayleyUnit(f);
            return f.name() == "maybe" ? collapseToNothing(t) : t;
          };
          return checkMonoidalNatTrans<Functor, Functor>("eta!", bad, id, rl,
                                                         M, M, w);
        });
      });
  add(out, "monoidal/negative control: colax-lax check rejects a corrupted "
           "phi0",
      [E, H, KM, w] {
        return expectRejected("corrupted phi0", [&] {
          return checkColaxLax(E->kleisliAdj, corruptedGamma0(E->hatOplax),
                               E->kleisliStructure, KM, H, w);
        });
      });
  add(out, "monoidal/negative control: coherence rejects a corrupted "
           "associator",
      [E, M, I, w] {
        return expectRejected("corrupted alpha", [&] {
          return checkCoherence(corruptedAssociator(*E->day), M, M, M, I, w);
        });
      });
  return out;
}

inline Checks equivalences(const SuiteConfig& c) {
  Checks out;
  std::size_t w = c.maxObj;
  std::size_t k = c.coendBound;
  auto E = std::make_shared<Equivalences>(makeEquivalences(k, w));
  auto E4 = std::make_shared<Equivalences>(makeEquivalences(readerBound(k), w));

  struct IdiomCase {
    std::shared_ptr<Equivalences> e;
    FunctorMonoid m;
    std::size_t arrowWindow;
  };
  std::vector<IdiomCase> idioms{
      {E, maybeIdiom(E->day), w},
      {E, writerIdiom(E->day, orMonoid()), w},
      {E, trivialMonoid(E->day, "identity-idiom"), w},
      {E4, readerIdiom(E4->day, 2), std::min<std::size_t>(w, 1)}};
  for (const auto& ic : idioms) {
    add(out, "equivalences/idiom to arrow: " + ic.m.name, [ic] {
      auto a = idiomToArrow(*ic.e, ic.m);
      return checkMonoidLaws(a.base, ic.arrowWindow);
    });
    add(out, "equivalences/idiom round trip via eta!: " + ic.m.name, [ic, w] {
      auto back = arrowToIdiom(*ic.e, idiomToArrow(*ic.e, ic.m));
      CheckReport r("idiom round trip");
      r.merge(checkMonoidLaws(back, w));
      r.merge(checkMonoidMorphism(cayleyUnit(ic.m.carrier), ic.m, back, w));
      r.merge(bijectiveOnWindow("eta!", cayleyUnit(ic.m.carrier),
                                Functor::points(w)));
      return r;
    });
  }
  add(out, "equivalences/box-monoid round trip via eps!: static maybe arrow",
      [E, w] {
        auto a = idiomToArrow(*E, maybeIdiom(E->day));
        auto a2 = idiomToArrow(*E, arrowToIdiom(*E, a));
        CheckReport r("box round trip");
        r.merge(checkMonoidMorphism(cayleyCounit(a.base.carrier), a2.base,
                                    a.base, w));
        r.merge(bijectiveOnWindow("eps!", cayleyCounit(a.base.carrier),
                                  Profunctor::points(w)));
        return r;
      });

  struct MonadCase {
    std::shared_ptr<Equivalences> e;
    FunctorMonoid m;
    std::size_t arrowWindow;
  };
  std::vector<MonadCase> monads{
      {E, maybeMonad(E->subst), w},
      {E, writerMonad(E->subst, orMonoid()), w},
      {E, trivialMonoid(E->subst, "identity-monad"), w},
      {E4, readerMonad(E4->subst, 2), std::min<std::size_t>(w, 1)}};
  for (const auto& mc : monads) {
    add(out, "equivalences/monad to arrow: " + mc.m.name, [mc] {
      auto a = monadToArrow(*mc.e, mc.m);
      return checkMonoidLaws(a.base, mc.arrowWindow);
    });
    add(out, "equivalences/monad round trip via eps*: " + mc.m.name, [mc, w] {
      auto back = arrowToMonad(*mc.e, monadToArrow(*mc.e, mc.m));
      CheckReport r("monad round trip");
      r.merge(checkMonoidLaws(back, w));
      r.merge(checkMonoidMorphism(kleisliCounit(mc.m.carrier), back, mc.m, w));
      r.merge(bijectiveOnWindow("eps*", kleisliCounit(mc.m.carrier),
                                Functor::points(w)));
      return r;
    });
  }
  add(out, "equivalences/arrow to monad: kleisli-maybe-arrow", [E, w] {
    auto t = makeTMonoid(kleisliMaybeArrow(E->ben), TKind::DiamondAlgebra, w);
    auto m = arrowToMonad(*E, t);
    CheckReport r("kleisli-maybe-arrow to monad");
    r.merge(checkMonoidLaws(m, w));
    Nat iso = makeNat("h |-> h", m.carrier, maybeFunctor(),
                      [](FinSet, std::size_t h) { return h; });
    r.merge(checkMonoidMorphism(iso, m, maybeMonad(E->subst), w));
    r.merge(bijectiveOnWindow("iso", iso, Functor::points(w)));
    return r;
  });
  add(out, "equivalences/arrow to monad: hom-arrow", [E, w] {
    auto t = makeTMonoid(homArrow(E->ben), TKind::DiamondAlgebra, w);
    auto m = arrowToMonad(*E, t);
    CheckReport r("hom-arrow to monad");
    r.merge(checkMonoidLaws(m, w));
    Nat iso = makeNat("h |-> h", m.carrier, inclusionFunctor(),
                      [](FinSet, std::size_t h) { return h; });
    r.merge(checkMonoidMorphism(
        iso, m, trivialMonoid(E->subst, "identity-monad"), w));
    return r;
  });
  add(out, "equivalences/diamond-monoid round trip: kleisli-maybe-arrow",
      [E, w] {
        auto t = makeTMonoid(kleisliMaybeArrow(E->ben), TKind::DiamondAlgebra, w);
        auto again = monadToArrow(*E, arrowToMonad(*E, t));
        return checkMonoidMorphism(t.structure, again.base, t.base, w);
      });
  add(out, "equivalences/static writer arrow is not a diamond-monoid", [E, w] {
    return expectThrows<InvertibilityError>("static writer", [E, w] {
      auto a = idiomToArrow(*E, writerIdiom(E->day, orMonoid()));
      makeTMonoid(a.base, TKind::DiamondAlgebra, w);
    });
  });
  add(out, "equivalences/kleisli arrow is not a box-monoid", [E, w] {
    return expectThrows<InvertibilityError>("kleisli arrow", [E, w] {
      makeTMonoid(kleisliMaybeArrow(E->ben), TKind::BoxCoalgebra, w);
    });
  });

  std::vector<std::pair<std::string, std::function<ProfunctorMonoid()>>> arrows{
      {"kleisli-maybe-arrow", [E] { return kleisliMaybeArrow(E->ben); }},
      {"hom-arrow", [E] { return homArrow(E->ben); }},
      {"static maybe arrow",
       [E] { return idiomToArrow(*E, maybeIdiom(E->day)).base; }},
      {"static writer arrow",
       [E] { return idiomToArrow(*E, writerIdiom(E->day, orMonoid())).base; }},
      {"kleisli writer arrow",
       [E] { return monadToArrow(*E, writerMonad(E->subst, orMonoid())).base; }}};
  for (const auto& [label, make] : arrows) {
    add(out, "equivalences/force equals eps!: " + label, [make, w] {
      auto a = make();
      return equalOnWindow("force", forceViaCombinators(a),
                           cayleyCounit(a.carrier), w);
    });
    add(out, "equivalences/eval equals eta*: " + label, [make, w] {
      auto a = make();
      return equalOnWindow("eval", evalViaCombinators(a),
                           kleisliUnit(a.carrier), w);
    });
  }
  add(out, "equivalences/lave witness: kleisli-maybe-arrow", [E, w] {
    CheckReport r("lave");
    auto a = kleisliMaybeArrow(E->ben);
    for (Point p : Profunctor::points(w)) {
      auto inv = laveWitness(a, p);
      r.expect(inv.has_value(),
               [&] { return "no inverse at " + Profunctor::describe(p); });
    }
    return r;
  });
  add(out, "equivalences/lave witness absent: static maybe arrow", [E, w] {
    CheckReport r("lave absent");
    auto a = idiomToArrow(*E, maybeIdiom(E->day)).base;
    Point p{w, w};
    FinFun ev = evalViaCombinators(a).component(p);
    r.expect(!laveWitness(a, p).has_value() && ev.isInjective(),
             [&] { return "eval bijective at " + Profunctor::describe(p); });
    r.counterexamples.push_back("eval at " + Profunctor::describe(p) + " is " +
                                std::to_string(ev.dom().card) + " -> " +
                                std::to_string(ev.cod().card));
    return r;
  });
  add(out, "equivalences/hat xi invertibility: kleisli-maybe, maybe", [E] {
    return hatXiInvertibility(*E, kleisliMaybeProf(), maybeFunctor());
  });
  add(out, "equivalences/hat xi invertibility: hom, reader2", [E] {
    return hatXiInvertibility(*E, homProf(), readerFunctor(2));
  });
  add(out, "equivalences/negative control: a wrong structure is rejected",
      [E, w] {
        return expectThrows<DomainError>("wrong structure", [E, w] {
          auto a = kleisliMaybeArrow(E->ben);
          makeTMonoid(a, TKind::DiamondAlgebra, w,
                      swapOutputs(inverseT(kleisliUnit(a.carrier)), 0, 1));
        });
      });
  return out;
}

}  // namespace suites

/// The checks of a suite, in a fixed order. Throws LookupError for an
/// unknown suite.
inline std::vector<SuiteCheck> suiteChecks(const std::string& suite,
                                           const SuiteConfig& config) {
  using Builder = std::vector<SuiteCheck> (*)(const SuiteConfig&);
  static const std::vector<std::pair<std::string, Builder>> builders{
      {"finset", suites::finset},           {"functors", suites::functors},
      {"coends", suites::coends},           {"profunctors", suites::profunctors},
      {"monoids", suites::monoids},         {"adjunctions", suites::adjunctions},
      {"monoidal", suites::monoidal},       {"equivalences", suites::equivalences}};
  std::vector<SuiteCheck> out;
  bool known = false;
  for (const auto& [name, build] : builders) {
    if (suite == "all" || suite == name) {
      known = true;
      auto part = build(config);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (!known) throw LookupError("unknown suite '" + suite + "'");
  return out;
}

/// Runs one check, turning errors into failures that name the computation.
inline CheckResult runCheck(const SuiteCheck& check) {
  CheckResult res;
  res.name = check.name;
  auto start = std::chrono::steady_clock::now();
  try {
    CheckReport rep = check.run();
    if (rep.passed()) {
      res.status = Status::Pass;
      res.note = rep.firstCounterexample();
    } else {
      res.status = Status::Fail;
      res.counterexample = rep.firstCounterexample();
    }
  } catch (const CapacityError& e) {
    res.status = Status::Fail;
    res.counterexample = std::string("resource cap exceeded: ") + e.what();
  } catch (const std::exception& e) {
    res.status = Status::Fail;
    res.counterexample = std::string("error: ") + e.what();
  }
  res.elapsedMs = static_cast<std::size_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return res;
}

/// Runs a suite; with failFast, checks after the first failure are skipped.
/// Results are sorted by name.
inline SuiteReport runSuite(const std::string& suite, const SuiteConfig& config,
                            const std::function<void(const CheckResult&)>&
                                progress = {}) {
  SuiteReport report{suite, config, {}};
  bool stop = false;
  for (const auto& check : suiteChecks(suite, config)) {
    CheckResult res;
    if (stop) {
      res.name = check.name;
      res.status = Status::Skipped;
    } else {
      res = runCheck(check);
      stop = config.failFast && res.status == Status::Fail;
    }
    if (progress) progress(res);
    report.checks.push_back(std::move(res));
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.name < b.name;
                   });
  return report;
}

/// One line per check and a closing tally.
inline std::string renderSummary(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << "[" << statusName(c.status) << "] " << c.name;
    if (c.status == Status::Fail) os << "\n    counterexample: " << c.counterexample;
    if (c.status == Status::Pass && !c.note.empty()) os << "\n    note: " << c.note;
    os << "\n";
  }
  os << report.suite << ": " << report.count(Status::Pass) << " passed, "
     << report.count(Status::Fail) << " failed, "
     << report.count(Status::Skipped) << " skipped\n";
  return os.str();
}

}  // namespace notions
