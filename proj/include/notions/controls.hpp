#pragma once

// Deliberately corrupted instances, and checks that pass exactly when a law
// checker rejects them.

#include <cstddef>
#include <exception>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "adjunction.hpp"
#include "category.hpp"
#include "coend.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "functor.hpp"
#include "monoidal.hpp"
#include "profunctor.hpp"
#include "report.hpp"

namespace notions {

/// Passes iff `run` reports at least one counterexample, or raises a
/// DinaturalityError naming the violating relation; the evidence is kept.
inline CheckReport expectRejected(const std::string& name,
                                  const std::function<CheckReport()>& run) {
  CheckReport rep(name);
  CheckReport inner;
  try {
    inner = run();
  } catch (const DinaturalityError& e) {
    // the corruption was caught while building an induced map
    rep.pass();
    rep.counterexamples.push_back(std::string("rejected: ") + e.what());
    return rep;
  }
  if (inner.passed()) {
    rep.fail("checker accepted the corrupted instance (" +
             std::to_string(inner.checked) + " comparisons)");
  } else if (inner.firstCounterexample().empty()) {
    rep.fail("checker rejected without a counterexample");
  } else {
    rep.pass();
    rep.counterexamples.push_back("rejected: " + inner.firstCounterexample());
  }
  return rep;
}

/// Passes iff `run` throws E; the message is kept as evidence.
template <class E>
CheckReport expectThrows(const std::string& name,
                         const std::function<void()>& run) {
  CheckReport rep(name);
  try {
    run();
    rep.fail("no error raised");
  } catch (const E& e) {
    rep.pass();
    rep.counterexamples.push_back(std::string("raised: ") + e.what());
  }
  return rep;
}

/// Swaps two outputs of every component (where both exist).
template <class Obj>
Transformation<Obj> swapOutputs(const Transformation<Obj>& t, std::size_t a,
                                std::size_t b) {
  auto swap = [a, b](std::size_t v) { return v == a ? b : v == b ? a : v; };
  Transformation<Obj> r = t;
  r.name = t.name + " (corrupted)";
  auto at = t.at;
  auto target = t.target;
  auto guard = [swap, target](Point p, std::size_t v) {
    return std::max(swap(v), v) < target.at(p).card ? swap(v) : v;
  };
  r.at = [at, guard](Point p, std::size_t v) { return guard(p, at(p, v)); };
  if (t.onGenerator) {
    auto gen = t.onGenerator;
    r.onGenerator = [gen, guard](Point p, FinSet w, std::size_t x,
                                 std::size_t y) {
      return guard(p, gen(p, w, x, y));
    };
  }
  return r;
}

/// Every output replaced by the Nothing of Maybe(Z) (or Maybe(X -> Y)):
/// natural, but not the intended map.
template <class Obj>
Transformation<Obj> collapseToNothing(const Transformation<Obj>& t) {
  Transformation<Obj> r = t;
  r.name = t.name + " (collapsed)";
  auto target = t.target;
  r.at = [target](Point p, std::size_t) { return target.at(p).card - 1; };
  r.onGenerator = {};
  return r;
}

/// F with the first two entries of every F(f) on objects of size >= 2
/// exchanged.
inline Functor corruptedFunctor(const Functor& f) {
  return makeFunctor(
      f.name() + " (corrupted)", [f](FinSet x) { return f(x); },
      [f](const LazyFun& g, std::size_t v) {
        std::size_t r = f.apply(g, v);
        if (f(g.cod()).card < 2) return r;
        return r == 0 ? std::size_t{1} : r == 1 ? std::size_t{0} : r;
      },
      f.arity(), [f](FinSet w, std::size_t v) { return f.support(w, v); });
}

/// Hom with its strength followed by the swap of the two points of Z = 2.
inline Profunctor homWithTwistedStrength() {
  return withStrength(
      homProf(), "hom (twisted strength)",
      [](FinSet x, FinSet y, FinSet z, std::size_t h) {
        std::size_t s = homTimesId(x, y, z, h);
        if (z.card != 2) return s;
        FinSet yz = product(y, z);
        LazyFun twist(yz, yz, [](std::size_t k) { return k ^ 1; });
        return homMapLazy(identityLazy(product(x, z)), twist)(s);
      });
}

/// Cayley(Maybe) whose strength sends Just to Nothing when Z = 2; the
/// fault injected into the adjunctions suite on request.
inline Profunctor cayleyMaybeWithStrengthBug() {
  Profunctor base = cayley(maybeFunctor());
  return withStrength(base, "cayley(maybe) (strength bug)",
                      [base](FinSet x, FinSet y, FinSet z, std::size_t v) {
                        std::size_t s = base.strength(x, y, z, v);
                        if (z.card != 2) return s;
                        return exponential(product(x, z), product(y, z)).card;
                      });
}

/// The identity kleisli-maybe -> kleisli-maybe' where the target strength
/// forgets every result: natural, not strong.
inline ProNat nonStrongIdentity() {
  Profunctor p = kleisliMaybeProf();
  Profunctor q = withStrength(
      p, "kleisli-maybe (forgetful strength)",
      [](FinSet x, FinSet y, FinSet z, std::size_t) {
        // the constant Nothing function
        std::size_t n = y.card * z.card;
        std::size_t r = 0;
        for (std::size_t i = 0; i < x.card * z.card; ++i) r = r * (n + 1) + n;
        return r;
      });
  ProNat t;
  t.name = "id (non-strong)";
  t.source = p;
  t.target = q;
  t.at = [](Point, std::size_t v) { return v; };
  return t;
}

/// The co-Yoneda evaluation wedge with the F k application dropped.
inline Wedge brokenCoYonedaWedge(const Functor& f, FinSet x) {
  return [f, x](FinSet w, std::size_t g) {
    std::size_t nb = exponential(w, x).card;
    std::size_t v = g / nb;
    return std::min(v, f(x).card - 1);
  };
}

template <class Obj>
MonoidRep<Obj> corruptedMultiplication(const MonoidRep<Obj>& m) {
  MonoidRep<Obj> r = m;
  r.name = m.name + " (corrupted mult)";
  r.mult = swapOutputs(m.mult, 0, 1);
  return r;
}

template <class C, class D>
AdjunctionRep<C, D> corruptedUnit(const AdjunctionRep<C, D>& adj) {
  AdjunctionRep<C, D> r = adj;
  r.name = adj.name + " (corrupted unit)";
  auto unit = adj.unit;
  r.unit = [unit](const C& a) { return swapOutputs(unit(a), 0, 1); };
  return r;
}

template <class C, class D>
MonoidalStructure<C, D> corruptedGamma(const MonoidalStructure<C, D>& s) {
  MonoidalStructure<C, D> r = s;
  r.name = s.name + " (corrupted)";
  auto gamma = s.gamma;
  r.gamma = [gamma](const C& a, const C& b) {
    return swapOutputs(gamma(a, b), 0, 1);
  };
  return r;
}

template <class C, class D>
MonoidalStructure<C, D> corruptedGamma0(const MonoidalStructure<C, D>& s) {
  MonoidalStructure<C, D> r = s;
  r.name = s.name + " (corrupted unit)";
  auto gamma0 = s.gamma0;
  r.gamma0 = [gamma0] { return swapOutputs(gamma0(), 0, 1); };
  return r;
}

template <class Obj>
MonoidalCategory<Obj> corruptedAssociator(const MonoidalCategory<Obj>& cat) {
  MonoidalCategory<Obj> r = cat;
  auto alpha = cat.alpha;
  r.alpha = [alpha](const Obj& a, const Obj& b, const Obj& c) {
    return swapOutputs(alpha(a, b, c), 0, 1);
  };
  return r;
}

}  // namespace notions
