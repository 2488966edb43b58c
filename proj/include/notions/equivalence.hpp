#pragma once

// Monoidal structures on the bridge functors, doctrinal mates, T-monoids,
// and the idiom/arrow and monad/arrow correspondences.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjunction.hpp"
#include "category.hpp"
#include "finset.hpp"
#include "functor.hpp"
#include "monoidal.hpp"
#include "profunctor.hpp"
#include "report.hpp"

namespace notions {

enum class Flavor { Monoidal, Opmonoidal, Strong };

/// (F, gamma, gamma0). For Monoidal and Strong, gamma : F A (x) F B -> F(A (x) B)
/// and gamma0 : J -> F I; for Opmonoidal the arrows are reversed.
template <class C, class D>
struct MonoidalStructure {
  std::string name;
  Flavor flavor = Flavor::Monoidal;
  std::shared_ptr<const MonoidalCategory<C>> source;
  std::shared_ptr<const MonoidalCategory<D>> target;
  CategoryFunctor<C, D> functor;
  std::function<Transformation<D>(const C&, const C&)> gamma;
  std::function<Transformation<D>()> gamma0;

  bool lax() const { return flavor != Flavor::Opmonoidal; }
};

namespace detail {

/// Caches gamma per operand pair so repeated uses share component tables.
template <class C, class D>
std::function<Transformation<D>(const C&, const C&)> memoizeGamma(
    std::function<Transformation<D>(const C&, const C&)> make) {
  struct Memo {
    std::mutex mu;
    std::map<std::pair<const void*, const void*>,
             std::pair<std::pair<C, C>, Transformation<D>>>
        cache;
  };
  auto memo = std::make_shared<Memo>();
  return [memo, make = std::move(make)](const C& a, const C& b) {
    auto key = std::pair<const void*, const void*>{a.impl(), b.impl()};
    {
      std::lock_guard lock(memo->mu);
      auto it = memo->cache.find(key);
      if (it != memo->cache.end()) return it->second.second;
    }
    Transformation<D> t = make(a, b);
    std::lock_guard lock(memo->mu);
    return memo->cache.emplace(key, std::pair{std::pair{a, b}, t})
        .first->second.second;
  };
}

template <class D>
std::function<Transformation<D>()> memoizeGamma0(
    std::function<Transformation<D>()> make) {
  auto once = std::make_shared<std::optional<Transformation<D>>>();
  auto mu = std::make_shared<std::mutex>();
  return [once, mu, make = std::move(make)] {
    std::lock_guard lock(*mu);
    if (!*once) *once = make();
    return **once;
  };
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The structures on Cayley and Kleisli.

/// phi : Cayley F (x) Cayley G -> Cayley(F * G),
/// (W, u, v) |-> class of (X -> W, u, G(k |-> (h |-> k . h))(v)),
/// with u first restricted to its support.
/// phi0 : Hom -> Cayley(i) is the identity.
inline MonoidalStructure<Functor, Profunctor> cayleyMonoidalStructure(
    FunctorCategoryPtr day, ProfunctorCategoryPtr ben) {
  MonoidalStructure<Functor, Profunctor> s;
  s.name = "cayley";
  s.flavor = Flavor::Strong;
  s.source = day;
  s.target = ben;
  s.functor = cayleyFunctor();
  s.gamma = detail::memoizeGamma<Functor, Profunctor>(
      [day, ben](const Functor& f, const Functor& g) {
        Functor fg = day->tensor(f, g);
        Profunctor src = ben->tensor(cayley(f), cayley(g));
        GeneratorEval w = [f, g, fg](Point p, FinSet wo, std::size_t u,
                                     std::size_t v) {
          FinSet x{p.x};
          FinSet y{p.y};
          FinSet xy = exponential(x, y);
          // u = F(j)(u0) for j : S -> (X -> W) the support of u
          FinSet c = exponential(x, wo);
          FinFun j = FinFun::identity(c);
          if (auto r = restrictToSupport(f, c, u)) {
            j = r->first;
            u = r->second;
          }
          FinSet s = j.dom();
          LazyFun post(exponential(wo, y), exponential(s, xy),
                       [x, wo, y, xy, j](std::size_t k) {
                         LazyFun comp = postcomposeLazy(
                             LazyFun(indexToFun(wo, y, k)), x);
                         std::size_t r = 0;
                         for (std::size_t t = 0; t < j.dom().card; ++t) {
                           r = r * xy.card + comp(j(t));
                         }
                         return r;
                       });
          return tensorSpaces(fg).injectAt({xy.card, 0}, s, u,
                                            g.apply(post, v));
        };
        return fromWedge<Profunctor>(
            "phi(" + f.name() + "," + g.name() + ")", src, cayley(fg), w);
      });
  s.gamma0 = detail::memoizeGamma0<Profunctor>([day, ben] {
    return makeProNat("phi0", ben->unit, cayley(day->unit),
                      [](FinSet, FinSet, std::size_t h) { return h; });
  });
  return s;
}

/// xi : Kleisli F (x) Kleisli G -> Kleisli(F o G),
/// (W, p, q) |-> x |-> class of (W, p x, q). xi0 : Hom -> Kleisli(i) is the
/// identity.
inline MonoidalStructure<Functor, Profunctor> kleisliMonoidalStructure(
    FunctorCategoryPtr subst, ProfunctorCategoryPtr ben) {
  MonoidalStructure<Functor, Profunctor> s;
  s.name = "kleisli";
  s.flavor = Flavor::Monoidal;
  s.source = subst;
  s.target = ben;
  s.functor = kleisliFunctor();
  s.gamma = detail::memoizeGamma<Functor, Profunctor>(
      [subst, ben](const Functor& f, const Functor& g) {
        Functor fg = subst->tensor(f, g);
        Profunctor src = ben->tensor(kleisli(f), kleisli(g));
        GeneratorEval w = [f, fg](Point p, FinSet wo, std::size_t pk,
                                  std::size_t q) {
          FinSet y{p.y};
          std::size_t n = fg(y).card;
          std::size_t r = 0;
          for (std::size_t u : decodeDigits(pk, f(wo).card, p.x)) {
            r = r * n + tensorSpaces(fg).injectAt({y.card, 0}, wo, u, q);
          }
          return r;
        };
        return fromWedge<Profunctor>(
            "xi(" + f.name() + "," + g.name() + ")", src, kleisli(fg), w);
      });
  s.gamma0 = detail::memoizeGamma0<Profunctor>([subst, ben] {
    return makeProNat("xi0", ben->unit, kleisli(subst->unit),
                      [](FinSet, FinSet, std::size_t h) { return h; });
  });
  return s;
}

/// The oplax structure given by pointwise inverses of a strong one.
template <class C, class D>
MonoidalStructure<C, D> inverseStructure(const MonoidalStructure<C, D>& s) {
  if (s.flavor != Flavor::Strong) {
    throw DomainError(s.name + " is not strong");
  }
  MonoidalStructure<C, D> r = s;
  r.name = s.name + "^-1";
  r.flavor = Flavor::Opmonoidal;
  auto gamma = s.gamma;
  auto gamma0 = s.gamma0;
  r.gamma = detail::memoizeGamma<C, D>(
      [gamma](const C& a, const C& b) { return inverseT(gamma(a, b)); });
  r.gamma0 = detail::memoizeGamma0<D>([gamma0] { return inverseT(gamma0()); });
  return r;
}

/// Composite of two lax structures, G . F.
template <class C, class D, class E>
MonoidalStructure<C, E> composeStructures(const MonoidalStructure<D, E>& g,
                                          const MonoidalStructure<C, D>& f) {
  if (!f.lax() || !g.lax()) throw DomainError("composite of oplax structure");
  MonoidalStructure<C, E> r;
  r.name = g.name + " . " + f.name;
  r.flavor = Flavor::Monoidal;
  r.source = f.source;
  r.target = g.target;
  auto fo = f.functor;
  auto go = g.functor;
  r.functor = {go.name + " . " + fo.name,
               [fo, go](const C& a) { return go.obj(fo.obj(a)); },
               [fo, go](const Transformation<C>& t) {
                 return go.mor(fo.mor(t));
               }};
  // G(f_{A,B}) . g_{FA,FB}
  r.gamma = detail::memoizeGamma<C, E>([f, g](const C& a, const C& b) {
    return composeT(g.functor.mor(f.gamma(a, b)),
                    g.gamma(f.functor.obj(a), f.functor.obj(b)));
  });
  r.gamma0 = detail::memoizeGamma0<E>(
      [f, g] { return composeT(g.functor.mor(f.gamma0()), g.gamma0()); });
  return r;
}

/// The identity functor with identity structure maps.
template <class C>
MonoidalStructure<C, C> identityStructure(
    std::shared_ptr<const MonoidalCategory<C>> cat) {
  MonoidalStructure<C, C> s;
  s.name = "id";
  s.flavor = Flavor::Strong;
  s.source = cat;
  s.target = cat;
  s.functor = {"id", [](const C& a) { return a; },
               [](const Transformation<C>& t) { return t; }};
  s.gamma = [cat](const C& a, const C& b) {
    return identityOf(cat->tensor(a, b));
  };
  s.gamma0 = [cat] { return identityOf(cat->unit); };
  return s;
}

template <class C>
AdjunctionRep<C, C> identityAdjunction() {
  CategoryFunctor<C, C> id{"id", [](const C& a) { return a; },
                           [](const Transformation<C>& t) { return t; }};
  return {"id -| id", id, id, [](const C& a) { return identityOf(a); },
          [](const C& a) { return identityOf(a); }};
}

// ---------------------------------------------------------------------------
// Doctrinal mates for L -| R, L : C -> D.

/// Lax structure on R from an oplax structure (phi, phi0) on L:
/// gamma = R(eps (x) eps) . R phi . eta, gamma0 = R phi0 . eta_I.
template <class C, class D>
MonoidalStructure<D, C> mateToRight(const AdjunctionRep<C, D>& adj,
                                    const MonoidalStructure<C, D>& oplax) {
  if (oplax.flavor != Flavor::Opmonoidal) {
    throw DomainError("mateToRight expects an opmonoidal structure on L");
  }
  MonoidalStructure<D, C> r;
  r.name = "mate(" + oplax.name + ")";
  r.flavor = Flavor::Monoidal;
  r.source = oplax.target;
  r.target = oplax.source;
  r.functor = adj.right;
  auto ccat = oplax.source;
  auto dcat = oplax.target;
  r.gamma = detail::memoizeGamma<D, C>(
      [adj, oplax, ccat, dcat](const D& a, const D& b) {
        C ra = adj.right.obj(a);
        C rb = adj.right.obj(b);
        return composeAll(
            adj.right.mor(dcat->tensorMor(adj.counit(a), adj.counit(b))),
            adj.right.mor(oplax.gamma(ra, rb)),
            adj.unit(ccat->tensor(ra, rb)));
      });
  r.gamma0 = detail::memoizeGamma0<C>([adj, oplax, ccat] {
    return composeT(adj.right.mor(oplax.gamma0()), adj.unit(ccat->unit));
  });
  return r;
}

/// Oplax structure on L from a lax structure (gamma, gamma0) on R:
/// phi = eps . L gamma . L(eta (x) eta), phi0 = eps_J . L gamma0.
template <class C, class D>
MonoidalStructure<C, D> mateToLeft(const AdjunctionRep<C, D>& adj,
                                   const MonoidalStructure<D, C>& lax) {
  if (!lax.lax()) {
    throw DomainError("mateToLeft expects a monoidal structure on R");
  }
  MonoidalStructure<C, D> r;
  r.name = "mate(" + lax.name + ")";
  r.flavor = Flavor::Opmonoidal;
  r.source = lax.target;
  r.target = lax.source;
  r.functor = adj.left;
  auto ccat = lax.target;
  auto dcat = lax.source;
  r.gamma = detail::memoizeGamma<C, D>(
      [adj, lax, ccat, dcat](const C& x, const C& y) {
        D lx = adj.left.obj(x);
        D ly = adj.left.obj(y);
        return composeAll(
            adj.counit(dcat->tensor(lx, ly)), adj.left.mor(lax.gamma(lx, ly)),
            adj.left.mor(ccat->tensorMor(adj.unit(x), adj.unit(y))));
      });
  r.gamma0 = detail::memoizeGamma0<D>([adj, lax, dcat] {
    return composeT(adj.counit(dcat->unit), adj.left.mor(lax.gamma0()));
  });
  return r;
}

// ---------------------------------------------------------------------------
// Checkers.

/// Associativity and unit coherence of a (lax or oplax) monoidal functor at
/// the given objects.
template <class C, class D>
CheckReport checkMonoidalCoherence(const MonoidalStructure<C, D>& s,
                                   const C& a, const C& b, const C& c,
                                   std::size_t window) {
  CheckReport rep("monoidal coherence: " + s.name);
  const auto& sc = *s.source;
  const auto& dc = *s.target;
  const auto& F = s.functor;
  auto pts = D::points(window);
  D fa = F.obj(a);
  D fb = F.obj(b);
  D fc = F.obj(c);
  C bc = sc.tensor(b, c);
  C ab = sc.tensor(a, b);
  if (s.lax()) {
    // F(alpha) . gamma_{A,BC} . (id (x) gamma_{B,C})
    //   = gamma_{AB,C} . (gamma_{A,B} (x) id) . alpha
    rep.merge(equalOnWindow(
        "associativity",
        composeAll(F.mor(sc.alpha(a, b, c)), s.gamma(a, bc),
                   dc.tensorMor(identityOf(fa), s.gamma(b, c))),
        composeAll(s.gamma(ab, c), dc.tensorMor(s.gamma(a, b), identityOf(fc)),
                   dc.alpha(fa, fb, fc)),
        pts));
    // F(lambda) . gamma_{I,A} . (gamma0 (x) id) = lambda
    rep.merge(equalOnWindow(
        "left unit",
        composeAll(F.mor(sc.lambda(a)), s.gamma(sc.unit, a),
                   dc.tensorMor(s.gamma0(), identityOf(fa))),
        dc.lambda(fa), pts));
    rep.merge(equalOnWindow(
        "right unit",
        composeAll(F.mor(sc.rho(a)), s.gamma(a, sc.unit),
                   dc.tensorMor(identityOf(fa), s.gamma0())),
        dc.rho(fa), pts));
  } else {
    // alpha . (id (x) gamma_{B,C}) . gamma_{A,BC}
    //   = (gamma_{A,B} (x) id) . gamma_{AB,C} . F(alpha)
    rep.merge(equalOnWindow(
        "associativity",
        composeAll(dc.alpha(fa, fb, fc),
                   dc.tensorMor(identityOf(fa), s.gamma(b, c)),
                   s.gamma(a, bc)),
        composeAll(dc.tensorMor(s.gamma(a, b), identityOf(fc)),
                   s.gamma(ab, c), F.mor(sc.alpha(a, b, c))),
        pts));
    // lambda . (gamma0 (x) id) . gamma_{I,A} = F(lambda)
    rep.merge(equalOnWindow(
        "left unit",
        composeAll(dc.lambda(fa), dc.tensorMor(s.gamma0(), identityOf(fa)),
                   s.gamma(sc.unit, a)),
        F.mor(sc.lambda(a)), pts));
    rep.merge(equalOnWindow(
        "right unit",
        composeAll(dc.rho(fa), dc.tensorMor(identityOf(fa), s.gamma0()),
                   s.gamma(a, sc.unit)),
        F.mor(sc.rho(a)), pts));
  }
  return rep;
}

/// Every structure component at the given objects is a bijection.
template <class C, class D>
CheckReport checkStrongComponents(const MonoidalStructure<C, D>& s,
                                  const C& a, const C& b, std::size_t window) {
  CheckReport rep("strong components: " + s.name);
  auto pts = D::points(window);
  rep.merge(bijectiveOnWindow("gamma", s.gamma(a, b), pts));
  rep.merge(bijectiveOnWindow("gamma0", s.gamma0(), pts));
  return rep;
}

/// tau : F => G between lax monoidal functors is monoidal:
/// tau_I . gamma0 = delta0 and tau_{A (x) B} . gamma = delta . (tau (x) tau).
template <class C, class D>
CheckReport checkMonoidalNatTrans(
    const std::string& name,
    const std::function<Transformation<D>(const C&)>& tau,
    const MonoidalStructure<C, D>& src, const MonoidalStructure<C, D>& tgt,
    const C& a, const C& b, std::size_t window) {
  if (!src.lax() || !tgt.lax()) {
    throw DomainError("checkMonoidalNatTrans expects monoidal structures");
  }
  CheckReport rep("monoidal transformation: " + name);
  const auto& sc = *src.source;
  const auto& dc = *src.target;
  auto pts = D::points(window);
  rep.merge(equalOnWindow("unit", composeT(tau(sc.unit), src.gamma0()),
                          tgt.gamma0(), pts));
  rep.merge(equalOnWindow(
      "tensor", composeT(tau(sc.tensor(a, b)), src.gamma(a, b)),
      composeT(tgt.gamma(a, b), dc.tensorMor(tau(a), tau(b))), pts));
  return rep;
}

/// R phi0 . eta_I = gamma0 and R phi_{A,B} . eta_{A (x) B}
///   = gamma_{LA,LB} . (eta_A (x) eta_B).
template <class C, class D>
CheckReport checkColaxLax(const AdjunctionRep<C, D>& adj,
                          const MonoidalStructure<C, D>& oplaxL,
                          const MonoidalStructure<D, C>& laxR, const C& a,
                          const C& b, std::size_t window) {
  CheckReport rep("colax-lax identities: " + adj.name);
  const auto& cc = *oplaxL.source;
  auto pts = C::points(window);
  rep.merge(equalOnWindow(
      "unit", composeT(adj.right.mor(oplaxL.gamma0()), adj.unit(cc.unit)),
      laxR.gamma0(), pts));
  D la = adj.left.obj(a);
  D lb = adj.left.obj(b);
  rep.merge(equalOnWindow(
      "tensor",
      composeT(adj.right.mor(oplaxL.gamma(a, b)), adj.unit(cc.tensor(a, b))),
      composeT(laxR.gamma(la, lb), cc.tensorMor(adj.unit(a), adj.unit(b))),
      pts));
  return rep;
}

/// The first window point where a component is not surjective, with its
/// size, if any.
template <class Obj>
std::optional<std::pair<Point, FinFun>> nonSurjectiveWitness(
    const Transformation<Obj>& t, std::size_t window) {
  for (Point p : Obj::points(window)) {
    FinFun c = t.component(p);
    if (!c.isSurjective()) return std::pair{p, c};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Transport of monoids.

/// (F M, F m . gamma, F e . gamma0)
template <class C, class D>
MonoidRep<D> liftMonoid(const MonoidalStructure<C, D>& s,
                        const MonoidRep<C>& m) {
  if (!s.lax()) throw DomainError("liftMonoid expects a monoidal structure");
  const auto& F = s.functor;
  MonoidRep<D> r;
  r.name = F.name + "(" + m.name + ")";
  r.cat = s.target;
  r.carrier = F.obj(m.carrier);
  r.unit = composeT(F.mor(m.unit), s.gamma0());
  r.mult = composeT(F.mor(m.mult), s.gamma(m.carrier, m.carrier));
  return r;
}

enum class TKind {
  /// Coalgebra M -> box M for the comonad Cayley . hat.
  BoxCoalgebra,
  /// Algebra diamond M -> M for the monad Kleisli . hat.
  DiamondAlgebra,
};

/// A monoid together with its (unique) T-(co)algebra structure.
template <class Obj>
struct TMonoid {
  MonoidRep<Obj> base;
  TKind kind;
  Transformation<Obj> structure;
};

namespace detail {

inline ProNat derivedStructure(const Profunctor& a, TKind kind,
                               std::size_t window) {
  ProNat t = kind == TKind::BoxCoalgebra ? cayleyCounit(a) : kleisliUnit(a);
  auto rep = bijectiveOnWindow(t.name, t, Profunctor::points(window));
  if (!rep.passed()) {
    throw InvertibilityError(
        t.name + " is not invertible, so " + a.name() + " carries no " +
        (kind == TKind::BoxCoalgebra ? "box-coalgebra" : "diamond-algebra") +
        " structure: " + rep.firstCounterexample());
  }
  return inverseT(t);
}

}  // namespace detail

/// The derived structure is the inverse of eps! (box) or eta* (diamond).
/// A supplied structure is validated against it.
inline TMonoid<Profunctor> makeTMonoid(const ProfunctorMonoid& m, TKind kind,
                                       std::size_t window,
                                       std::optional<ProNat> supplied = {}) {
  ProNat derived = detail::derivedStructure(m.carrier, kind, window);
  if (supplied) {
    auto rep = equalOnWindow("supplied structure", *supplied, derived,
                             Profunctor::points(window));
    if (!rep.passed()) {
      throw DomainError("structure " + supplied->name + " on " + m.name +
                        " differs from the derived one: " +
                        rep.firstCounterexample());
    }
    return {m, kind, *supplied};
  }
  return {m, kind, derived};
}

/// (L C, L m . phi_{C,C}^-1, L e . phi0^-1) for an oplax L whose required
/// components are inverted through the adjunction:
///   phi0^-1 = (L gamma0)^-1 . eps^-1,
///   phi_{A,C}^-1 = L(id (x) alpha) . (L(gamma . (eta (x) id)))^-1 . eps^-1.
/// The constructed inverses are checked on the window against phi.
template <class C, class D>
MonoidRep<D> liftMonoidOplax(const AdjunctionRep<C, D>& adj,
                             const MonoidalStructure<D, C>& laxR,
                             const MonoidalStructure<C, D>& oplaxL,
                             const TMonoid<C>& tm, std::size_t window) {
  const auto& cc = *oplaxL.source;
  const auto& dc = *oplaxL.target;
  const auto& L = adj.left;
  const auto& R = adj.right;
  const C& M = tm.base.carrier;
  D lm = L.obj(M);
  C rlm = R.obj(lm);
  auto pts = D::points(window);

  auto invert = [&](const Transformation<D>& t, const std::string& what) {
    auto rep = bijectiveOnWindow(what, t, pts);
    if (!rep.passed()) {
      throw InvertibilityError(what + " is not invertible: " +
                               rep.firstCounterexample());
    }
    return inverseT(t);
  };

  auto phi0Inv = composeT(invert(L.mor(laxR.gamma0()), "L gamma0"),
                          invert(adj.counit(dc.unit), "eps_J"));
  auto phiInv = [&](const C& a) {
    D la = L.obj(a);
    auto inner = composeT(laxR.gamma(la, lm),
                          cc.tensorMor(adj.unit(a), identityOf(rlm)));
    return composeAll(
        L.mor(cc.tensorMor(identityOf(a), tm.structure)),
        invert(L.mor(inner), "L(gamma . (eta (x) id)) at " + a.name()),
        invert(adj.counit(dc.tensor(la, lm)), "eps at " + a.name()));
  };
  auto phiMM = phiInv(M);
  auto phiMMM = phiInv(cc.tensor(M, M));

  auto require = [](const CheckReport& rep, const std::string& what) {
    if (!rep.passed()) {
      throw InvertibilityError(what + " has no inverse of the stated form: " +
                               rep.firstCounterexample());
    }
  };
  require(twoSidedInverseOnWindow("phi0", oplaxL.gamma0(), phi0Inv, pts),
          "phi0");
  require(twoSidedInverseOnWindow("phi_{C,C}", oplaxL.gamma(M, M), phiMM, pts),
          "phi_{C,C}");
  require(twoSidedInverseOnWindow("phi_{C(x)C,C}",
                                  oplaxL.gamma(cc.tensor(M, M), M), phiMMM,
                                  pts),
          "phi_{C(x)C,C}");

  MonoidRep<D> r;
  r.name = L.name + "(" + tm.base.name + ")";
  r.cat = oplaxL.target;
  r.carrier = lm;
  r.unit = composeT(L.mor(tm.base.unit), phi0Inv);
  r.mult = composeT(L.mor(tm.base.mult), phiMM);
  return r;
}

// ---------------------------------------------------------------------------
// The two correspondences.

/// Shared context: the three monoidal categories, the structures on the
/// bridge functors and their mates.
struct Equivalences {
  FunctorCategoryPtr day;
  FunctorCategoryPtr subst;
  ProfunctorCategoryPtr ben;
  AdjunctionRep<Functor, Profunctor> cayleyAdj;
  AdjunctionRep<Profunctor, Functor> kleisliAdj;
  /// Strong monoidal (phi, phi0) on Cayley.
  MonoidalStructure<Functor, Profunctor> cayleyStructure;
  /// Monoidal structure on hat, the mate of phi^-1.
  MonoidalStructure<Profunctor, Functor> hatLax;
  /// Monoidal (xi, xi0) on Kleisli.
  MonoidalStructure<Functor, Profunctor> kleisliStructure;
  /// Opmonoidal structure on hat, the mate of xi.
  MonoidalStructure<Profunctor, Functor> hatOplax;
  std::size_t window = 2;
};

inline Equivalences makeEquivalences(std::size_t bound = 3,
                                     std::size_t window = 2,
                                     CoendOptions opts = {}) {
  Equivalences e;
  e.day = dayCategory(bound, opts);
  e.subst = substCategory(bound, opts);
  e.ben = benabouCategory(bound, opts);
  e.cayleyAdj = cayleyAdjunction();
  e.kleisliAdj = kleisliAdjunction();
  e.cayleyStructure = cayleyMonoidalStructure(e.day, e.ben);
  e.hatLax = mateToRight(e.cayleyAdj, inverseStructure(e.cayleyStructure));
  e.kleisliStructure = kleisliMonoidalStructure(e.subst, e.ben);
  e.hatOplax = mateToLeft(e.kleisliAdj, e.kleisliStructure);
  e.window = window;
  return e;
}

/// Idiom |-> static arrow, with coalgebra Cayley(eta!).
inline TMonoid<Profunctor> idiomToArrow(const Equivalences& e,
                                        const FunctorMonoid& idiom) {
  if (idiom.tag() != MonoidalTag::Day) {
    throw DomainError(idiom.name + " is not a Day monoid");
  }
  ProfunctorMonoid arrow = liftMonoid(e.cayleyStructure, idiom);
  return makeTMonoid(arrow, TKind::BoxCoalgebra, e.window,
                     cayleyT(cayleyUnit(idiom.carrier)));
}

inline FunctorMonoid arrowToIdiom(const Equivalences& e,
                                  const TMonoid<Profunctor>& arrow) {
  if (arrow.kind != TKind::BoxCoalgebra) {
    throw DomainError(arrow.base.name + " carries no box-coalgebra");
  }
  return liftMonoid(e.hatLax, arrow.base);
}

/// Monad |-> Kleisli arrow, with algebra Kleisli(eps*).
inline TMonoid<Profunctor> monadToArrow(const Equivalences& e,
                                        const FunctorMonoid& monad) {
  if (monad.tag() != MonoidalTag::Subst) {
    throw DomainError(monad.name + " is not a substitution monoid");
  }
  ProfunctorMonoid arrow = liftMonoid(e.kleisliStructure, monad);
  return makeTMonoid(arrow, TKind::DiamondAlgebra, e.window,
                     kleisliT(kleisliCounit(monad.carrier)));
}

inline FunctorMonoid arrowToMonad(const Equivalences& e,
                                  const TMonoid<Profunctor>& arrow) {
  if (arrow.kind != TKind::DiamondAlgebra) {
    throw DomainError(arrow.base.name + " carries no diamond-algebra");
  }
  return liftMonoidOplax(e.kleisliAdj, e.kleisliStructure, e.hatOplax, arrow,
                         e.window);
}

/// hat xi0 and hat(xi_{hat P, F} . (eta*_P (x) id)) are componentwise
/// bijective.
inline CheckReport hatXiInvertibility(const Equivalences& e,
                                      const Profunctor& p, const Functor& f) {
  CheckReport rep("hat xi invertibility (" + p.name() + ", " + f.name() + ")");
  auto pts = Functor::points(e.window);
  rep.merge(bijectiveOnWindow("hat xi0", hatT(e.kleisliStructure.gamma0()),
                              pts));
  auto composite =
      composeT(e.kleisliStructure.gamma(hat(p), f),
               e.ben->tensorMor(kleisliUnit(p), identityOf(kleisli(f))));
  rep.merge(bijectiveOnWindow("hat(xi . (eta* (x) id))", hatT(composite),
                              pts));
  return rep;
}

// ---------------------------------------------------------------------------
// Arrow combinators.

/// force f = arr (x |-> ((), x)) >>> first f >>> arr (ev),
/// as a map Cayley(hat A) -> A.
inline ProNat forceViaCombinators(const ProfunctorMonoid& a) {
  ProNat t;
  t.name = "force(" + a.name + ")";
  t.source = cayley(hat(a.carrier));
  t.target = a.carrier;
  auto e = a.unit;
  auto m = a.mult;
  auto A = a.carrier;
  t.at = [e, m, A](Point pt, std::size_t f) {
    FinSet x{pt.x};
    FinSet y{pt.y};
    FinSet hom = exponential(x, y);
    FinSet w1 = product(kTerminal, x);
    FinSet w2 = product(hom, x);
    std::size_t lam = e({x.card, w1.card}, funToIndex(cartLambdaInv(x)));
    std::size_t first = A.strength(kTerminal, hom, x, f);
    std::size_t step =
        evalOnGenerator(m, {x.card, w2.card}, w1, lam, first);
    std::size_t evArr = e({w2.card, y.card}, funToIndex(ev(x, y)));
    return evalOnGenerator(m, {x.card, y.card}, w2, step, evArr);
  };
  return t;
}

/// eval c = a |-> arr (() |-> a) >>> c, as a map A -> Kleisli(hat A).
inline ProNat evalViaCombinators(const ProfunctorMonoid& a) {
  ProNat t;
  t.name = "eval(" + a.name + ")";
  t.source = a.carrier;
  t.target = kleisli(hat(a.carrier));
  auto e = a.unit;
  auto m = a.mult;
  auto A = a.carrier;
  t.at = [e, m, A](Point pt, std::size_t c) {
    FinSet x{pt.x};
    std::size_t n = A(kTerminal, FinSet{pt.y}).card;
    std::size_t r = 0;
    for (std::size_t v = 0; v < x.card; ++v) {
      std::size_t arr = e({1, x.card}, v);  // the constant map 1 -> X at v
      r = r * n + evalOnGenerator(m, {1, pt.y}, x, arr, c);
    }
    return r;
  };
  return t;
}

/// A two-sided inverse of eval at the point, if eval is bijective there.
inline std::optional<FinFun> laveWitness(const ProfunctorMonoid& a, Point p) {
  FinFun c = evalViaCombinators(a).component(p);
  if (!c.isBijective()) return std::nullopt;
  return c.inverse();
}

}  // namespace notions
