#pragma once

// The bridge functors hat, Cayley and Kleisli between [F,S] and strong
// profunctors, the adjunctions Cayley -| hat -| Kleisli, and the idempotent
// comonad box and monad diamond.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "category.hpp"
#include "finset.hpp"
#include "functor.hpp"
#include "monoidal.hpp"
#include "profunctor.hpp"
#include "report.hpp"

namespace notions {

namespace detail {

/// Memo keyed by operand identity; keeps operands alive so keys stay unique.
template <class In, class Out>
class ObjectMemo {
 public:
  template <class Make>
  Out get(const In& in, Make&& make) {
    std::lock_guard lock(mu_);
    auto it = cache_.find(in.impl());
    if (it != cache_.end()) return it->second.second;
    Out out = make();
    cache_.emplace(in.impl(), std::pair{in, out});
    return out;
  }

 private:
  std::mutex mu_;
  std::map<const void*, std::pair<In, Out>> cache_;
};

}  // namespace detail

/// A functor between the two categories, as an operation bundle.
template <class C, class D>
struct CategoryFunctor {
  std::string name;
  std::function<D(const C&)> obj;
  std::function<Transformation<D>(const Transformation<C>&)> mor;
};

// ---------------------------------------------------------------------------
// hat P = P(1, -)

inline Functor hat(const Profunctor& p) {
  static detail::ObjectMemo<Profunctor, Functor> memo;
  return memo.get(p, [&] {
    return makeFunctor(
        "hat(" + p.name() + ")", [p](FinSet z) { return p(kTerminal, z); },
        [p](const LazyFun& g, std::size_t v) {
          return p.apply(identityLazy(kTerminal), g, v);
        },
        p.covariantArity(kTerminal), [p](FinSet z, std::size_t v) {
          return p.covariantSupport(kTerminal, z, v);
        });
  });
}

/// hat tau_Z = tau_{1,Z}
inline Nat hatT(const ProNat& tau) {
  Nat t;
  t.name = "hat(" + tau.name + ")";
  t.source = hat(tau.source);
  t.target = hat(tau.target);
  auto at = tau.at;
  t.at = [at](Point p, std::size_t v) { return at({1, p.x}, v); };
  return t;
}

// ---------------------------------------------------------------------------
// Cayley F = F(X -> Y)

/// h |-> h x id_Z : (X -> Y) -> (X x Z -> Y x Z).
inline LazyFun timesIdLazy(FinSet x, FinSet y, FinSet z) {
  return LazyFun(exponential(x, y), exponential(product(x, z), product(y, z)),
                 [x, y, z](std::size_t h) { return homTimesId(x, y, z, h); });
}

inline Profunctor cayley(const Functor& f) {
  static detail::ObjectMemo<Functor, Profunctor> memo;
  return memo.get(f, [&] {
    return makeProfunctor(
        "cayley(" + f.name() + ")",
        [f](FinSet x, FinSet y) { return f(exponential(x, y)); },
        [f](const LazyFun& a, const LazyFun& b, std::size_t v) {
          return f.apply(homMapLazy(a, b), v);
        },
        [f](FinSet x, FinSet y, FinSet z, std::size_t v) {
          return f.apply(timesIdLazy(x, y, z), v);
        },
        [f](FinSet x) -> std::optional<std::size_t> {
          auto a = f.arity();
          if (!a) return std::nullopt;
          return *a * x.card;
        },
        [f](FinSet x, FinSet w,
            std::size_t v) -> std::optional<std::vector<std::size_t>> {
          auto fns = f.support(exponential(x, w), v);
          if (!fns) return std::nullopt;
          std::vector<std::size_t> pts;
          for (std::size_t h : *fns) {
            for (std::size_t y : decodeDigits(h, w.card, x.card)) {
              pts.push_back(y);
            }
          }
          return sortedUnique(std::move(pts));
        });
  });
}

/// Cayley tau_{X,Y} = tau_{X -> Y}
inline ProNat cayleyT(const Nat& tau) {
  ProNat t;
  t.name = "cayley(" + tau.name + ")";
  t.source = cayley(tau.source);
  t.target = cayley(tau.target);
  auto at = tau.at;
  t.at = [at](Point p, std::size_t v) {
    return at({exponential(FinSet{p.x}, FinSet{p.y}).card, 0}, v);
  };
  return t;
}

// ---------------------------------------------------------------------------
// Kleisli F = X -> F Y

inline Profunctor kleisli(const Functor& f) {
  static detail::ObjectMemo<Functor, Profunctor> memo;
  return memo.get(f, [&] {
    return makeProfunctor(
        "kleisli(" + f.name() + ")",
        [f](FinSet x, FinSet y) { return exponential(x, f(y)); },
        [f](const LazyFun& a, const LazyFun& b, std::size_t k) {
          return homMapLazy(a, f.lazyMap(b))(k);
        },
        [f](FinSet x, FinSet y, FinSet z, std::size_t k) {
          // (x, z) |-> sigma(k x, z)
          FinSet fy = f(y);
          FinSet fyz = f(product(y, z));
          std::size_t r = 0;
          for (std::size_t v : decodeDigits(k, fy.card, x.card)) {
            for (std::size_t c = 0; c < z.card; ++c) {
              LazyFun pairWith(y, product(y, z), [c, z](std::size_t b) {
                return b * z.card + c;
              });
              r = r * fyz.card + f.apply(pairWith, v);
            }
          }
          return r;
        },
        [f](FinSet x) -> std::optional<std::size_t> {
          auto a = f.arity();
          if (!a) return std::nullopt;
          return *a * x.card;
        },
        [f](FinSet x, FinSet w,
            std::size_t k) -> std::optional<std::vector<std::size_t>> {
          std::vector<std::size_t> pts;
          for (std::size_t v : decodeDigits(k, f(w).card, x.card)) {
            auto s = f.support(w, v);
            if (!s) return std::nullopt;
            pts.insert(pts.end(), s->begin(), s->end());
          }
          return sortedUnique(std::move(pts));
        });
  });
}

/// Kleisli tau_{X,Y} = tau_Y . -
inline ProNat kleisliT(const Nat& tau) {
  ProNat t;
  t.name = "kleisli(" + tau.name + ")";
  t.source = kleisli(tau.source);
  t.target = kleisli(tau.target);
  auto at = tau.at;
  auto src = tau.source;
  auto tgt = tau.target;
  t.at = [at, src, tgt](Point p, std::size_t k) {
    FinSet y{p.y};
    std::size_t n1 = src(y).card;
    std::size_t n2 = tgt(y).card;
    std::size_t r = 0;
    for (std::size_t v : decodeDigits(k, n1, p.x)) {
      r = r * n2 + at({p.y, 0}, v);
    }
    return r;
  };
  return t;
}

inline CategoryFunctor<Profunctor, Functor> hatFunctor() {
  return {"hat", [](const Profunctor& p) { return hat(p); }, hatT};
}
inline CategoryFunctor<Functor, Profunctor> cayleyFunctor() {
  return {"cayley", [](const Functor& f) { return cayley(f); }, cayleyT};
}
inline CategoryFunctor<Functor, Profunctor> kleisliFunctor() {
  return {"kleisli", [](const Functor& f) { return kleisli(f); }, kleisliT};
}

// ---------------------------------------------------------------------------
// Units and counits.

/// eta!_F = F(curry rho) : F Z -> F(1 -> Z)
inline Nat cayleyUnit(const Functor& f) {
  Nat t;
  t.name = "eta!(" + f.name() + ")";
  t.source = f;
  t.target = hat(cayley(f));
  t.at = [f](Point p, std::size_t v) {
    FinSet z{p.x};
    LazyFun curryRho(z, exponential(kTerminal, z), [](std::size_t c) {
      return c;  // the constant map 1 -> Z at c
    });
    return f.apply(curryRho, v);
  };
  return t;
}

/// eta!^-1_F = F(ev . rho^-1) : F(1 -> Z) -> F Z
inline Nat cayleyUnitInverse(const Functor& f) {
  Nat t;
  t.name = "eta!^-1(" + f.name() + ")";
  t.source = hat(cayley(f));
  t.target = f;
  t.at = [f](Point p, std::size_t v) {
    FinSet z{p.x};
    LazyFun evRhoInv(exponential(kTerminal, z), z, [z](std::size_t h) {
      return evLazy(kTerminal, z)(h);
    });
    return f.apply(evRhoInv, v);
  };
  return t;
}

/// eps!_P = P(lambda^-1, ev) . str_{1, X->Y, X} : P(1, X -> Y) -> P(X, Y)
inline ProNat cayleyCounit(const Profunctor& p) {
  ProNat t;
  t.name = "eps!(" + p.name() + ")";
  t.source = cayley(hat(p));
  t.target = p;
  t.at = [p](Point pt, std::size_t v) {
    FinSet x{pt.x};
    FinSet y{pt.y};
    FinSet hom = exponential(x, y);
    std::size_t s = p.strength(kTerminal, hom, x, v);
    return p.apply(LazyFun(cartLambdaInv(x)), evLazy(x, y), s);
  };
  return t;
}

/// eta*_P = curry(varsigma^P . P(rho, id)) : P(X, Y) -> (X -> P(1, Y))
inline ProNat kleisliUnit(const Profunctor& p) {
  ProNat t;
  t.name = "eta*(" + p.name() + ")";
  t.source = p;
  t.target = kleisli(hat(p));
  t.at = [p](Point pt, std::size_t v) {
    FinSet x{pt.x};
    FinSet y{pt.y};
    FinSet p1y = p(kTerminal, y);
    LazyFun idy = identityLazy(y);
    std::size_t r = 0;
    std::size_t w = p.apply(LazyFun(cartRho(x)), idy, v);
    for (std::size_t a = 0; a < x.card; ++a) {
      // varsigma(w, a) = P(b |-> (a, b), id)(w) with B = 1
      LazyFun pairWith(kTerminal, product(x, kTerminal),
                       [a](std::size_t) { return a; });
      r = r * p1y.card + p.apply(pairWith, idy, w);
    }
    return r;
  };
  return t;
}

/// eps*_F = ev . rho^-1 : (1 -> F Z) -> F Z
inline Nat kleisliCounit(const Functor& f) {
  Nat t;
  t.name = "eps*(" + f.name() + ")";
  t.source = hat(kleisli(f));
  t.target = f;
  t.at = [f](Point p, std::size_t h) {
    FinSet fz = f(FinSet{p.x});
    return evLazy(kTerminal, fz)(h);
  };
  return t;
}

/// eps*^-1_F = curry rho : F Z -> (1 -> F Z)
inline Nat kleisliCounitInverse(const Functor& f) {
  Nat t;
  t.name = "eps*^-1(" + f.name() + ")";
  t.source = f;
  t.target = hat(kleisli(f));
  t.at = [f](Point p, std::size_t v) {
    FinSet fz = f(FinSet{p.x});
    return curry(cartRho(fz), fz, kTerminal)(v);
  };
  return t;
}

/// L -| R with unit A -> R L A and counit L R B -> B.
template <class C, class D>
struct AdjunctionRep {
  std::string name;
  CategoryFunctor<C, D> left;
  CategoryFunctor<D, C> right;
  std::function<Transformation<C>(const C&)> unit;
  std::function<Transformation<D>(const D&)> counit;
};

/// Cayley -| hat
inline AdjunctionRep<Functor, Profunctor> cayleyAdjunction() {
  return {"cayley -| hat", cayleyFunctor(), hatFunctor(), cayleyUnit,
          cayleyCounit};
}

/// hat -| Kleisli
inline AdjunctionRep<Profunctor, Functor> kleisliAdjunction() {
  return {"hat -| kleisli", hatFunctor(), kleisliFunctor(), kleisliUnit,
          kleisliCounit};
}

/// (eps L) . (L eta) = id on L A and (R eps) . (eta R) = id on R B.
template <class C, class D>
CheckReport checkTriangles(const AdjunctionRep<C, D>& adj, const C& a,
                           const D& b, std::size_t window) {
  CheckReport rep("triangle identities: " + adj.name);
  D la = adj.left.obj(a);
  rep.merge(equalOnWindow(
      "eps L . L eta at " + a.name(),
      composeT(adj.counit(la), adj.left.mor(adj.unit(a))), identityOf(la),
      D::points(window)));
  C rb = adj.right.obj(b);
  rep.merge(equalOnWindow(
      "R eps . eta R at " + b.name(),
      composeT(adj.right.mor(adj.counit(b)), adj.unit(rb)), identityOf(rb),
      C::points(window)));
  return rep;
}

// ---------------------------------------------------------------------------
// box P = Cayley(hat P), diamond P = Kleisli(hat P).

struct BoxComonad {
  Profunctor object;
  /// eps! : box P -> P
  ProNat counit;
  /// Cayley(eta!_{hat P}) : box P -> box box P
  ProNat comult;
};

struct DiamondMonad {
  Profunctor object;
  /// eta* : P -> diamond P
  ProNat unit;
  /// Kleisli(eps*_{hat P}) : diamond diamond P -> diamond P
  ProNat mult;
};

inline BoxComonad boxComonad(const Profunctor& p) {
  return {cayley(hat(p)), cayleyCounit(p), cayleyT(cayleyUnit(hat(p)))};
}

inline DiamondMonad diamondMonad(const Profunctor& p) {
  return {kleisli(hat(p)), kleisliUnit(p), kleisliT(kleisliCounit(hat(p)))};
}

// ---------------------------------------------------------------------------
// Full-faithfulness probes.

/// A transformation restricted to the window: one table per point.
template <class Obj>
std::vector<FinFun> restrictToWindow(const Transformation<Obj>& t,
                                     std::size_t window) {
  std::vector<FinFun> out;
  for (Point p : Obj::points(window)) out.push_back(t.component(p));
  return out;
}

/// All families of maps P(X,Y) -> Q(X,Y) on the window that are natural and
/// strong, with Z ranging over sizes keeping X x Z and Y x Z in the window.
inline std::vector<std::vector<FinFun>> enumerateStrongFamilies(
    const Profunctor& p, const Profunctor& q, std::size_t window,
    std::size_t cap = 1u << 20) {
  auto pts = Profunctor::points(window);
  std::vector<std::size_t> dom;
  std::vector<std::size_t> cod;
  std::size_t total = 1;
  for (Point pt : pts) {
    dom.push_back(p.at(pt).card);
    cod.push_back(q.at(pt).card);
    total = checkedMul(total, checkedPow(cod.back(), dom.back()));
    if (total > cap) throw CapacityError("too many candidate families");
  }
  auto index = [&](std::size_t x, std::size_t y) { return x * (window + 1) + y; };
  std::vector<std::vector<FinFun>> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<FinFun> fam;
    std::size_t rest = code;
    for (std::size_t i = pts.size(); i-- > 0;) {
      std::size_t n = checkedPow(cod[i], dom[i]);
      fam.push_back(indexToFun(FinSet{dom[i]}, FinSet{cod[i]}, rest % n));
      rest /= n;
    }
    std::reverse(fam.begin(), fam.end());
    bool ok = true;
    for (std::size_t x = 0; x <= window && ok; ++x) {
      for (std::size_t y = 0; y <= window && ok; ++y) {
        const FinFun& t = fam[index(x, y)];
        for (std::size_t x2 = 0; x2 <= window && ok; ++x2) {
          for (std::size_t y2 = 0; y2 <= window && ok; ++y2) {
            const FinFun& t2 = fam[index(x2, y2)];
            for (const auto& f : enumHom(FinSet{x2}, FinSet{x})) {
              for (const auto& g : enumHom(FinSet{y}, FinSet{y2})) {
                if (compose(t2, p.onMaps(f, g)) != compose(q.onMaps(f, g), t)) {
                  ok = false;
                }
              }
            }
          }
        }
        for (std::size_t z = 0;
             ok && z <= window && x * z <= window && y * z <= window; ++z) {
          FinSet Z{z};
          const FinFun& tz = fam[index(x * z, y * z)];
          if (compose(tz, p.strengthMap(FinSet{x}, FinSet{y}, Z)) !=
              compose(q.strengthMap(FinSet{x}, FinSet{y}, Z), t)) {
            ok = false;
          }
        }
      }
    }
    if (ok) out.push_back(std::move(fam));
  }
  return out;
}

struct FaithfulnessProbe {
  CheckReport injective;
  std::size_t transformations = 0;
  std::size_t strongFamilies = 0;
  std::size_t familiesInImage = 0;
};

/// The action of Cayley or Kleisli on Nat(F, G), F polynomial: injectivity
/// on the window, and how many strong families on the small window are hit.
inline FaithfulnessProbe fullFaithfulnessProbe(
    const CategoryFunctor<Functor, Profunctor>& which, const Functor& f,
    const Functor& g, std::size_t window, std::size_t familyWindow = 1) {
  FaithfulnessProbe probe;
  probe.injective = CheckReport(which.name + " faithful on Nat(" + f.name() +
                                ", " + g.name() + ")");
  auto nats = enumerateNatFromPoly(f, g);
  probe.transformations = nats.size();
  std::vector<std::vector<FinFun>> images;
  for (const auto& tau : nats) {
    images.push_back(restrictToWindow(which.mor(tau), window));
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      probe.injective.expect(images[i] != images[j], [&] {
        return nats[i].name + " and " + nats[j].name + " have equal images";
      });
    }
  }
  auto fams =
      enumerateStrongFamilies(which.obj(f), which.obj(g), familyWindow);
  probe.strongFamilies = fams.size();
  for (const auto& fam : fams) {
    for (const auto& tau : nats) {
      if (restrictToWindow(which.mor(tau), familyWindow) == fam) {
        ++probe.familiesInImage;
        break;
      }
    }
  }
  return probe;
}

/// Two distinct strong families P -> Q on the window with equal hat-image,
/// if any.
inline std::optional<std::pair<std::vector<FinFun>, std::vector<FinFun>>>
hatNonFaithfulWitness(const Profunctor& p, const Profunctor& q,
                      std::size_t window = 1) {
  auto fams = enumerateStrongFamilies(p, q, window);
  auto hatPart = [window](const std::vector<FinFun>& fam) {
    std::vector<FinFun> out;
    for (std::size_t z = 0; z <= window; ++z) {
      out.push_back(fam[1 * (window + 1) + z]);
    }
    return out;
  };
  for (std::size_t i = 0; i < fams.size(); ++i) {
    for (std::size_t j = i + 1; j < fams.size(); ++j) {
      if (hatPart(fams[i]) == hatPart(fams[j])) {
        return std::pair{fams[i], fams[j]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace notions
