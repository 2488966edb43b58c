#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "category.hpp"
#include "coend.hpp"
#include "finset.hpp"
#include "functor.hpp"
#include "report.hpp"

namespace notions {

/// A generator (W, a, b) of a coend-backed profunctor, a in P(X, W) and
/// b in Q(W, Y).
struct Generator {
  FinSet w;
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Computable action of a strong endoprofunctor on F.
class ProfunctorImpl {
 public:
  virtual ~ProfunctorImpl() = default;
  virtual std::string name() const = 0;
  virtual FinSet onPair(FinSet x, FinSet y) const = 0;
  /// P(f, g)(v) for f : X' -> X, g : Y -> Y', v in P(X, Y).
  virtual std::size_t apply(const LazyFun& f, const LazyFun& g,
                            std::size_t v) const = 0;
  /// str_{X,Y,Z} : P(X, Y) -> P(X x Z, Y x Z).
  virtual std::size_t strength(FinSet x, FinSet y, FinSet z,
                               std::size_t v) const = 0;
  /// Arity of the functor W |-> P(X, W), if known.
  virtual std::optional<std::size_t> covariantArity(FinSet) const {
    return std::nullopt;
  }
  virtual std::optional<std::vector<std::size_t>> covariantSupport(
      FinSet, FinSet, std::size_t) const {
    return std::nullopt;
  }
  /// Coend-backed profunctors expose a generator of each class and the
  /// strength on generators, so transformations out of them can be checked
  /// without computing coends at large objects.
  virtual std::optional<Generator> generatorOf(FinSet, FinSet,
                                               std::size_t) const {
    return std::nullopt;
  }
  virtual Generator strengthOnGenerator(FinSet, FinSet, FinSet,
                                        const Generator&) const {
    throw DomainError(name() + " has no generator-level strength");
  }
};

/// Value handle on a strong profunctor.
class Profunctor {
 public:
  Profunctor() = default;
  explicit Profunctor(std::shared_ptr<const ProfunctorImpl> impl)
      : impl_(std::move(impl)) {}

  std::string name() const { return impl_->name(); }
  FinSet operator()(FinSet x, FinSet y) const { return impl_->onPair(x, y); }
  std::size_t apply(const LazyFun& f, const LazyFun& g, std::size_t v) const {
    return impl_->apply(f, g, v);
  }
  std::size_t strength(FinSet x, FinSet y, FinSet z, std::size_t v) const {
    return impl_->strength(x, y, z, v);
  }
  std::optional<std::size_t> covariantArity(FinSet x) const {
    return impl_->covariantArity(x);
  }
  std::optional<std::vector<std::size_t>> covariantSupport(
      FinSet x, FinSet w, std::size_t v) const {
    return impl_->covariantSupport(x, w, v);
  }
  std::optional<Generator> generatorOf(FinSet x, FinSet y,
                                       std::size_t v) const {
    return impl_->generatorOf(x, y, v);
  }
  Generator strengthOnGenerator(FinSet x, FinSet y, FinSet z,
                                const Generator& g) const {
    return impl_->strengthOnGenerator(x, y, z, g);
  }

  FinFun onMaps(const FinFun& f, const FinFun& g) const {
    FinSet dom = (*this)(f.cod(), g.dom());
    LazyFun lf(f);
    LazyFun lg(g);
    std::vector<std::size_t> t(dom.card);
    for (std::size_t k = 0; k < dom.card; ++k) t[k] = apply(lf, lg, k);
    return FinFun(dom, (*this)(f.dom(), g.cod()), std::move(t));
  }

  LazyFun lazyMaps(LazyFun f, LazyFun g) const {
    FinSet dom = (*this)(f.cod(), g.dom());
    FinSet cod = (*this)(f.dom(), g.cod());
    auto impl = impl_;
    return LazyFun(dom, cod,
                   [impl, f = std::move(f), g = std::move(g)](std::size_t v) {
                     return impl->apply(f, g, v);
                   });
  }

  FinFun strengthMap(FinSet x, FinSet y, FinSet z) const {
    FinSet dom = (*this)(x, y);
    std::vector<std::size_t> t(dom.card);
    for (std::size_t k = 0; k < dom.card; ++k) t[k] = strength(x, y, z, k);
    return FinFun(dom, (*this)(product(x, z), product(y, z)), std::move(t));
  }

  /// W |-> P(X, W).
  Functor covariantPart(FinSet x) const {
    auto impl = impl_;
    return makeFunctor(
        impl_->name() + "(" + std::to_string(x.card) + ",-)",
        [impl, x](FinSet w) { return impl->onPair(x, w); },
        [impl, x](const LazyFun& g, std::size_t v) {
          return impl->apply(identityLazy(x), g, v);
        },
        impl_->covariantArity(x), [impl, x](FinSet w, std::size_t v) {
          return impl->covariantSupport(x, w, v);
        });
  }

  /// W |-> P(W, Y).
  ContraFunctor contravariantPart(FinSet y) const {
    auto impl = impl_;
    return {impl_->name() + "(-," + std::to_string(y.card) + ")",
            [impl, y](FinSet w) { return impl->onPair(w, y); },
            [impl, y](const LazyFun& f, std::size_t v) {
              return impl->apply(f, identityLazy(y), v);
            }};
  }

  const ProfunctorImpl* impl() const { return impl_.get(); }
  explicit operator bool() const { return impl_ != nullptr; }

  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(impl_.get());
  }

  // Generic-object interface used by Transformation<Profunctor>.
  FinSet at(Point p) const { return (*this)(FinSet{p.x}, FinSet{p.y}); }

  static std::vector<Point> points(std::size_t window) {
    std::vector<Point> ps;
    for (std::size_t x = 0; x <= window; ++x) {
      for (std::size_t y = 0; y <= window; ++y) ps.push_back({x, y});
    }
    return ps;
  }

  static std::string describe(Point p) {
    return "(X,Y)=(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  }

 private:
  std::shared_ptr<const ProfunctorImpl> impl_;
};

using ProNat = Transformation<Profunctor>;

/// Profunctor given by closures.
class LambdaProfunctor final : public ProfunctorImpl {
 public:
  using ObjFn = std::function<FinSet(FinSet, FinSet)>;
  using ApplyFn =
      std::function<std::size_t(const LazyFun&, const LazyFun&, std::size_t)>;
  using StrengthFn =
      std::function<std::size_t(FinSet, FinSet, FinSet, std::size_t)>;
  using ArityFn = std::function<std::optional<std::size_t>(FinSet)>;
  using SupportFn = std::function<std::optional<std::vector<std::size_t>>(
      FinSet, FinSet, std::size_t)>;

  LambdaProfunctor(std::string name, ObjFn obj, ApplyFn app, StrengthFn str,
                   ArityFn arity = {}, SupportFn support = {})
      : name_(std::move(name)),
        obj_(std::move(obj)),
        app_(std::move(app)),
        str_(std::move(str)),
        arity_(std::move(arity)),
        support_(std::move(support)) {}

  std::string name() const override { return name_; }
  FinSet onPair(FinSet x, FinSet y) const override { return obj_(x, y); }
  std::size_t apply(const LazyFun& f, const LazyFun& g,
                    std::size_t v) const override {
    return app_(f, g, v);
  }
  std::size_t strength(FinSet x, FinSet y, FinSet z,
                       std::size_t v) const override {
    return str_(x, y, z, v);
  }
  std::optional<std::size_t> covariantArity(FinSet x) const override {
    if (!arity_) return std::nullopt;
    return arity_(x);
  }
  std::optional<std::vector<std::size_t>> covariantSupport(
      FinSet x, FinSet w, std::size_t v) const override {
    if (!support_) return std::nullopt;
    return support_(x, w, v);
  }

 private:
  std::string name_;
  ObjFn obj_;
  ApplyFn app_;
  StrengthFn str_;
  ArityFn arity_;
  SupportFn support_;
};

inline Profunctor makeProfunctor(std::string name, LambdaProfunctor::ObjFn obj,
                                 LambdaProfunctor::ApplyFn app,
                                 LambdaProfunctor::StrengthFn str,
                                 LambdaProfunctor::ArityFn arity = {},
                                 LambdaProfunctor::SupportFn support = {}) {
  return Profunctor(std::make_shared<LambdaProfunctor>(
      std::move(name), std::move(obj), std::move(app), std::move(str),
      std::move(arity), std::move(support)));
}

/// The same profunctor with its strength replaced.
inline Profunctor withStrength(const Profunctor& p, std::string name,
                               LambdaProfunctor::StrengthFn str) {
  return makeProfunctor(
      std::move(name), [p](FinSet x, FinSet y) { return p(x, y); },
      [p](const LazyFun& f, const LazyFun& g, std::size_t v) {
        return p.apply(f, g, v);
      },
      std::move(str), [p](FinSet x) { return p.covariantArity(x); },
      [p](FinSet x, FinSet w, std::size_t v) {
        return p.covariantSupport(x, w, v);
      });
}

// ---------------------------------------------------------------------------
// Instances.

/// h x id_Z : X x Z -> Y x Z, as an index.
inline std::size_t homTimesId(FinSet x, FinSet y, FinSet z, std::size_t h) {
  std::vector<std::size_t> d = decodeDigits(h, y.card, x.card);
  std::size_t r = 0;
  for (std::size_t i = 0; i < x.card; ++i) {
    for (std::size_t c = 0; c < z.card; ++c) {
      r = r * (y.card * z.card) + d[i] * z.card + c;
    }
  }
  return r;
}

/// Hom(X, Y) = Y^X with strength h |-> h x id.
inline Profunctor homProf() {
  return makeProfunctor(
      "hom", [](FinSet x, FinSet y) { return exponential(x, y); },
      [](const LazyFun& f, const LazyFun& g, std::size_t h) {
        return homMapLazy(f, g)(h);
      },
      homTimesId, [](FinSet x) { return std::optional<std::size_t>(x.card); },
      [](FinSet x, FinSet w, std::size_t h) {
        return std::optional(sortedUnique(decodeDigits(h, w.card, x.card)));
      });
}

/// X -> Maybe Y, written directly against the Maybe encoding
/// (Just y = y, Nothing = |Y|).
inline Profunctor kleisliMaybeProf() {
  return makeProfunctor(
      "kleisli-maybe",
      [](FinSet x, FinSet y) { return exponential(x, FinSet{y.card + 1}); },
      [](const LazyFun& f, const LazyFun& g, std::size_t k) {
        std::size_t ny = g.dom().card + 1;
        std::size_t ny2 = g.cod().card + 1;
        auto d = decodeDigits(k, ny, f.cod().card);
        std::size_t r = 0;
        for (std::size_t i = 0; i < f.dom().card; ++i) {
          std::size_t m = d[f(i)];
          r = r * ny2 + (m + 1 == ny ? ny2 - 1 : g(m));
        }
        return r;
      },
      [](FinSet x, FinSet y, FinSet z, std::size_t k) {
        auto d = decodeDigits(k, y.card + 1, x.card);
        std::size_t nyz = y.card * z.card;
        std::size_t r = 0;
        for (std::size_t i = 0; i < x.card; ++i) {
          for (std::size_t c = 0; c < z.card; ++c) {
            std::size_t m = d[i] == y.card ? nyz : d[i] * z.card + c;
            r = r * (nyz + 1) + m;
          }
        }
        return r;
      },
      [](FinSet x) { return std::optional<std::size_t>(x.card); },
      [](FinSet x, FinSet w, std::size_t k) {
        std::vector<std::size_t> pts;
        for (std::size_t m : decodeDigits(k, w.card + 1, x.card)) {
          if (m < w.card) pts.push_back(m);
        }
        return std::optional(sortedUnique(std::move(pts)));
      });
}

// ---------------------------------------------------------------------------
// Canonical strengths.

/// sigma^P : P(X, Y) x Z -> P(X x Z, Y), (v, z) |-> P(pi_1, id)(v).
inline FinFun sigmaStrength(const Profunctor& p, FinSet x, FinSet y,
                            FinSet z) {
  FinSet pxy = p(x, y);
  FinSet dom = product(pxy, z);
  LazyFun pi1 = proj1(x, z);
  LazyFun idy = identityLazy(y);
  std::vector<std::size_t> t(dom.card);
  for (std::size_t k = 0; k < dom.card; ++k) {
    t[k] = p.apply(pi1, idy, k / z.card);
  }
  return FinFun(dom, p(product(x, z), y), std::move(t));
}

/// The functor strength of Y |-> P(X, Y):
/// P(X, Y) x Z -> P(X, Y x Z), (v, z) |-> P(id, y |-> (y, z))(v).
inline FinFun covariantStrength(const Profunctor& p, FinSet x, FinSet y,
                                FinSet z) {
  return canonicalStrength(p.covariantPart(x), y, z);
}

/// varsigma^P : P(A x B, Y) x A -> P(B, Y), (v, a) |-> P(b |-> (a, b), id)(v).
inline FinFun varsigmaStrength(const Profunctor& p, FinSet a, FinSet b,
                               FinSet y) {
  FinSet pab = p(product(a, b), y);
  FinSet dom = product(pab, a);
  LazyFun idy = identityLazy(y);
  std::vector<std::size_t> t(dom.card);
  for (std::size_t k = 0; k < dom.card; ++k) {
    auto [v, x] = unpairIndex(pab, a, k);
    LazyFun pairWith(b, product(a, b),
                     [x, nb = b.card](std::size_t c) { return x * nb + c; });
    t[k] = p.apply(pairWith, idy, v);
  }
  return FinFun(dom, p(b, y), std::move(t));
}

// ---------------------------------------------------------------------------
// Law checkers.

inline CheckReport checkProfunctorLaws(const Profunctor& p,
                                       std::size_t window) {
  CheckReport rep("profunctor laws: " + p.name());
  for (std::size_t x = 0; x <= window; ++x) {
    for (std::size_t y = 0; y <= window; ++y) {
      FinSet X{x};
      FinSet Y{y};
      FinFun id = p.onMaps(FinFun::identity(X), FinFun::identity(Y));
      rep.expect(id == FinFun::identity(p(X, Y)), [&] {
        return "P(id,id) at (" + std::to_string(x) + "," + std::to_string(y) +
               ") = " + id.str();
      });
    }
  }
  // Composition in each variable separately; interchange follows.
  for (std::size_t a = 0; a <= window; ++a) {
    for (std::size_t b = 0; b <= window; ++b) {
      for (std::size_t c = 0; c <= window; ++c) {
        for (std::size_t o = 0; o <= window; ++o) {
          FinSet A{a}, B{b}, C{c}, O{o};
          FinFun idO = FinFun::identity(O);
          for (const auto& f : enumHom(A, B)) {
            for (const auto& g : enumHom(B, C)) {
              // Contravariant: P(g . f, id) = P(f, id) . P(g, id).
              FinFun lhs = p.onMaps(compose(g, f), idO);
              FinFun rhs = compose(p.onMaps(f, idO), p.onMaps(g, idO));
              rep.expect(lhs == rhs, [&] {
                return "contravariant f=" + f.str() + ", g=" + g.str();
              });
              FinFun lhs2 = p.onMaps(idO, compose(g, f));
              FinFun rhs2 = compose(p.onMaps(idO, g), p.onMaps(idO, f));
              rep.expect(lhs2 == rhs2, [&] {
                return "covariant f=" + f.str() + ", g=" + g.str();
              });
            }
          }
        }
      }
    }
  }
  return rep;
}

/// Object ranges for strength checks. The composition law is checked for
/// V, W <= z with V * W <= maxProduct.
struct StrengthWindow {
  std::size_t xy = 2;
  std::size_t z = 2;
  std::size_t maxProduct = std::numeric_limits<std::size_t>::max();
};

inline CheckReport checkStrengthLaws(const Profunctor& p,
                                     const StrengthWindow& win) {
  CheckReport rep("strength laws: " + p.name());
  auto where = [](std::size_t x, std::size_t y, std::size_t z, std::size_t v) {
    return "(X,Y,Z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
           std::to_string(z) + "), element " + std::to_string(v);
  };
  for (std::size_t x = 0; x <= win.xy; ++x) {
    for (std::size_t y = 0; y <= win.xy; ++y) {
      FinSet X{x}, Y{y};
      std::size_t n = p(X, Y).card;
      // Unit law: P(id, pi_1) . str_{X,Y,1} = P(pi_1, id).
      LazyFun xpi1 = proj1(X, kTerminal);
      LazyFun ypi1 = proj1(Y, kTerminal);
      LazyFun idx1 = identityLazy(product(X, kTerminal));
      LazyFun idy = identityLazy(Y);
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t lhs = p.apply(idx1, ypi1, p.strength(X, Y, kTerminal, v));
        std::size_t rhs = p.apply(xpi1, idy, v);
        rep.expect(lhs == rhs, [&] {
          return "unit law at " + where(x, y, 1, v) + ": " +
                 std::to_string(lhs) + " != " + std::to_string(rhs);
        });
      }
      // Composition law.
      for (std::size_t a = 0; a <= win.z; ++a) {
        for (std::size_t b = 0; b <= win.z; ++b) {
          if (a * b > win.maxProduct) continue;
          FinSet V{a}, W{b};
          FinSet VW = product(V, W);
          LazyFun alphaInv = cartAlphaInv(X, V, W);
          LazyFun alpha = cartAlpha(Y, V, W);
          for (std::size_t v = 0; v < n; ++v) {
            std::size_t lhs =
                p.strength(product(X, V), product(Y, V), W,
                           p.strength(X, Y, V, v));
            std::size_t rhs = p.apply(alphaInv, alpha, p.strength(X, Y, VW, v));
            rep.expect(lhs == rhs, [&] {
              return "composition law at " + where(x, y, a, v) + ", then W=" +
                     std::to_string(b);
            });
          }
        }
      }
      // Dinaturality in Z: P(id x k, id) . str_{Z'} = P(id, id x k) . str_Z.
      for (std::size_t z = 0; z <= win.z; ++z) {
        for (std::size_t z2 = 0; z2 <= win.z; ++z2) {
          FinSet Z{z}, Z2{z2};
          for (const auto& k : enumHom(Z, Z2)) {
            LazyFun xk = productMap(FinFun::identity(X), k);
            LazyFun yk = productMap(FinFun::identity(Y), k);
            LazyFun idxz = identityLazy(product(X, Z));
            LazyFun idyz2 = identityLazy(product(Y, Z2));
            for (std::size_t v = 0; v < n; ++v) {
              std::size_t lhs = p.apply(xk, idyz2, p.strength(X, Y, Z2, v));
              std::size_t rhs = p.apply(idxz, yk, p.strength(X, Y, Z, v));
              rep.expect(lhs == rhs, [&] {
                return "dinaturality in Z, k=" + k.str() + " at " +
                       where(x, y, z, v);
              });
            }
          }
        }
      }
    }
  }
  // Naturality in X and Y.
  for (std::size_t x = 0; x <= win.xy; ++x) {
    for (std::size_t x2 = 0; x2 <= win.xy; ++x2) {
      for (std::size_t y = 0; y <= win.xy; ++y) {
        for (std::size_t y2 = 0; y2 <= win.xy; ++y2) {
          FinSet X{x}, X2{x2}, Y{y}, Y2{y2};
          std::size_t n = p(X, Y).card;
          for (std::size_t z = 0; z <= win.z; ++z) {
            FinSet Z{z};
            FinFun idz = FinFun::identity(Z);
            for (const auto& f : enumHom(X2, X)) {
              LazyFun fz = productMap(f, idz);
              for (const auto& g : enumHom(Y, Y2)) {
                LazyFun gz = productMap(g, idz);
                LazyFun lf(f);
                LazyFun lg(g);
                for (std::size_t v = 0; v < n; ++v) {
                  std::size_t lhs =
                      p.strength(X2, Y2, Z, p.apply(lf, lg, v));
                  std::size_t rhs = p.apply(fz, gz, p.strength(X, Y, Z, v));
                  rep.expect(lhs == rhs, [&] {
                    return "naturality, f=" + f.str() + ", g=" + g.str() +
                           " at " + where(x, y, z, v);
                  });
                }
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

inline CheckReport checkStrengthLaws(const Profunctor& p, std::size_t window) {
  return checkStrengthLaws(p, StrengthWindow{window, window});
}

/// Plain naturality of a transformation of profunctors on the window.
inline CheckReport checkProNaturality(const ProNat& tau, std::size_t window) {
  CheckReport rep("naturality: " + tau.name);
  for (std::size_t x = 0; x <= window; ++x) {
    for (std::size_t x2 = 0; x2 <= window; ++x2) {
      for (std::size_t y = 0; y <= window; ++y) {
        for (std::size_t y2 = 0; y2 <= window; ++y2) {
          FinSet X{x}, X2{x2}, Y{y}, Y2{y2};
          std::size_t n = tau.source(X, Y).card;
          for (const auto& f : enumHom(X2, X)) {
            for (const auto& g : enumHom(Y, Y2)) {
              LazyFun lf(f);
              LazyFun lg(g);
              for (std::size_t v = 0; v < n; ++v) {
                std::size_t lhs = tau({x2, y2}, tau.source.apply(lf, lg, v));
                std::size_t rhs = tau.target.apply(lf, lg, tau({x, y}, v));
                rep.expect(lhs == rhs, [&] {
                  return "f=" + f.str() + ", g=" + g.str() + " at (X,Y)=(" +
                         std::to_string(x) + "," + std::to_string(y) +
                         "), element " + std::to_string(v);
                });
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

/// tau_{X x Z, Y x Z} . str^P = str^Q . tau_{X,Y}. Coend-backed sources are
/// handled on generators when the transformation supports it.
inline CheckReport checkStrengthSquare(const ProNat& tau,
                                       const StrengthWindow& win) {
  CheckReport rep("strength square: " + tau.name);
  for (std::size_t x = 0; x <= win.xy; ++x) {
    for (std::size_t y = 0; y <= win.xy; ++y) {
      FinSet X{x}, Y{y};
      std::size_t n = tau.source(X, Y).card;
      for (std::size_t z = 0; z <= win.z; ++z) {
        FinSet Z{z};
        Point big{x * z, y * z};
        for (std::size_t v = 0; v < n; ++v) {
          std::size_t lhs;
          auto gen = tau.source.generatorOf(X, Y, v);
          if (gen && tau.onGenerator) {
            Generator s = tau.source.strengthOnGenerator(X, Y, Z, *gen);
            lhs = tau.onGenerator(big, s.w, s.a, s.b);
          } else {
            lhs = tau(big, tau.source.strength(X, Y, Z, v));
          }
          std::size_t rhs = tau.target.strength(X, Y, Z, tau({x, y}, v));
          rep.expect(lhs == rhs, [&] {
            return "(X,Y,Z)=(" + std::to_string(x) + "," + std::to_string(y) +
                   "," + std::to_string(z) + "), element " +
                   std::to_string(v) + ": " + std::to_string(lhs) +
                   " != " + std::to_string(rhs);
          });
        }
      }
    }
  }
  return rep;
}

inline CheckReport checkStrongNaturality(const ProNat& tau,
                                         const StrengthWindow& win) {
  CheckReport rep("strong naturality: " + tau.name);
  rep.merge(checkProNaturality(tau, win.xy));
  rep.merge(checkStrengthSquare(tau, win));
  return rep;
}

inline CheckReport checkStrongNaturality(const ProNat& tau,
                                         std::size_t window) {
  return checkStrongNaturality(tau, StrengthWindow{window, window});
}

}  // namespace notions
