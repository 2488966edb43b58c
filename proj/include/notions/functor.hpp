#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "category.hpp"
#include "finset.hpp"
#include "report.hpp"

namespace notions {

/// Computable action of a functor F : F -> S.
class FunctorImpl {
 public:
  virtual ~FunctorImpl() = default;
  virtual std::string name() const = 0;
  virtual FinSet onObject(FinSet x) const = 0;
  /// F(f)(v) for v in F(dom f).
  virtual std::size_t apply(const LazyFun& f, std::size_t v) const = 0;
  /// Every element of F(W) lies in the image of F(j) for some injection
  /// j : S -> W with |S| <= arity. Unknown when empty.
  virtual std::optional<std::size_t> arity() const { return std::nullopt; }
  /// Sorted points of W such that v lies in the image of F(incl). Unknown
  /// when empty; the coend engine then searches.
  virtual std::optional<std::vector<std::size_t>> support(FinSet,
                                                          std::size_t) const {
    return std::nullopt;
  }
};

/// Value handle on a finitary functor.
class Functor {
 public:
  Functor() = default;
  explicit Functor(std::shared_ptr<const FunctorImpl> impl)
      : impl_(std::move(impl)) {}

  std::string name() const { return impl_->name(); }
  FinSet operator()(FinSet x) const { return impl_->onObject(x); }
  std::size_t apply(const LazyFun& f, std::size_t v) const {
    return impl_->apply(f, v);
  }
  std::optional<std::size_t> arity() const { return impl_->arity(); }
  std::optional<std::vector<std::size_t>> support(FinSet w,
                                                  std::size_t v) const {
    return impl_->support(w, v);
  }

  FinFun onMorphism(const FinFun& f) const {
    LazyFun lf(f);
    FinSet dom = (*this)(f.dom());
    std::vector<std::size_t> t(dom.card);
    for (std::size_t k = 0; k < dom.card; ++k) t[k] = apply(lf, k);
    return FinFun(dom, (*this)(f.cod()), std::move(t));
  }

  /// F(f) as an on-demand function.
  LazyFun lazyMap(LazyFun f) const {
    FinSet dom = (*this)(f.dom());
    FinSet cod = (*this)(f.cod());
    auto impl = impl_;
    return LazyFun(dom, cod, [impl, f = std::move(f)](std::size_t v) {
      return impl->apply(f, v);
    });
  }

  const FunctorImpl* impl() const { return impl_.get(); }
  const std::shared_ptr<const FunctorImpl>& shared() const { return impl_; }
  explicit operator bool() const { return impl_ != nullptr; }

  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(impl_.get());
  }

  // Generic-object interface used by Transformation<Functor>.
  FinSet at(Point p) const { return (*this)(FinSet{p.x}); }

  static std::vector<Point> points(std::size_t window) {
    std::vector<Point> ps;
    for (std::size_t z = 0; z <= window; ++z) ps.push_back({z, 0});
    return ps;
  }

  static std::string describe(Point p) { return "Z=" + std::to_string(p.x); }

 private:
  std::shared_ptr<const FunctorImpl> impl_;
};

using Nat = Transformation<Functor>;

/// Functor given by closures.
class LambdaFunctor final : public FunctorImpl {
 public:
  using SupportFn =
      std::function<std::optional<std::vector<std::size_t>>(FinSet,
                                                            std::size_t)>;

  LambdaFunctor(std::string name, std::function<FinSet(FinSet)> obj,
                std::function<std::size_t(const LazyFun&, std::size_t)> app,
                std::optional<std::size_t> arity, SupportFn support = {})
      : name_(std::move(name)),
        obj_(std::move(obj)),
        app_(std::move(app)),
        arity_(arity),
        support_(std::move(support)) {}

  std::string name() const override { return name_; }
  FinSet onObject(FinSet x) const override { return obj_(x); }
  std::size_t apply(const LazyFun& f, std::size_t v) const override {
    return app_(f, v);
  }
  std::optional<std::size_t> arity() const override { return arity_; }
  std::optional<std::vector<std::size_t>> support(
      FinSet w, std::size_t v) const override {
    if (!support_) return std::nullopt;
    return support_(w, v);
  }

 private:
  std::string name_;
  std::function<FinSet(FinSet)> obj_;
  std::function<std::size_t(const LazyFun&, std::size_t)> app_;
  std::optional<std::size_t> arity_;
  SupportFn support_;
};

inline Functor makeFunctor(
    std::string name, std::function<FinSet(FinSet)> obj,
    std::function<std::size_t(const LazyFun&, std::size_t)> app,
    std::optional<std::size_t> arity = std::nullopt,
    LambdaFunctor::SupportFn support = {}) {
  return Functor(std::make_shared<LambdaFunctor>(
      std::move(name), std::move(obj), std::move(app), arity,
      std::move(support)));
}

/// Sorted distinct values.
inline std::vector<std::size_t> sortedUnique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// ---------------------------------------------------------------------------
// Polynomial presentations.

struct Constructor {
  std::string name;
  std::size_t arity = 0;
};

/// F(X) = sum_i X^{arity_i}, blocks in constructor order, tuples big-endian.
struct PolyFunctor {
  std::string name;
  std::vector<Constructor> constructors;

  std::size_t maxArity() const {
    std::size_t a = 0;
    for (const auto& c : constructors) a = std::max(a, c.arity);
    return a;
  }
};

class PolyFunctorImpl final : public FunctorImpl {
 public:
  explicit PolyFunctorImpl(PolyFunctor p) : poly_(std::move(p)) {}

  std::string name() const override { return poly_.name; }

  FinSet onObject(FinSet x) const override {
    std::size_t n = 0;
    for (const auto& c : poly_.constructors) {
      std::size_t block = checkedPow(x.card, c.arity);
      if (n > kMaxCard - block) throw CapacityError("polynomial: overflow");
      n += block;
    }
    return FinSet{n};
  }

  std::size_t apply(const LazyFun& f, std::size_t v) const override {
    std::size_t nx = f.dom().card;
    std::size_t ny = f.cod().card;
    std::size_t offsetX = 0;
    std::size_t offsetY = 0;
    for (const auto& c : poly_.constructors) {
      std::size_t blockX = checkedPow(nx, c.arity);
      std::size_t blockY = checkedPow(ny, c.arity);
      if (v < offsetX + blockX) {
        std::size_t local = v - offsetX;
        std::size_t digits[64];
        std::span<std::size_t> d(digits, c.arity);
        decodeDigits(local, nx, d);
        for (auto& e : d) e = f(e);
        return offsetY + encodeDigits(d, ny);
      }
      offsetX += blockX;
      offsetY += blockY;
    }
    throw DomainError(poly_.name + ": element " + std::to_string(v) +
                      " outside F(" + std::to_string(nx) + ")");
  }

  std::optional<std::size_t> arity() const override {
    return poly_.maxArity();
  }

  std::optional<std::vector<std::size_t>> support(
      FinSet w, std::size_t v) const override {
    return sortedUnique(decode(w, v).second);
  }

  const PolyFunctor& poly() const { return poly_; }

  /// Block index and tuple of an element of F(X).
  std::pair<std::size_t, std::vector<std::size_t>> decode(
      FinSet x, std::size_t v) const {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < poly_.constructors.size(); ++i) {
      std::size_t a = poly_.constructors[i].arity;
      std::size_t block = checkedPow(x.card, a);
      if (v < offset + block) return {i, decodeDigits(v - offset, x.card, a)};
      offset += block;
    }
    throw DomainError(poly_.name + ": element out of range");
  }

  std::size_t encode(FinSet x, std::size_t ctor,
                     std::span<const std::size_t> tuple) const {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < ctor; ++i) {
      offset += checkedPow(x.card, poly_.constructors[i].arity);
    }
    return offset + encodeDigits(tuple, x.card);
  }

  /// The generic element (ctor, id) of F(arity_ctor).
  std::size_t genericElement(std::size_t ctor) const {
    std::size_t a = poly_.constructors.at(ctor).arity;
    std::vector<std::size_t> id(a);
    for (std::size_t k = 0; k < a; ++k) id[k] = k;
    return encode(FinSet{a}, ctor, id);
  }

 private:
  PolyFunctor poly_;
};

inline Functor polyToRep(PolyFunctor p) {
  if (p.maxArity() > 64) throw DomainError("polynomial arity above 64");
  return Functor(std::make_shared<PolyFunctorImpl>(std::move(p)));
}

/// The inclusion i : F -> S.
inline Functor inclusionFunctor() {
  return makeFunctor(
      "i", [](FinSet x) { return x; },
      [](const LazyFun& f, std::size_t v) { return f(v); }, 1,
      [](FinSet, std::size_t v) {
        return std::optional(std::vector<std::size_t>{v});
      });
}

// ---------------------------------------------------------------------------
// Instance library.

inline PolyFunctor maybePoly() {
  return {"maybe", {{"Just", 1}, {"Nothing", 0}}};
}

inline PolyFunctor readerPoly(std::size_t env) {
  return {"reader" + std::to_string(env), {{"fn", env}}};
}

/// Writer over a monoid with `logs` elements: block w holds (w, x).
inline PolyFunctor writerPoly(std::size_t logs, std::string name) {
  PolyFunctor p{std::move(name), {}};
  for (std::size_t w = 0; w < logs; ++w) {
    p.constructors.push_back({"w" + std::to_string(w), 1});
  }
  return p;
}

inline PolyFunctor identityPoly() { return {"identity", {{"id", 1}}}; }

inline Functor maybeFunctor() { return polyToRep(maybePoly()); }
inline Functor readerFunctor(std::size_t env) {
  return polyToRep(readerPoly(env));
}
inline Functor writerOr2Functor() {
  return polyToRep(writerPoly(2, "writer-or2"));
}
inline Functor identityFunctor() { return polyToRep(identityPoly()); }

/// Index of Just x in Maybe(X).
inline std::size_t maybeJust(std::size_t x) { return x; }
/// Index of Nothing in Maybe(X).
inline std::size_t maybeNothing(FinSet x) { return x.card; }

// ---------------------------------------------------------------------------
// Law checkers.

inline CheckReport checkFunctorLaws(const Functor& f, std::size_t window) {
  CheckReport rep("functor laws: " + f.name());
  for (std::size_t a = 0; a <= window; ++a) {
    FinSet A{a};
    FinFun fid = f.onMorphism(FinFun::identity(A));
    rep.expect(fid == FinFun::identity(f(A)), [&] {
      return "F(id_" + std::to_string(a) + ") = " + fid.str();
    });
  }
  for (std::size_t a = 0; a <= window; ++a) {
    for (std::size_t b = 0; b <= window; ++b) {
      for (std::size_t c = 0; c <= window; ++c) {
        auto fs = enumHom(FinSet{a}, FinSet{b});
        auto gs = enumHom(FinSet{b}, FinSet{c});
        std::vector<FinFun> ffs;
        for (const auto& x : fs) ffs.push_back(f.onMorphism(x));
        for (std::size_t j = 0; j < gs.size(); ++j) {
          FinFun fg = f.onMorphism(gs[j]);
          for (std::size_t i = 0; i < fs.size(); ++i) {
            FinFun lhs = f.onMorphism(compose(gs[j], fs[i]));
            FinFun rhs = compose(fg, ffs[i]);
            rep.expect(lhs == rhs, [&] {
              return "f=" + fs[i].str() + ", g=" + gs[j].str() +
                     ": F(g.f)=" + lhs.str() + " but F(g).F(f)=" + rhs.str();
            });
          }
        }
      }
    }
  }
  return rep;
}

/// target(f) . tau_A = tau_B . source(f) for all f : A -> B in the window.
inline CheckReport checkNaturality(const Nat& tau, std::size_t window) {
  CheckReport rep("naturality: " + tau.name);
  for (std::size_t a = 0; a <= window; ++a) {
    FinFun ta = tau.component({a, 0});
    for (std::size_t b = 0; b <= window; ++b) {
      FinFun tb = tau.component({b, 0});
      for (const auto& f : enumHom(FinSet{a}, FinSet{b})) {
        FinFun lhs = compose(tau.target.onMorphism(f), ta);
        FinFun rhs = compose(tb, tau.source.onMorphism(f));
        rep.expect(lhs == rhs, [&] {
          return "f=" + f.str() + ": G(f).tau=" + lhs.str() +
                 " but tau.F(f)=" + rhs.str();
        });
      }
    }
  }
  return rep;
}

/// sigma : F A x B -> F(A x B), (v, b) |-> F(a |-> (a, b))(v).
inline FinFun canonicalStrength(const Functor& f, FinSet a, FinSet b) {
  FinSet fa = f(a);
  FinSet dom = product(fa, b);
  std::vector<std::size_t> t(dom.card);
  for (std::size_t k = 0; k < dom.card; ++k) {
    auto [v, y] = unpairIndex(fa, b, k);
    LazyFun pairWith(a, product(a, b), [nb = b.card, y](std::size_t x) {
      return x * nb + y;
    });
    t[k] = f.apply(pairWith, v);
  }
  return FinFun(dom, f(product(a, b)), std::move(t));
}

/// Natural transformations out of a polynomial functor correspond to one
/// element of G(arity_i) per constructor (Yoneda). Enumerates all of them.
inline std::vector<Nat> enumerateNatFromPoly(const Functor& source,
                                             const Functor& target) {
  const auto* poly = source.as<PolyFunctorImpl>();
  if (!poly) throw DomainError("enumerateNatFromPoly: source not polynomial");
  const auto& ctors = poly->poly().constructors;
  std::vector<std::size_t> radix;
  for (const auto& c : ctors) radix.push_back(target(FinSet{c.arity}).card);
  std::size_t total = 1;
  for (std::size_t r : radix) total = checkedMul(total, r);
  std::vector<Nat> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> choice(ctors.size());
    std::size_t rest = code;
    for (std::size_t i = ctors.size(); i-- > 0;) {
      choice[i] = rest % radix[i];
      rest /= radix[i];
    }
    Nat tau;
    tau.name = "yoneda#" + std::to_string(code);
    tau.source = source;
    tau.target = target;
    tau.at = [poly, target, choice](Point p, std::size_t v) {
      FinSet z{p.x};
      auto [ctor, tuple] = poly->decode(z, v);
      std::size_t a = poly->poly().constructors[ctor].arity;
      FinFun t(FinSet{a}, z, tuple);
      return target.apply(LazyFun(t), choice[ctor]);
    };
    out.push_back(std::move(tau));
  }
  return out;
}

/// Writes v in F W as F(j)(v0) with j the inclusion of the support of v.
/// Empty when F reports no support.
inline std::optional<std::pair<FinFun, std::size_t>> restrictToSupport(
    const Functor& f, FinSet w, std::size_t v) {
  auto sup = f.support(w, v);
  if (!sup) return std::nullopt;
  FinSet s{sup->size()};
  FinFun j(s, w, *sup);
  LazyFun jl(j);
  std::size_t n = f(s).card;
  for (std::size_t v0 = 0; v0 < n; ++v0) {
    if (f.apply(jl, v0) == v) return std::pair{j, v0};
  }
  throw DomainError(f.name() + ": element " + std::to_string(v) +
                    " is not in the image of its support");
}

}  // namespace notions
