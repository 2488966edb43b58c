#pragma once

// The Day, substitution and Benabou tensors, their structural isomorphisms,
// monoids in each, and the concrete monad/idiom/arrow instances.

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
#include "coend.hpp"
#include "finset.hpp"
#include "functor.hpp"
#include "profunctor.hpp"
#include "report.hpp"

namespace notions {

/// Digit `pos` of a big-endian index.
inline std::size_t digitAt(std::size_t index, std::size_t base,
                           std::size_t length, std::size_t pos) {
  for (std::size_t i = length - 1; i > pos; --i) index /= base;
  return index % base;
}

/// Objects whose values are coends of separable integrands, one per point.
class TensorSpaces {
 public:
  TensorSpaces(std::size_t bound, CoendOptions opts)
      : bound_(bound), opts_(opts) {}
  virtual ~TensorSpaces() = default;

  virtual DiBifunctor integrandAt(Point p) const = 0;

  CoendPtr spaceAt(Point p) const {
    {
      std::lock_guard lock(mu_);
      auto it = spaces_.find(p);
      if (it != spaces_.end()) return it->second;
    }
    CoendPtr s = computeCoend(integrandAt(p), bound_, opts_);
    std::lock_guard lock(mu_);
    return spaces_.emplace(p, s).first->second;
  }

  /// A generator (W, a, b) of the class.
  Generator repAt(Point p, std::size_t cls) const {
    CoendPtr s = spaceAt(p);
    auto [w, x] = s->representative(cls);
    std::size_t nb = contraCard(*s, w);
    return {w, x / nb, x % nb};
  }

  /// The class of the generator (W, a, b); W may exceed the bound.
  std::size_t injectAt(Point p, FinSet w, std::size_t a, std::size_t b) const {
    CoendPtr s = spaceAt(p);
    return s->inject(w, a * contraCard(*s, w) + b);
  }

  std::size_t bound() const { return bound_; }
  const CoendOptions& options() const { return opts_; }

  static std::size_t contraCard(const CoendSpace& s, FinSet w) {
    return s.integrand()
        .as<SeparableIntegrand>()
        ->contravariant()
        .onObject(w)
        .card;
  }

 private:
  std::size_t bound_;
  CoendOptions opts_;
  mutable std::mutex mu_;
  mutable std::map<Point, CoendPtr> spaces_;
};

enum class MonoidalTag { Day, Subst, Benabou };

inline std::string tagName(MonoidalTag t) {
  switch (t) {
    case MonoidalTag::Day:
      return "day";
    case MonoidalTag::Subst:
      return "subst";
    case MonoidalTag::Benabou:
      return "benabou";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Tensor objects.

/// (F * G)(X) = coend^C F C x G(C -> X) or (F o G)(X) = coend^C F C x (C -> G X).
class FunctorTensorImpl final : public FunctorImpl, public TensorSpaces {
 public:
  FunctorTensorImpl(MonoidalTag tag, Functor f, Functor g, std::size_t bound,
                    CoendOptions opts)
      : TensorSpaces(bound, opts), tag_(tag), f_(std::move(f)),
        g_(std::move(g)) {}

  std::string name() const override {
    return "(" + f_.name() + (tag_ == MonoidalTag::Day ? " * " : " o ") +
           g_.name() + ")";
  }

  FinSet onObject(FinSet x) const override {
    return spaceAt({x.card, 0})->carrier();
  }

  std::size_t apply(const LazyFun& f, std::size_t v) const override {
    FinSet x = f.dom();
    Generator gen = repAt({x.card, 0}, v);
    std::size_t b;
    if (tag_ == MonoidalTag::Day) {
      b = g_.apply(postcomposeLazy(f, gen.w), gen.b);
    } else {
      b = postcomposeLazy(g_.lazyMap(f), gen.w)(gen.b);
    }
    return injectAt({f.cod().card, 0}, gen.w, gen.a, b);
  }

  std::optional<std::size_t> arity() const override {
    auto a = f_.arity();
    auto b = g_.arity();
    if (!a || !b) return std::nullopt;
    return *a * *b;
  }

  std::optional<std::vector<std::size_t>> support(
      FinSet x, std::size_t v) const override {
    Generator gen = repAt({x.card, 0}, v);
    std::vector<std::size_t> pts;
    if (tag_ == MonoidalTag::Day) {
      auto fns = g_.support(exponential(gen.w, x), gen.b);
      if (!fns) return std::nullopt;
      for (std::size_t h : *fns) {
        for (std::size_t y : decodeDigits(h, x.card, gen.w.card)) {
          pts.push_back(y);
        }
      }
    } else {
      FinSet gx = g_(x);
      for (std::size_t e : decodeDigits(gen.b, gx.card, gen.w.card)) {
        auto s = g_.support(x, e);
        if (!s) return std::nullopt;
        pts.insert(pts.end(), s->begin(), s->end());
      }
    }
    return sortedUnique(std::move(pts));
  }

  DiBifunctor integrandAt(Point p) const override {
    FinSet x{p.x};
    if (tag_ == MonoidalTag::Day) {
      Functor g = g_;
      ContraFunctor b{
          g_.name() + "(W -> " + std::to_string(x.card) + ")",
          [g, x](FinSet w) { return g(exponential(w, x)); },
          [g, x](const LazyFun& f, std::size_t v) {
            return g.apply(precomposeLazy(f, x), v);
          }};
      return separable(name() + "(" + std::to_string(x.card) + ")", f_,
                       std::move(b));
    }
    return separable(name() + "(" + std::to_string(x.card) + ")", f_,
                     homInto(g_(x)));
  }

  MonoidalTag tag() const { return tag_; }
  const Functor& left() const { return f_; }
  const Functor& right() const { return g_; }

 private:
  MonoidalTag tag_;
  Functor f_;
  Functor g_;
};

/// (P (x) Q)(X, Y) = coend^W P(X, W) x Q(W, Y), with the lifted strength.
class BenabouTensorImpl final : public ProfunctorImpl, public TensorSpaces {
 public:
  BenabouTensorImpl(Profunctor p, Profunctor q, std::size_t bound,
                    CoendOptions opts)
      : TensorSpaces(bound, opts), p_(std::move(p)), q_(std::move(q)) {}

  std::string name() const override {
    return "(" + p_.name() + " (x) " + q_.name() + ")";
  }

  FinSet onPair(FinSet x, FinSet y) const override {
    return spaceAt({x.card, y.card})->carrier();
  }

  std::size_t apply(const LazyFun& f, const LazyFun& g,
                    std::size_t v) const override {
    Generator gen = repAt({f.cod().card, g.dom().card}, v);
    LazyFun idw = identityLazy(gen.w);
    return injectAt({f.dom().card, g.cod().card}, gen.w,
                    p_.apply(f, idw, gen.a), q_.apply(idw, g, gen.b));
  }

  std::size_t strength(FinSet x, FinSet y, FinSet z,
                       std::size_t v) const override {
    Generator s = strengthOnGenerator(x, y, z, repAt({x.card, y.card}, v));
    return injectAt({x.card * z.card, y.card * z.card}, s.w, s.a, s.b);
  }

  std::optional<std::size_t> covariantArity(FinSet x) const override {
    auto a = p_.covariantArity(x);
    if (!a) return std::nullopt;
    return q_.covariantArity(FinSet{*a});
  }

  std::optional<std::vector<std::size_t>> covariantSupport(
      FinSet x, FinSet w, std::size_t v) const override {
    Generator gen = repAt({x.card, w.card}, v);
    return q_.covariantSupport(gen.w, w, gen.b);
  }

  std::optional<Generator> generatorOf(FinSet x, FinSet y,
                                       std::size_t v) const override {
    return repAt({x.card, y.card}, v);
  }

  Generator strengthOnGenerator(FinSet x, FinSet y, FinSet z,
                                const Generator& g) const override {
    return {product(g.w, z), p_.strength(x, g.w, z, g.a),
            q_.strength(g.w, y, z, g.b)};
  }

  DiBifunctor integrandAt(Point p) const override {
    FinSet x{p.x};
    FinSet y{p.y};
    return separable(name() + "(" + std::to_string(x.card) + "," +
                         std::to_string(y.card) + ")",
                     p_.covariantPart(x), q_.contravariantPart(y));
  }

  const Profunctor& left() const { return p_; }
  const Profunctor& right() const { return q_; }

 private:
  Profunctor p_;
  Profunctor q_;
};

template <class Obj>
const TensorSpaces& tensorSpaces(const Obj& o) {
  const auto* ts = dynamic_cast<const TensorSpaces*>(o.impl());
  if (!ts) throw DomainError(o.name() + " is not a tensor");
  return *ts;
}

/// A transformation out of a tensor, given by a wedge on generators
/// (W, a, b). Components are obtained through `factorize`, so a wedge that
/// is not dinatural is rejected with a DinaturalityError on first use.
template <class Obj>
Transformation<Obj> fromWedge(std::string name, const Obj& source,
                              const Obj& target, GeneratorEval wedge) {
  struct Cache {
    std::mutex mu;
    std::map<Point, std::shared_ptr<const FinFun>> tables;
  };
  auto cache = std::make_shared<Cache>();
  tensorSpaces(source);
  Transformation<Obj> t;
  t.name = std::move(name);
  t.source = source;
  t.target = target;
  t.onGenerator = wedge;
  t.at = [cache, source, target, wedge](Point p, std::size_t v) {
    std::shared_ptr<const FinFun> table;
    {
      std::lock_guard lock(cache->mu);
      auto it = cache->tables.find(p);
      if (it != cache->tables.end()) table = it->second;
    }
    if (!table) {
      const TensorSpaces& ts = tensorSpaces(source);
      CoendPtr space = ts.spaceAt(p);
      const CoendSpace& s = *space;
      Wedge w = [&](FinSet wobj, std::size_t x) {
        std::size_t nb = TensorSpaces::contraCard(s, wobj);
        return wedge(p, wobj, x / nb, x % nb);
      };
      table = std::make_shared<const FinFun>(factorize(s, w, target.at(p)));
      std::lock_guard lock(cache->mu);
      cache->tables.emplace(p, table);
    }
    return (*table)(v);
  };
  return t;
}

/// Evaluates a transformation out of a tensor on a generator, using the
/// generator-level action when available.
template <class Obj>
std::size_t evalOnGenerator(const Transformation<Obj>& t, Point p, FinSet w,
                            std::size_t a, std::size_t b) {
  if (t.onGenerator) return t.onGenerator(p, w, a, b);
  return t.at(p, tensorSpaces(t.source).injectAt(p, w, a, b));
}

// ---------------------------------------------------------------------------
// Monoidal categories.

template <class Obj>
struct MonoidalCategory {
  using Mor = Transformation<Obj>;

  MonoidalTag tag;
  std::size_t bound = 3;
  Obj unit;
  std::function<Obj(const Obj&, const Obj&)> tensor;
  std::function<Mor(const Mor&, const Mor&)> tensorMor;
  /// I (x) A -> A
  std::function<Mor(const Obj&)> lambda;
  /// A (x) I -> A
  std::function<Mor(const Obj&)> rho;
  /// A (x) (B (x) C) -> (A (x) B) (x) C
  std::function<Mor(const Obj&, const Obj&, const Obj&)> alpha;
};

using FunctorCategory = MonoidalCategory<Functor>;
using ProfunctorCategory = MonoidalCategory<Profunctor>;
using FunctorCategoryPtr = std::shared_ptr<const FunctorCategory>;
using ProfunctorCategoryPtr = std::shared_ptr<const ProfunctorCategory>;

namespace detail {

/// Tensor objects are memoized per operand pair so that repeated tensors
/// share their coend caches.
template <class Obj>
class TensorCache {
 public:
  template <class Make>
  Obj get(const Obj& a, const Obj& b, Make&& make) {
    std::lock_guard lock(mu_);
    auto key = std::pair{a.impl(), b.impl()};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second.result;
    Obj r = make();
    cache_.emplace(key, Entry{a, b, r});
    return r;
  }

 private:
  struct Entry {
    Obj a;
    Obj b;
    Obj result;
  };
  std::mutex mu_;
  std::map<std::pair<const void*, const void*>, Entry> cache_;
};

}  // namespace detail

inline FunctorCategoryPtr makeFunctorCategory(MonoidalTag tag,
                                              std::size_t bound = 3,
                                              CoendOptions opts = {}) {
  auto cat = std::make_shared<FunctorCategory>();
  cat->tag = tag;
  cat->bound = bound;
  cat->unit = inclusionFunctor();
  auto cache = std::make_shared<detail::TensorCache<Functor>>();
  cat->tensor = [tag, bound, opts, cache](const Functor& a, const Functor& b) {
    return cache->get(a, b, [&] {
      return Functor(
          std::make_shared<FunctorTensorImpl>(tag, a, b, bound, opts));
    });
  };
  const bool day = tag == MonoidalTag::Day;
  std::weak_ptr<FunctorCategory> weak = cat;
  cat->tensorMor = [weak, day](const Nat& s, const Nat& t) {
    auto c = weak.lock();
    Functor src = c->tensor(s.source, t.source);
    Functor tgt = c->tensor(s.target, t.target);
    GeneratorEval w = [day, s, t, tgt](Point p, FinSet cw, std::size_t a,
                                       std::size_t b) {
      std::size_t a2 = s(Point{cw.card, 0}, a);
      std::size_t b2;
      if (day) {
        b2 = t(Point{exponential(cw, FinSet{p.x}).card, 0}, b);
      } else {
        FinSet gx = t.source(FinSet{p.x});
        FinSet gx2 = t.target(FinSet{p.x});
        b2 = 0;
        for (std::size_t d : decodeDigits(b, gx.card, cw.card)) {
          b2 = b2 * gx2.card + t(Point{p.x, 0}, d);
        }
      }
      return tensorSpaces(tgt).injectAt(p, cw, a2, b2);
    };
    return fromWedge<Functor>(s.name + " x " + t.name, src, tgt, w);
  };
  cat->lambda = [weak, day](const Functor& a) {
    auto c = weak.lock();
    Functor src = c->tensor(c->unit, a);
    GeneratorEval w = [day, a](Point p, FinSet cw, std::size_t cpt,
                               std::size_t v) -> std::size_t {
      FinSet x{p.x};
      if (day) {
        LazyFun evc(exponential(cw, x), x, [cw, x, cpt](std::size_t h) {
          return digitAt(h, x.card, cw.card, cpt);
        });
        return a.apply(evc, v);
      }
      return digitAt(v, a(x).card, cw.card, cpt);
    };
    return fromWedge<Functor>("lambda(" + a.name() + ")", src, a, w);
  };
  cat->rho = [weak](const Functor& a) {
    auto c = weak.lock();
    Functor src = c->tensor(a, c->unit);
    // Both tensors: (C, u, h : C -> X) |-> A(h)(u).
    GeneratorEval w = [a](Point p, FinSet cw, std::size_t u, std::size_t h) {
      return a.apply(LazyFun(indexToFun(cw, FinSet{p.x}, h)), u);
    };
    return fromWedge<Functor>("rho(" + a.name() + ")", src, a, w);
  };
  cat->alpha = [weak, day](const Functor& f, const Functor& g,
                           const Functor& h) {
    auto c = weak.lock();
    Functor gh = c->tensor(g, h);
    Functor fg = c->tensor(f, g);
    Functor src = c->tensor(f, gh);
    Functor tgt = c->tensor(fg, h);
    GeneratorEval w;
    if (day) {
      w = [g, h, gh, fg, tgt](Point p, FinSet cw, std::size_t u,
                              std::size_t t) {
        FinSet x{p.x};
        FinSet cx = exponential(cw, x);
        Generator inner = tensorSpaces(gh).repAt({cx.card, 0}, t);
        FinSet d = inner.w;
        FinSet e = product(cw, d);
        // d |-> (c |-> (c, d))
        LazyFun pairing(d, exponential(cw, e), [cw, d, e](std::size_t dd) {
          std::size_t r = 0;
          for (std::size_t cc = 0; cc < cw.card; ++cc) {
            r = r * e.card + cc * d.card + dd;
          }
          return r;
        });
        std::size_t v = g.apply(pairing, inner.a);
        std::size_t wcls = tensorSpaces(fg).injectAt({e.card, 0}, cw, u, v);
        // phi : D -> (C -> X) |-> ((c, d) |-> phi(d)(c))
        LazyFun uncurry(exponential(d, cx), exponential(e, x),
                        [cw, d, cx, x](std::size_t phi) {
                          auto rows = decodeDigits(phi, cx.card, d.card);
                          std::size_t r = 0;
                          for (std::size_t cc = 0; cc < cw.card; ++cc) {
                            for (std::size_t dd = 0; dd < d.card; ++dd) {
                              r = r * x.card +
                                  digitAt(rows[dd], x.card, cw.card, cc);
                            }
                          }
                          return r;
                        });
        std::size_t hh = h.apply(uncurry, inner.b);
        return tensorSpaces(tgt).injectAt(p, e, wcls, hh);
      };
    } else {
      w = [g, h, gh, fg, tgt](Point p, FinSet cw, std::size_t u,
                              std::size_t k) {
        FinSet x{p.x};
        FinSet ghx = gh(x);
        FinSet hx = h(x);
        std::vector<Generator> parts;
        std::size_t total = 0;
        for (std::size_t e : decodeDigits(k, ghx.card, cw.card)) {
          parts.push_back(tensorSpaces(gh).repAt({x.card, 0}, e));
          total += parts.back().w.card;
        }
        FinSet d{total};
        FinSet gd = g(d);
        std::size_t kk = 0;
        std::size_t l = 0;
        std::size_t offset = 0;
        for (const auto& part : parts) {
          LazyFun incl(part.w, d, [offset](std::size_t i) {
            return offset + i;
          });
          kk = kk * gd.card + g.apply(incl, part.a);
          for (std::size_t y : decodeDigits(part.b, hx.card, part.w.card)) {
            l = l * hx.card + y;
          }
          offset += part.w.card;
        }
        std::size_t wcls = tensorSpaces(fg).injectAt({d.card, 0}, cw, u, kk);
        return tensorSpaces(tgt).injectAt(p, d, wcls, l);
      };
    }
    return fromWedge<Functor>(
        "alpha(" + f.name() + "," + g.name() + "," + h.name() + ")", src, tgt,
        w);
  };
  return cat;
}

inline FunctorCategoryPtr dayCategory(std::size_t bound = 3,
                                      CoendOptions opts = {}) {
  return makeFunctorCategory(MonoidalTag::Day, bound, opts);
}

inline FunctorCategoryPtr substCategory(std::size_t bound = 3,
                                        CoendOptions opts = {}) {
  return makeFunctorCategory(MonoidalTag::Subst, bound, opts);
}

inline ProfunctorCategoryPtr benabouCategory(std::size_t bound = 3,
                                             CoendOptions opts = {}) {
  auto cat = std::make_shared<ProfunctorCategory>();
  cat->tag = MonoidalTag::Benabou;
  cat->bound = bound;
  cat->unit = homProf();
  auto cache = std::make_shared<detail::TensorCache<Profunctor>>();
  cat->tensor = [bound, opts, cache](const Profunctor& a,
                                     const Profunctor& b) {
    return cache->get(a, b, [&] {
      return Profunctor(
          std::make_shared<BenabouTensorImpl>(a, b, bound, opts));
    });
  };
  std::weak_ptr<ProfunctorCategory> weak = cat;
  cat->tensorMor = [weak](const ProNat& s, const ProNat& t) {
    auto c = weak.lock();
    Profunctor src = c->tensor(s.source, t.source);
    Profunctor tgt = c->tensor(s.target, t.target);
    GeneratorEval w = [s, t, tgt](Point p, FinSet wo, std::size_t a,
                                  std::size_t b) {
      return tensorSpaces(tgt).injectAt(p, wo, s({p.x, wo.card}, a),
                                        t({wo.card, p.y}, b));
    };
    return fromWedge<Profunctor>(s.name + " x " + t.name, src, tgt, w);
  };
  cat->lambda = [weak](const Profunctor& a) {
    auto c = weak.lock();
    Profunctor src = c->tensor(c->unit, a);
    GeneratorEval w = [a](Point p, FinSet wo, std::size_t h, std::size_t b) {
      LazyFun hf(indexToFun(FinSet{p.x}, wo, h));
      return a.apply(hf, identityLazy(FinSet{p.y}), b);
    };
    return fromWedge<Profunctor>("lambda(" + a.name() + ")", src, a, w);
  };
  cat->rho = [weak](const Profunctor& a) {
    auto c = weak.lock();
    Profunctor src = c->tensor(a, c->unit);
    GeneratorEval w = [a](Point p, FinSet wo, std::size_t u, std::size_t h) {
      LazyFun hf(indexToFun(wo, FinSet{p.y}, h));
      return a.apply(identityLazy(FinSet{p.x}), hf, u);
    };
    return fromWedge<Profunctor>("rho(" + a.name() + ")", src, a, w);
  };
  cat->alpha = [weak](const Profunctor& f, const Profunctor& g,
                      const Profunctor& h) {
    auto c = weak.lock();
    Profunctor gh = c->tensor(g, h);
    Profunctor fg = c->tensor(f, g);
    Profunctor src = c->tensor(f, gh);
    Profunctor tgt = c->tensor(fg, h);
    GeneratorEval w = [gh, fg, tgt](Point p, FinSet wo, std::size_t a,
                                    std::size_t t) {
      Generator inner = tensorSpaces(gh).repAt({wo.card, p.y}, t);
      std::size_t ab =
          tensorSpaces(fg).injectAt({p.x, inner.w.card}, wo, a, inner.a);
      return tensorSpaces(tgt).injectAt(p, inner.w, ab, inner.b);
    };
    return fromWedge<Profunctor>(
        "alpha(" + f.name() + "," + g.name() + "," + h.name() + ")", src, tgt,
        w);
  };
  return cat;
}

// ---------------------------------------------------------------------------
// Structural isomorphisms and coherence.

template <class Obj>
struct StructuralIsos {
  Transformation<Obj> lambda;
  Transformation<Obj> lambdaInv;
  Transformation<Obj> rho;
  Transformation<Obj> rhoInv;
};

template <class Obj>
StructuralIsos<Obj> unitIsos(const MonoidalCategory<Obj>& cat, const Obj& a) {
  auto l = cat.lambda(a);
  auto r = cat.rho(a);
  return {l, inverseT(l), r, inverseT(r)};
}

/// lambda, rho bijective at A and alpha bijective at (A, B, C).
template <class Obj>
CheckReport checkStructuralIsos(const MonoidalCategory<Obj>& cat,
                                const Obj& a, const Obj& b, const Obj& c,
                                std::size_t window) {
  CheckReport rep("structural isomorphisms (" + tagName(cat.tag) + ")");
  auto pts = Obj::points(window);
  rep.merge(bijectiveOnWindow("lambda", cat.lambda(a), pts));
  rep.merge(bijectiveOnWindow("rho", cat.rho(a), pts));
  rep.merge(bijectiveOnWindow("alpha", cat.alpha(a, b, c), pts));
  return rep;
}

/// Triangle and pentagon, pointwise on the window.
template <class Obj>
CheckReport checkCoherence(const MonoidalCategory<Obj>& cat, const Obj& a,
                           const Obj& b, const Obj& c, const Obj& d,
                           std::size_t window) {
  CheckReport rep("coherence (" + tagName(cat.tag) + ")");
  auto pts = Obj::points(window);
  const Obj& I = cat.unit;
  // (rho_A (x) id_B) . alpha_{A,I,B} = id_A (x) lambda_B
  rep.merge(equalOnWindow(
      "triangle",
      composeT(cat.tensorMor(cat.rho(a), identityOf(b)), cat.alpha(a, I, b)),
      cat.tensorMor(identityOf(a), cat.lambda(b)), pts));
  // alpha_{AB,C,D} . alpha_{A,B,CD}
  //   = (alpha_{A,B,C} (x) id_D) . alpha_{A,BC,D} . (id_A (x) alpha_{B,C,D})
  Obj cd = cat.tensor(c, d);
  Obj ab = cat.tensor(a, b);
  Obj bc = cat.tensor(b, c);
  rep.merge(equalOnWindow(
      "pentagon", composeT(cat.alpha(ab, c, d), cat.alpha(a, b, cd)),
      composeAll(cat.tensorMor(cat.alpha(a, b, c), identityOf(d)),
                 cat.alpha(a, bc, d),
                 cat.tensorMor(identityOf(a), cat.alpha(b, c, d))),
      pts));
  return rep;
}

// ---------------------------------------------------------------------------
// Monoids.

template <class Obj>
struct MonoidRep {
  using Mor = Transformation<Obj>;

  std::string name;
  std::shared_ptr<const MonoidalCategory<Obj>> cat;
  Obj carrier;
  /// I -> M
  Mor unit;
  /// M (x) M -> M
  Mor mult;

  MonoidalTag tag() const { return cat->tag; }
};

using FunctorMonoid = MonoidRep<Functor>;
using ProfunctorMonoid = MonoidRep<Profunctor>;

template <class Obj>
CheckReport checkMonoidLaws(const MonoidRep<Obj>& m, std::size_t window) {
  const auto& cat = *m.cat;
  CheckReport rep("monoid laws: " + m.name);
  auto pts = Obj::points(window);
  const Obj& M = m.carrier;
  auto id = identityOf(M);
  rep.merge(equalOnWindow("left unit", cat.lambda(M),
                          composeT(m.mult, cat.tensorMor(m.unit, id)), pts));
  rep.merge(equalOnWindow("right unit", cat.rho(M),
                          composeT(m.mult, cat.tensorMor(id, m.unit)), pts));
  rep.merge(equalOnWindow(
      "associativity",
      composeAll(m.mult, cat.tensorMor(m.mult, id), cat.alpha(M, M, M)),
      composeT(m.mult, cat.tensorMor(id, m.mult)), pts));
  return rep;
}

/// f . e_M = e_N and f . m_M = m_N . (f (x) f).
template <class Obj>
CheckReport checkMonoidMorphism(const Transformation<Obj>& f,
                                const MonoidRep<Obj>& m,
                                const MonoidRep<Obj>& n, std::size_t window) {
  if (m.tag() != n.tag()) {
    throw DomainError("monoid morphism between " + tagName(m.tag()) +
                      " and " + tagName(n.tag()) + " monoids");
  }
  CheckReport rep("monoid morphism: " + f.name);
  auto pts = Obj::points(window);
  rep.merge(equalOnWindow("unit", composeT(f, m.unit), n.unit, pts));
  rep.merge(equalOnWindow("multiplication", composeT(f, m.mult),
                          composeT(n.mult, m.cat->tensorMor(f, f)), pts));
  return rep;
}

/// For arrows: unit and multiplication are strong natural.
inline CheckReport checkArrowStrength(const ProfunctorMonoid& m,
                                      const StrengthWindow& win) {
  CheckReport rep("strong monoid: " + m.name);
  rep.merge(checkStrongNaturality(m.unit, win));
  rep.merge(checkStrongNaturality(m.mult, win));
  return rep;
}

/// The monoid on the unit object: e = id, m = lambda_I.
template <class Obj>
MonoidRep<Obj> trivialMonoid(std::shared_ptr<const MonoidalCategory<Obj>> cat,
                             std::string name) {
  MonoidRep<Obj> m{std::move(name), cat, cat->unit, identityOf(cat->unit),
                   cat->lambda(cat->unit)};
  return m;
}

// ---------------------------------------------------------------------------
// Functor monoid instances.

/// Writer over a finite monoid given by its multiplication table.
struct FiniteMonoid {
  std::string name;
  std::size_t unit = 0;
  std::vector<std::vector<std::size_t>> table;

  std::size_t size() const { return table.size(); }
  std::size_t operator()(std::size_t a, std::size_t b) const {
    return table[a][b];
  }
};

inline FiniteMonoid orMonoid() { return {"or2", 0, {{0, 1}, {1, 1}}}; }

inline Nat makeNat(std::string name, Functor source, Functor target,
                   std::function<std::size_t(FinSet, std::size_t)> fn) {
  Nat t;
  t.name = std::move(name);
  t.source = std::move(source);
  t.target = std::move(target);
  t.at = [fn = std::move(fn)](Point p, std::size_t v) {
    return fn(FinSet{p.x}, v);
  };
  return t;
}

inline FunctorMonoid maybeMonad(FunctorCategoryPtr cat) {
  Functor M = maybeFunctor();
  Nat e = makeNat("return", cat->unit, M,
                  [](FinSet, std::size_t x) { return maybeJust(x); });
  // (Just c, k) |-> k c; (Nothing, k) |-> Nothing
  Nat m = fromWedge<Functor>(
      "join", cat->tensor(M, M), M,
      [](Point p, FinSet c, std::size_t u, std::size_t k) {
        if (u == c.card) return p.x;
        return digitAt(k, p.x + 1, c.card, u);
      });
  return {"maybe-monad", cat, M, e, m};
}

inline FunctorMonoid readerMonad(FunctorCategoryPtr cat, std::size_t env) {
  Functor M = readerFunctor(env);
  Nat e = makeNat("return", cat->unit, M, [env](FinSet x, std::size_t v) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < env; ++i) r = r * x.card + v;
    return r;
  });
  // (u : E -> C, k : C -> (E -> X)) |-> e |-> k(u e)(e)
  Nat m = fromWedge<Functor>(
      "join", cat->tensor(M, M), M,
      [env](Point p, FinSet c, std::size_t u, std::size_t k) {
        std::size_t nx = p.x;
        std::size_t ex = checkedPow(nx, env);
        std::size_t r = 0;
        for (std::size_t i = 0; i < env; ++i) {
          std::size_t ci = digitAt(u, c.card, env, i);
          std::size_t row = digitAt(k, ex, c.card, ci);
          r = r * nx + digitAt(row, nx, env, i);
        }
        return r;
      });
  return {"reader" + std::to_string(env) + "-monad", cat, M, e, m};
}

inline Functor writerFunctor(const FiniteMonoid& w) {
  return polyToRep(writerPoly(w.size(), "writer-" + w.name));
}

inline FunctorMonoid writerMonad(FunctorCategoryPtr cat, FiniteMonoid w) {
  Functor M = w.name == "or2" ? writerOr2Functor() : writerFunctor(w);
  std::size_t unit = w.unit;
  Nat e = makeNat("return", cat->unit, M, [unit](FinSet x, std::size_t v) {
    return unit * x.card + v;
  });
  // ((w, c), k) |-> (w . w', x) where k c = (w', x)
  Nat m = fromWedge<Functor>(
      "join", cat->tensor(M, M), M,
      [w](Point p, FinSet c, std::size_t u, std::size_t k) {
        std::size_t nx = p.x;
        std::size_t w1 = u / c.card;
        std::size_t kc = digitAt(k, w.size() * nx, c.card, u % c.card);
        return w(w1, kc / nx) * nx + kc % nx;
      });
  return {"writer-" + w.name + "-monad", cat, M, e, m};
}

inline FunctorMonoid maybeIdiom(FunctorCategoryPtr cat) {
  Functor M = maybeFunctor();
  Nat e = makeNat("pure", cat->unit, M,
                  [](FinSet, std::size_t x) { return maybeJust(x); });
  // (Just c, Just h) |-> Just (h c); otherwise Nothing
  Nat m = fromWedge<Functor>(
      "ap", cat->tensor(M, M), M,
      [](Point p, FinSet c, std::size_t u, std::size_t v) {
        std::size_t nothingV = exponential(c, FinSet{p.x}).card;
        if (u == c.card || v == nothingV) return p.x;
        return digitAt(v, p.x, c.card, u);
      });
  return {"maybe-idiom", cat, M, e, m};
}

inline FunctorMonoid readerIdiom(FunctorCategoryPtr cat, std::size_t env) {
  Functor M = readerFunctor(env);
  Nat e = makeNat("pure", cat->unit, M, [env](FinSet x, std::size_t v) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < env; ++i) r = r * x.card + v;
    return r;
  });
  // (u : E -> C, v : E -> (C -> X)) |-> e |-> v(e)(u e)
  Nat m = fromWedge<Functor>(
      "ap", cat->tensor(M, M), M,
      [env](Point p, FinSet c, std::size_t u, std::size_t v) {
        std::size_t nx = p.x;
        std::size_t cx = exponential(c, FinSet{nx}).card;
        std::size_t r = 0;
        for (std::size_t i = 0; i < env; ++i) {
          std::size_t ci = digitAt(u, c.card, env, i);
          std::size_t h = digitAt(v, cx, env, i);
          r = r * nx + digitAt(h, nx, c.card, ci);
        }
        return r;
      });
  return {"reader" + std::to_string(env) + "-idiom", cat, M, e, m};
}

inline FunctorMonoid writerIdiom(FunctorCategoryPtr cat, FiniteMonoid w) {
  Functor M = w.name == "or2" ? writerOr2Functor() : writerFunctor(w);
  std::size_t unit = w.unit;
  Nat e = makeNat("pure", cat->unit, M, [unit](FinSet x, std::size_t v) {
    return unit * x.card + v;
  });
  // ((w, c), (w', h)) |-> (w . w', h c)
  Nat m = fromWedge<Functor>(
      "ap", cat->tensor(M, M), M,
      [w](Point p, FinSet c, std::size_t u, std::size_t v) {
        std::size_t nx = p.x;
        std::size_t cx = exponential(c, FinSet{nx}).card;
        std::size_t w1 = u / c.card;
        std::size_t w2 = v / cx;
        return w(w1, w2) * nx + digitAt(v % cx, nx, c.card, u % c.card);
      });
  return {"writer-" + w.name + "-idiom", cat, M, e, m};
}

// ---------------------------------------------------------------------------
// Arrow instances.

inline ProNat makeProNat(
    std::string name, Profunctor source, Profunctor target,
    std::function<std::size_t(FinSet, FinSet, std::size_t)> fn) {
  ProNat t;
  t.name = std::move(name);
  t.source = std::move(source);
  t.target = std::move(target);
  t.at = [fn = std::move(fn)](Point p, std::size_t v) {
    return fn(FinSet{p.x}, FinSet{p.y}, v);
  };
  return t;
}

inline ProfunctorMonoid kleisliMaybeArrow(ProfunctorCategoryPtr cat) {
  Profunctor A = kleisliMaybeProf();
  // arr h = Just . h
  ProNat e = makeProNat("arr", cat->unit, A,
                        [](FinSet x, FinSet y, std::size_t h) {
                          std::size_t r = 0;
                          for (std::size_t d : decodeDigits(h, y.card, x.card)) {
                            r = r * (y.card + 1) + d;
                          }
                          return r;
                        });
  // Kleisli composition: x |-> p x >>= q
  ProNat m = fromWedge<Profunctor>(
      "compose", cat->tensor(A, A), A,
      [](Point pt, FinSet w, std::size_t p, std::size_t q) {
        std::size_t ny = pt.y + 1;
        std::size_t r = 0;
        for (std::size_t d : decodeDigits(p, w.card + 1, pt.x)) {
          r = r * ny + (d == w.card ? pt.y : digitAt(q, ny, w.card, d));
        }
        return r;
      });
  return {"kleisli-maybe-arrow", cat, A, e, m};
}

/// Hom with arr = id and composition.
inline ProfunctorMonoid homArrow(ProfunctorCategoryPtr cat) {
  return trivialMonoid(cat, "hom-arrow");
}

}  // namespace notions
