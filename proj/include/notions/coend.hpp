#pragma once

// Coends of integrands H : F^op x F -> S truncated at object size K, computed
// as a quotient of the generators (W, x), x in H(W, W), by union-find.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finset.hpp"
#include "functor.hpp"
#include "report.hpp"

namespace notions {

/// A contravariant functor F^op -> S given by closures.
struct ContraFunctor {
  std::string name;
  std::function<FinSet(FinSet)> onObject;
  /// B(f)(b) for f : W' -> W and b in B(W).
  std::function<std::size_t(const LazyFun&, std::size_t)> apply;
};

/// W |-> (W -> X).
inline ContraFunctor homInto(FinSet x) {
  return {"(W -> " + std::to_string(x.card) + ")",
          [x](FinSet w) { return exponential(w, x); },
          [x](const LazyFun& f, std::size_t b) {
            return precomposeLazy(f, x)(b);
          }};
}

class DiBifunctorImpl {
 public:
  virtual ~DiBifunctorImpl() = default;
  virtual std::string name() const = 0;
  virtual FinSet onPair(FinSet w1, FinSet w2) const = 0;
  /// H(f, g)(x) for f : W1' -> W1, g : W2 -> W2', x in H(W1, W2).
  virtual std::size_t apply(const LazyFun& f, const LazyFun& g,
                            std::size_t x) const = 0;
  /// Truncating at this size loses nothing. Unknown when empty.
  virtual std::optional<std::size_t> arity() const { return std::nullopt; }
  /// Rewrites the generator (W, x) as a related generator at an object of
  /// size at most `bound`, or returns nothing if it cannot.
  virtual std::optional<std::pair<FinSet, std::size_t>> reduce(
      FinSet, std::size_t, std::size_t) const {
    return std::nullopt;
  }
};

/// Handle on an integrand.
class DiBifunctor {
 public:
  DiBifunctor() = default;
  explicit DiBifunctor(std::shared_ptr<const DiBifunctorImpl> impl)
      : impl_(std::move(impl)) {}

  std::string name() const { return impl_->name(); }
  FinSet operator()(FinSet w1, FinSet w2) const {
    return impl_->onPair(w1, w2);
  }
  std::size_t apply(const LazyFun& f, const LazyFun& g, std::size_t x) const {
    return impl_->apply(f, g, x);
  }
  std::optional<std::size_t> arity() const { return impl_->arity(); }
  std::optional<std::pair<FinSet, std::size_t>> reduce(
      FinSet w, std::size_t x, std::size_t bound) const {
    return impl_->reduce(w, x, bound);
  }

  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(impl_.get());
  }

 private:
  std::shared_ptr<const DiBifunctorImpl> impl_;
};

/// H(W1, W2) = A(W2) x B(W1), indexed a * |B(W1)| + b.
class SeparableIntegrand final : public DiBifunctorImpl {
 public:
  SeparableIntegrand(std::string name, Functor cov, ContraFunctor contra)
      : name_(std::move(name)),
        cov_(std::move(cov)),
        contra_(std::move(contra)) {}

  std::string name() const override { return name_; }

  FinSet onPair(FinSet w1, FinSet w2) const override {
    return product(cov_(w2), contra_.onObject(w1));
  }

  std::size_t apply(const LazyFun& f, const LazyFun& g,
                    std::size_t x) const override {
    std::size_t nb = contra_.onObject(f.cod()).card;
    std::size_t a = x / nb;
    std::size_t b = x % nb;
    std::size_t nb2 = contra_.onObject(f.dom()).card;
    return cov_.apply(g, a) * nb2 + contra_.apply(f, b);
  }

  std::optional<std::size_t> arity() const override { return cov_.arity(); }

  std::optional<std::pair<FinSet, std::size_t>> reduce(
      FinSet w, std::size_t x, std::size_t bound) const override {
    std::size_t nb = contra_.onObject(w).card;
    std::size_t a = x / nb;
    std::size_t b = x % nb;
    auto found = restrictCovariant(w, a, bound);
    if (!found) return std::nullopt;
    const auto& [points, a0] = *found;
    FinSet s{points.size()};
    FinFun j(s, w, points);
    std::size_t b0 = contra_.apply(LazyFun(j), b);
    return std::pair{s, a0 * contra_.onObject(s).card + b0};
  }

  const Functor& covariant() const { return cov_; }
  const ContraFunctor& contravariant() const { return contra_; }

  /// Points T of W (sorted, |T| <= bound) and a0 in A(|T|) with
  /// A(incl_T)(a0) = a.
  std::optional<std::pair<std::vector<std::size_t>, std::size_t>>
  restrictCovariant(FinSet w, std::size_t a, std::size_t bound) const {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find({w.card, a});
      if (it != cache_.end()) return it->second;
    }
    std::optional<std::pair<std::vector<std::size_t>, std::size_t>> result;
    if (auto sup = cov_.support(w, a)) {
      if (sup->size() <= bound) {
        if (auto a0 = preimage(w, *sup, a)) result = std::pair{*sup, *a0};
      }
    } else {
      for (std::size_t s = 0; s <= std::min(bound, w.card) && !result; ++s) {
        std::vector<bool> mask(w.card, false);
        std::fill(mask.begin(), mask.begin() + s, true);
        do {
          std::vector<std::size_t> pts;
          for (std::size_t k = 0; k < w.card; ++k) {
            if (mask[k]) pts.push_back(k);
          }
          if (auto a0 = preimage(w, pts, a)) {
            result = std::pair{pts, *a0};
            break;
          }
        } while (std::prev_permutation(mask.begin(), mask.end()));
      }
    }
    std::lock_guard lock(mu_);
    cache_.emplace(std::pair{w.card, a}, result);
    return result;
  }

 private:
  std::optional<std::size_t> preimage(FinSet w,
                                      const std::vector<std::size_t>& pts,
                                      std::size_t a) const {
    FinSet s{pts.size()};
    LazyFun j(FinFun(s, w, pts));
    std::size_t n = cov_(s).card;
    for (std::size_t a0 = 0; a0 < n; ++a0) {
      if (cov_.apply(j, a0) == a) return a0;
    }
    return std::nullopt;
  }

  std::string name_;
  Functor cov_;
  ContraFunctor contra_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, std::size_t>,
                   std::optional<std::pair<std::vector<std::size_t>,
                                           std::size_t>>>
      cache_;
};

inline DiBifunctor separable(std::string name, Functor cov,
                             ContraFunctor contra) {
  return DiBifunctor(std::make_shared<SeparableIntegrand>(
      std::move(name), std::move(cov), std::move(contra)));
}

/// Integrand given by closures.
class LambdaDiBifunctor final : public DiBifunctorImpl {
 public:
  LambdaDiBifunctor(
      std::string name, std::function<FinSet(FinSet, FinSet)> obj,
      std::function<std::size_t(const LazyFun&, const LazyFun&, std::size_t)>
          app)
      : name_(std::move(name)), obj_(std::move(obj)), app_(std::move(app)) {}

  std::string name() const override { return name_; }
  FinSet onPair(FinSet w1, FinSet w2) const override { return obj_(w1, w2); }
  std::size_t apply(const LazyFun& f, const LazyFun& g,
                    std::size_t x) const override {
    return app_(f, g, x);
  }

 private:
  std::string name_;
  std::function<FinSet(FinSet, FinSet)> obj_;
  std::function<std::size_t(const LazyFun&, const LazyFun&, std::size_t)>
      app_;
};

/// W |-> F W x (W -> X).
inline DiBifunctor coYonedaIntegrand(const Functor& f, FinSet x) {
  return separable(f.name() + " W x (W -> " + std::to_string(x.card) + ")",
                   f, homInto(x));
}

// ---------------------------------------------------------------------------

enum class RelationMode {
  /// Adjacent transpositions, inclusions W -> W+1 and collapses W+1 -> W.
  /// Every map of the truncated skeleton is a composite of these.
  Elementary,
  /// Every non-identity h : W -> W'.
  AllMorphisms,
};

struct CoendOptions {
  std::size_t cap = 200000;
  RelationMode mode = RelationMode::Elementary;
  /// Truncate at min(K, arity) when the integrand reports an arity.
  bool clampToArity = true;
};

/// The maps h : W -> W' (|W|, |W'| <= bound) whose relation instances
/// generate the coend relation.
inline std::vector<FinFun> relationMaps(std::size_t bound, RelationMode mode) {
  std::vector<FinFun> maps;
  if (mode == RelationMode::AllMorphisms) {
    for (std::size_t w = 0; w <= bound; ++w) {
      for (std::size_t w2 = 0; w2 <= bound; ++w2) {
        for (auto& h : enumHom(FinSet{w}, FinSet{w2})) {
          if (w == w2 && h == FinFun::identity(FinSet{w})) continue;
          maps.push_back(std::move(h));
        }
      }
    }
    return maps;
  }
  for (std::size_t w = 0; w <= bound; ++w) {
    for (std::size_t i = 0; i + 1 < w; ++i) {
      std::vector<std::size_t> t(w);
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[i], t[i + 1]);
      maps.emplace_back(FinSet{w}, FinSet{w}, std::move(t));
    }
    if (w < bound) {
      std::vector<std::size_t> inc(w);
      std::iota(inc.begin(), inc.end(), 0);
      maps.emplace_back(FinSet{w}, FinSet{w + 1}, std::move(inc));
      if (w >= 1) {
        std::vector<std::size_t> col(w + 1);
        std::iota(col.begin(), col.end(), 0);
        col[w] = w - 1;
        maps.emplace_back(FinSet{w + 1}, FinSet{w}, std::move(col));
      }
    }
  }
  return maps;
}

/// One relation instance: (W, H(h, id)(x)) ~ (W', H(id, h)(x)).
struct RelationInstance {
  const FinFun* h;
  std::size_t x;
  std::size_t left;
  std::size_t right;
};

/// Calls `visit` on every relation instance for the given maps.
template <class Visit>
void forEachRelation(const DiBifunctor& H, const std::vector<FinFun>& maps,
                     Visit&& visit) {
  const auto* sep = H.as<SeparableIntegrand>();
  for (const auto& h : maps) {
    FinSet w = h.dom();
    FinSet w2 = h.cod();
    LazyFun lh(h);
    if (sep) {
      // x = (a, b) with a in A(W), b in B(W').
      const Functor& A = sep->covariant();
      const ContraFunctor& B = sep->contravariant();
      std::size_t na = A(w).card;
      std::size_t nb2 = B.onObject(w2).card;
      std::size_t nb = B.onObject(w).card;
      std::vector<std::size_t> ah(na);
      for (std::size_t a = 0; a < na; ++a) ah[a] = A.apply(lh, a);
      std::vector<std::size_t> bh(nb2);
      for (std::size_t b = 0; b < nb2; ++b) bh[b] = B.apply(lh, b);
      for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t b = 0; b < nb2; ++b) {
          visit(RelationInstance{&h, a * nb2 + b, a * nb + bh[b],
                                 ah[a] * nb2 + b});
        }
      }
    } else {
      LazyFun idw = identityLazy(w);
      LazyFun idw2 = identityLazy(w2);
      std::size_t n = H(w2, w).card;
      for (std::size_t x = 0; x < n; ++x) {
        visit(RelationInstance{&h, x, H.apply(lh, idw, x),
                               H.apply(idw2, lh, x)});
      }
    }
  }
}

/// A computed coend: classes of generators (W, x), |W| <= bound.
class CoendSpace {
 public:
  const DiBifunctor& integrand() const { return integrand_; }
  std::size_t bound() const { return bound_; }
  std::size_t requestedBound() const { return requested_; }
  RelationMode mode() const { return mode_; }
  FinSet carrier() const { return FinSet{reps_.size()}; }
  std::size_t generatorCount() const { return classes_.size(); }

  /// Generator number of (W, x).
  std::size_t generatorIndex(FinSet w, std::size_t x) const {
    if (w.card > bound_) {
      throw CoendBoundError("coend " + integrand_.name() + ": object " +
                            std::to_string(w.card) + " above bound " +
                            std::to_string(bound_));
    }
    std::size_t n = offsets_[w.card + 1] - offsets_[w.card];
    if (x >= n) {
      throw DomainError("coend " + integrand_.name() + ": element " +
                        std::to_string(x) + " outside H(" +
                        std::to_string(w.card) + "," + std::to_string(w.card) +
                        ") of size " + std::to_string(n));
    }
    return offsets_[w.card] + x;
  }

  std::size_t classOf(FinSet w, std::size_t x) const {
    return classes_[generatorIndex(w, x)];
  }

  /// The coend injection. Generators above the bound are first rewritten
  /// along a relation into the truncated range.
  std::size_t inject(FinSet w, std::size_t x) const {
    if (w.card <= bound_) return classOf(w, x);
    auto r = integrand_.reduce(w, x, bound_);
    if (!r) {
      throw CoendBoundError("coend " + integrand_.name() + ": element " +
                            std::to_string(x) + " at object " +
                            std::to_string(w.card) +
                            " is not supported on at most " +
                            std::to_string(bound_) +
                            " points; raise the coend bound");
    }
    return classOf(r->first, r->second);
  }

  /// Minimal generator (W, x) of a class.
  std::pair<FinSet, std::size_t> representative(std::size_t cls) const {
    if (cls >= reps_.size()) {
      throw DomainError("coend " + integrand_.name() + ": class " +
                        std::to_string(cls) + " out of range");
    }
    return generatorAt(reps_[cls]);
  }

  std::pair<FinSet, std::size_t> generatorAt(std::size_t g) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), g);
    std::size_t w = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return {FinSet{w}, g - offsets_[w]};
  }

  const std::vector<std::size_t>& classes() const { return classes_; }

  friend std::shared_ptr<const CoendSpace> computeCoend(
      const DiBifunctor& H, std::size_t K, const CoendOptions& opts);

 private:
  DiBifunctor integrand_;
  std::size_t bound_ = 0;
  std::size_t requested_ = 0;
  RelationMode mode_ = RelationMode::Elementary;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> classes_;
  std::vector<std::size_t> reps_;
};

using CoendPtr = std::shared_ptr<const CoendSpace>;

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Keeps the smaller root so roots are minimal generators.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

inline CoendPtr computeCoend(const DiBifunctor& H, std::size_t K,
                             const CoendOptions& opts = {}) {
  auto space = std::make_shared<CoendSpace>();
  space->integrand_ = H;
  space->requested_ = K;
  space->mode_ = opts.mode;
  std::size_t bound = K;
  if (opts.clampToArity) {
    if (auto a = H.arity()) bound = std::min(bound, *a);
  }
  space->bound_ = bound;
  space->offsets_.push_back(0);
  for (std::size_t w = 0; w <= bound; ++w) {
    std::size_t n = H(FinSet{w}, FinSet{w}).card;
    std::size_t total = space->offsets_.back() + n;
    if (n > opts.cap || total > opts.cap) {
      throw CapacityError("coend " + H.name() + " at bound " +
                          std::to_string(bound) + ": more than " +
                          std::to_string(opts.cap) + " generators");
    }
    space->offsets_.push_back(total);
  }
  std::size_t total = space->offsets_.back();
  detail::UnionFind uf(total);
  auto maps = relationMaps(bound, opts.mode);
  forEachRelation(H, maps, [&](const RelationInstance& r) {
    uf.unite(space->offsets_[r.h->dom().card] + r.left,
             space->offsets_[r.h->cod().card] + r.right);
  });
  space->classes_.resize(total);
  std::vector<std::size_t> classOfRoot(total, total);
  for (std::size_t g = 0; g < total; ++g) {
    std::size_t root = uf.find(g);
    if (classOfRoot[root] == total) {
      classOfRoot[root] = space->reps_.size();
      space->reps_.push_back(g);
    }
    space->classes_[g] = classOfRoot[root];
  }
  return space;
}

/// Re-checks every relation instance for all maps of the truncated skeleton.
inline CheckReport verifyRelations(const CoendSpace& space,
                                   RelationMode mode =
                                       RelationMode::AllMorphisms) {
  CheckReport rep("coend relations: " + space.integrand().name());
  auto maps = relationMaps(space.bound(), mode);
  forEachRelation(space.integrand(), maps, [&](const RelationInstance& r) {
    std::size_t l = space.classOf(r.h->dom(), r.left);
    std::size_t rr = space.classOf(r.h->cod(), r.right);
    rep.expect(l == rr, [&] {
      return "h=" + r.h->str() + ", x=" + std::to_string(r.x) + ": class " +
             std::to_string(l) + " != " + std::to_string(rr);
    });
  });
  return rep;
}

/// A wedge t_W : H(W, W) -> A.
using Wedge = std::function<std::size_t(FinSet, std::size_t)>;

/// The unique map carrier -> A through which the wedge factors. Throws
/// DinaturalityError carrying a violating relation instance when the wedge
/// is not dinatural.
inline FinFun factorize(const CoendSpace& space, const Wedge& wedge,
                        FinSet target) {
  std::size_t total = space.generatorCount();
  std::vector<std::size_t> out(space.carrier().card, target.card);
  bool consistent = true;
  for (std::size_t g = 0; g < total; ++g) {
    auto [w, x] = space.generatorAt(g);
    std::size_t v = wedge(w, x);
    if (v >= target.card) {
      throw DomainError("factorize: wedge value " + std::to_string(v) +
                        " at W=" + std::to_string(w.card) +
                        " outside target of size " +
                        std::to_string(target.card));
    }
    std::size_t c = space.classes()[g];
    if (out[c] == target.card) {
      out[c] = v;
    } else if (out[c] != v) {
      consistent = false;
      break;
    }
  }
  if (!consistent) {
    std::string witness;
    auto maps = relationMaps(space.bound(), space.mode());
    forEachRelation(space.integrand(), maps, [&](const RelationInstance& r) {
      if (!witness.empty()) return;
      std::size_t l = wedge(r.h->dom(), r.left);
      std::size_t rr = wedge(r.h->cod(), r.right);
      if (l != rr) {
        witness = "h=" + r.h->str() + ", x=" + std::to_string(r.x) +
                  ": t(H(h,id)x)=" + std::to_string(l) +
                  " but t(H(id,h)x)=" + std::to_string(rr);
      }
    });
    throw DinaturalityError("wedge on " + space.integrand().name() +
                            " is not dinatural: " + witness);
  }
  return FinFun(space.carrier(), target, std::move(out));
}

struct StabilizationVerdict {
  bool stable = false;
  std::size_t carrierAtK = 0;
  std::size_t carrierAtNext = 0;
  std::string detail;
};

/// Compares the coends truncated at K and K+1 through shared generators.
inline StabilizationVerdict stabilizationCheck(const DiBifunctor& H,
                                               std::size_t K,
                                               CoendOptions opts = {}) {
  opts.clampToArity = false;
  auto small = computeCoend(H, K, opts);
  auto large = computeCoend(H, K + 1, opts);
  StabilizationVerdict v;
  v.carrierAtK = small->carrier().card;
  v.carrierAtNext = large->carrier().card;
  std::vector<std::size_t> t(v.carrierAtK);
  for (std::size_t c = 0; c < v.carrierAtK; ++c) {
    auto [w, x] = small->representative(c);
    t[c] = large->classOf(w, x);
  }
  FinFun cmp(small->carrier(), large->carrier(), std::move(t));
  v.stable = cmp.isBijective();
  v.detail = std::to_string(v.carrierAtK) + " classes at K=" +
             std::to_string(K) + ", " + std::to_string(v.carrierAtNext) +
             " at K=" + std::to_string(K + 1) +
             (v.stable ? "" : (cmp.isInjective() ? "; comparison not onto"
                                                 : "; comparison not 1-1"));
  return v;
}

/// The co-Yoneda presentation of F X together with its comparison to F X.
struct CoYoneda {
  CoendPtr space;
  FinFun iso;
};

inline CoYoneda coYonedaReduce(const Functor& f, FinSet x, std::size_t K,
                               const CoendOptions& opts = {}) {
  auto space = computeCoend(coYonedaIntegrand(f, x), K, opts);
  auto base = space->integrand().as<SeparableIntegrand>();
  Wedge eval = [f, x, base](FinSet w, std::size_t g) {
    std::size_t nb = base->contravariant().onObject(w).card;
    FinFun k = indexToFun(w, x, g % nb);
    return f.apply(LazyFun(k), g / nb);
  };
  FinFun iso = factorize(*space, eval, f(x));
  if (!iso.isBijective()) {
    throw CoendBoundError("co-Yoneda for " + f.name() + " at X=" +
                          std::to_string(x.card) + ": " +
                          std::to_string(iso.dom().card) + " classes vs " +
                          std::to_string(iso.cod().card) +
                          " elements; bound " + std::to_string(K) +
                          " has not stabilized, use a larger K");
  }
  return {space, iso};
}

}  // namespace notions
