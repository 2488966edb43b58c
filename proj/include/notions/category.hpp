#pragma once

// Generic machinery shared by the functor category [F,S] and the category of
// strong profunctors: evaluation points, transformations, and pointwise
// comparison on a probe window.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "finset.hpp"
#include "report.hpp"

namespace notions {

/// Where a transformation component lives: Z for functors, (X, Y) for
/// profunctors. Unary objects ignore `y`.
struct Point {
  std::size_t x = 0;
  std::size_t y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// Evaluates a transformation out of a coend-backed object directly on a
/// generator (W, a, b) instead of on a class index.
using GeneratorEval =
    std::function<std::size_t(Point, FinSet, std::size_t, std::size_t)>;

/// A morphism of [F,S] (Obj = Functor) or of strong profunctors
/// (Obj = Profunctor), given by its pointwise action.
template <class Obj>
struct Transformation {
  std::string name;
  Obj source;
  Obj target;
  std::function<std::size_t(Point, std::size_t)> at;
  GeneratorEval onGenerator;

  std::size_t operator()(Point p, std::size_t v) const { return at(p, v); }

  FinFun component(Point p) const {
    FinSet dom = source.at(p);
    std::vector<std::size_t> t(dom.card);
    for (std::size_t k = 0; k < dom.card; ++k) t[k] = at(p, k);
    return FinFun(dom, target.at(p), std::move(t));
  }
};

template <class Obj>
Transformation<Obj> identityOf(const Obj& a) {
  return {"id(" + a.name() + ")", a, a,
          [](Point, std::size_t v) { return v; }, {}};
}

/// g . f
template <class Obj>
Transformation<Obj> composeT(const Transformation<Obj>& g,
                             const Transformation<Obj>& f) {
  Transformation<Obj> r;
  r.name = g.name + " . " + f.name;
  r.source = f.source;
  r.target = g.target;
  auto gat = g.at;
  auto fat = f.at;
  r.at = [gat, fat](Point p, std::size_t v) { return gat(p, fat(p, v)); };
  if (f.onGenerator) {
    auto fgen = f.onGenerator;
    r.onGenerator = [gat, fgen](Point p, FinSet w, std::size_t a,
                                std::size_t b) {
      return gat(p, fgen(p, w, a, b));
    };
  }
  return r;
}

template <class Obj, class... Rest>
Transformation<Obj> composeAll(const Transformation<Obj>& g,
                               const Rest&... rest) {
  if constexpr (sizeof...(Rest) == 0) {
    return g;
  } else {
    return composeT(g, composeAll(rest...));
  }
}

/// Pointwise inverse: each component is tabulated once and inverted.
/// Throws InvertibilityError at the first non-bijective component.
template <class Obj>
Transformation<Obj> inverseT(const Transformation<Obj>& f) {
  struct Cache {
    std::mutex mu;
    std::map<Point, std::shared_ptr<const FinFun>> inv;
  };
  auto cache = std::make_shared<Cache>();
  Transformation<Obj> r;
  r.name = "(" + f.name + ")^-1";
  r.source = f.target;
  r.target = f.source;
  r.at = [cache, f](Point p, std::size_t v) {
    std::shared_ptr<const FinFun> inv;
    {
      std::lock_guard lock(cache->mu);
      auto it = cache->inv.find(p);
      if (it != cache->inv.end()) inv = it->second;
    }
    if (!inv) {
      FinFun c = f.component(p);
      if (!c.isBijective()) {
        throw InvertibilityError(f.name + " is not invertible at " +
                                 Obj::describe(p) + " (" +
                                 std::to_string(c.dom().card) + " -> " +
                                 std::to_string(c.cod().card) + ")");
      }
      inv = std::make_shared<const FinFun>(c.inverse());
      std::lock_guard lock(cache->mu);
      cache->inv.emplace(p, inv);
    }
    return (*inv)(v);
  };
  return r;
}

/// Pointwise equality of two parallel transformations on the window.
template <class Obj>
CheckReport equalOnWindow(const std::string& name,
                          const Transformation<Obj>& lhs,
                          const Transformation<Obj>& rhs,
                          const std::vector<Point>& points) {
  CheckReport rep(name);
  for (Point p : points) {
    FinSet dom = lhs.source.at(p);
    for (std::size_t v = 0; v < dom.card; ++v) {
      std::size_t l = lhs.at(p, v);
      std::size_t r = rhs.at(p, v);
      rep.expect(l == r, [&] {
        return "at " + Obj::describe(p) + ", element " + std::to_string(v) +
               ": " + std::to_string(l) + " != " + std::to_string(r);
      });
    }
  }
  return rep;
}

template <class Obj>
CheckReport equalOnWindow(const std::string& name,
                          const Transformation<Obj>& lhs,
                          const Transformation<Obj>& rhs,
                          std::size_t window) {
  return equalOnWindow(name, lhs, rhs, Obj::points(window));
}

/// Every component on the window is a bijection.
template <class Obj>
CheckReport bijectiveOnWindow(const std::string& name,
                              const Transformation<Obj>& f,
                              const std::vector<Point>& points) {
  CheckReport rep(name);
  for (Point p : points) {
    FinFun c = f.component(p);
    rep.expect(c.isBijective(), [&] {
      return "component at " + Obj::describe(p) + " (" +
             std::to_string(c.dom().card) + " -> " +
             std::to_string(c.cod().card) + ") is not a bijection";
    });
  }
  return rep;
}

template <class Obj>
CheckReport bijectiveOnWindow(const std::string& name,
                              const Transformation<Obj>& f,
                              std::size_t window) {
  return bijectiveOnWindow(name, f, Obj::points(window));
}

/// `inv` is a two-sided inverse of `f` on the window.
template <class Obj>
CheckReport twoSidedInverseOnWindow(const std::string& name,
                                    const Transformation<Obj>& f,
                                    const Transformation<Obj>& inv,
                                    const std::vector<Point>& points) {
  CheckReport rep(name);
  rep.merge(equalOnWindow("inv . f = id", composeT(inv, f),
                          identityOf(f.source), points));
  rep.merge(equalOnWindow("f . inv = id", composeT(f, inv),
                          identityOf(f.target), points));
  return rep;
}

}  // namespace notions
