#pragma once

// Exhaustive law checks for the skeletal category of finite sets.

#include <cstddef>
#include <string>
#include <vector>

#include "finset.hpp"
#include "report.hpp"

namespace notions {

namespace detail {

inline std::string sizes(std::initializer_list<std::size_t> ns) {
  std::string s = "(";
  bool first = true;
  for (std::size_t n : ns) {
    if (!first) s += ",";
    s += std::to_string(n);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

/// Identity and associativity of composition for all objects of size <= n.
inline CheckReport checkCompositionLaws(std::size_t n) {
  CheckReport rep("composition laws");
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= n; ++b) {
      auto ab = enumHom(FinSet{a}, FinSet{b});
      for (const auto& f : ab) {
        rep.expect(compose(FinFun::identity(FinSet{b}), f) == f &&
                       compose(f, FinFun::identity(FinSet{a})) == f,
                   [&] { return "identity law fails for " + f.str(); });
      }
      for (std::size_t c = 0; c <= n; ++c) {
        auto bc = enumHom(FinSet{b}, FinSet{c});
        for (std::size_t d = 0; d <= n; ++d) {
          auto cd = enumHom(FinSet{c}, FinSet{d});
          for (const auto& f : ab) {
            for (const auto& g : bc) {
              FinFun gf = compose(g, f);
              for (const auto& h : cd) {
                rep.expect(compose(h, gf) == compose(compose(h, g), f), [&] {
                  return "associativity fails at " +
                         detail::sizes({a, b, c, d}) + " for " + f.str() +
                         ", " + g.str() + ", " + h.str();
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

/// |Hom(A, B)| = |B|^|A|, all enumerated functions distinct, and the codec
/// round-trips.
inline CheckReport checkHomEnumeration(std::size_t n) {
  CheckReport rep("hom enumeration");
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= n; ++b) {
      FinSet A{a};
      FinSet B{b};
      auto hom = enumHom(A, B);
      rep.expect(hom.size() == exponential(A, B).card, [&] {
        return "|Hom" + detail::sizes({a, b}) + "| = " +
               std::to_string(hom.size());
      });
      for (std::size_t k = 0; k < hom.size(); ++k) {
        rep.expect(funToIndex(hom[k]) == k && indexToFun(A, B, k) == hom[k],
                   [&] {
                     return "codec mismatch at " + detail::sizes({a, b}) +
                            " index " + std::to_string(k);
                   });
      }
    }
  }
  return rep;
}

/// proj1 . <f, g> = f, proj2 . <f, g> = g, and <f, g> is the only such map.
inline CheckReport checkProductUniversal(std::size_t n) {
  CheckReport rep("product universal property");
  for (std::size_t x = 0; x <= n; ++x) {
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; b <= n; ++b) {
        FinSet X{x};
        FinSet A{a};
        FinSet B{b};
        FinFun p1 = proj1(A, B);
        FinFun p2 = proj2(A, B);
        auto fs = enumHom(X, A);
        auto gs = enumHom(X, B);
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            FinFun t = tuple(f, g);
            rep.expect(compose(p1, t) == f && compose(p2, t) == g, [&] {
              return "projections of <" + f.str() + ", " + g.str() + ">";
            });
          }
        }
        for (const auto& h : enumHom(X, product(A, B))) {
          rep.expect(tuple(compose(p1, h), compose(p2, h)) == h, [&] {
            return "uniqueness fails for " + h.str() + " at " +
                   detail::sizes({x, a, b});
          });
        }
      }
    }
  }
  return rep;
}

/// ev . (curry f x id) = f for every f : X x A -> B, and curry is a bijection
/// onto Hom(X, B^A).
inline CheckReport checkExponentialLaws(std::size_t n) {
  CheckReport rep("exponential laws");
  for (std::size_t x = 0; x <= n; ++x) {
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; b <= n; ++b) {
        FinSet X{x};
        FinSet A{a};
        FinSet B{b};
        FinFun e = ev(A, B);
        FinFun idA = FinFun::identity(A);
        for (const auto& f : enumHom(product(X, A), B)) {
          FinFun c = curry(f, X, A);
          rep.expect(compose(e, productMap(c, idA)) == f, [&] {
            return "ev . (curry f x id) != f for f = " + f.str();
          });
        }
        for (const auto& g : enumHom(X, exponential(A, B))) {
          rep.expect(curry(compose(e, productMap(g, idA)), X, A) == g, [&] {
            return "curry(ev . (g x id)) != g for g = " + g.str();
          });
        }
      }
    }
  }
  return rep;
}

/// lambda, rho, alpha are bijections with the stated inverses, and the
/// triangle and pentagon commute.
inline CheckReport checkCartesianIsos(std::size_t n) {
  CheckReport rep("cartesian structural isos");
  auto iso = [&](const FinFun& f, const FinFun& g, const std::string& what) {
    rep.expect(f.isBijective() &&
                   compose(g, f) == FinFun::identity(f.dom()) &&
                   compose(f, g) == FinFun::identity(f.cod()),
               [&] { return what + " is not inverted by its stated inverse"; });
  };
  for (std::size_t a = 0; a <= n; ++a) {
    FinSet A{a};
    iso(cartLambda(A), cartLambdaInv(A), "lambda at " + std::to_string(a));
    iso(cartRho(A), cartRhoInv(A), "rho at " + std::to_string(a));
    for (std::size_t b = 0; b <= n; ++b) {
      FinSet B{b};
      FinFun idA = FinFun::identity(A);
      FinFun idB = FinFun::identity(B);
      // (rho x id) . alpha = id x lambda
      rep.expect(compose(productMap(cartRho(A), idB),
                         cartAlpha(A, kTerminal, B)) ==
                     productMap(idA, cartLambda(B)),
                 [&] { return "triangle fails at " + detail::sizes({a, b}); });
      for (std::size_t c = 0; c <= n; ++c) {
        FinSet C{c};
        iso(cartAlpha(A, B, C), cartAlphaInv(A, B, C),
            "alpha at " + detail::sizes({a, b, c}));
        for (std::size_t d = 0; d <= n; ++d) {
          FinSet D{d};
          FinFun lhs = compose(cartAlpha(product(A, B), C, D),
                               cartAlpha(A, B, product(C, D)));
          FinFun rhs = compose(
              productMap(cartAlpha(A, B, C), FinFun::identity(D)),
              compose(cartAlpha(A, product(B, C), D),
                      productMap(idA, cartAlpha(B, C, D))));
          rep.expect(lhs == rhs, [&] {
            return "pentagon fails at " + detail::sizes({a, b, c, d});
          });
        }
      }
    }
  }
  return rep;
}

}  // namespace notions
