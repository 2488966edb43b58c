#pragma once

// Named instances and a plain-text table dump for them.

#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "adjunction.hpp"
#include "errors.hpp"
#include "finset.hpp"
#include "functor.hpp"
#include "profunctor.hpp"

namespace notions {

inline const std::vector<std::string>& functorInstanceNames() {
  static const std::vector<std::string> names{"maybe", "reader2",
                                              "writer-or2", "identity"};
  return names;
}

inline const std::vector<std::string>& profunctorInstanceNames() {
  static const std::vector<std::string> names{"hom", "kleisli-maybe",
                                              "cayley-maybe",
                                              "cayley-writer-or2"};
  return names;
}

inline Functor functorInstance(const std::string& name) {
  if (name == "maybe") return maybeFunctor();
  if (name == "reader2") return readerFunctor(2);
  if (name == "writer-or2") return writerOr2Functor();
  if (name == "identity") return identityFunctor();
  throw LookupError("unknown functor instance '" + name + "'");
}

inline Profunctor profunctorInstance(const std::string& name) {
  if (name == "hom") return homProf();
  if (name == "kleisli-maybe") return kleisliMaybeProf();
  if (name == "cayley-maybe") return cayley(maybeFunctor());
  if (name == "cayley-writer-or2") return cayley(writerOr2Functor());
  throw LookupError("unknown profunctor instance '" + name + "'");
}

inline bool isFunctorInstance(const std::string& name) {
  for (const auto& n : functorInstanceNames()) {
    if (n == name) return true;
  }
  return false;
}

inline bool isProfunctorInstance(const std::string& name) {
  for (const auto& n : profunctorInstanceNames()) {
    if (n == name) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Rendering.

/// "[y0,y1,...]" for an element of the hom-set A -> B.
inline std::string renderFunction(FinSet a, FinSet b, std::size_t h) {
  std::string s = "[";
  auto d = decodeDigits(h, b.card, a.card);
  for (std::size_t k = 0; k < d.size(); ++k) {
    s += (k ? "," : "") + std::to_string(d[k]);
  }
  return s + "]";
}

using ElementRenderer = std::function<std::string(std::size_t)>;

/// Renders v in F(X), with tuple entries printed by `entry`.
inline std::string renderFunctorElement(const Functor& f, FinSet x,
                                        std::size_t v,
                                        const ElementRenderer& entry) {
  const auto* poly = f.as<PolyFunctorImpl>();
  if (!poly) return std::to_string(v);
  auto [ctor, tuple] = poly->decode(x, v);
  std::string s = poly->poly().constructors[ctor].name;
  if (tuple.empty()) return s;
  s += "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    s += (k ? "," : "") + entry(tuple[k]);
  }
  return s + ")";
}

inline std::string renderFunctorElement(const Functor& f, FinSet x,
                                        std::size_t v) {
  return renderFunctorElement(
      f, x, v, [](std::size_t e) { return std::to_string(e); });
}

inline std::string renderProfunctorElement(const std::string& name, FinSet x,
                                           FinSet y, std::size_t v) {
  if (name == "hom") return renderFunction(x, y, v);
  if (name == "kleisli-maybe") {
    std::string s = "[";
    auto d = decodeDigits(v, y.card + 1, x.card);
    for (std::size_t k = 0; k < d.size(); ++k) {
      s += k ? "," : "";
      s += d[k] == y.card ? "Nothing" : "Just " + std::to_string(d[k]);
    }
    return s + "]";
  }
  Functor base = name == "cayley-maybe" ? maybeFunctor() : writerOr2Functor();
  return renderFunctorElement(
      base, exponential(x, y), v,
      [x, y](std::size_t h) { return renderFunction(x, y, h); });
}

namespace detail {

inline void listElements(std::ostringstream& os, std::size_t n,
                         const ElementRenderer& render) {
  os << " {";
  for (std::size_t v = 0; v < n; ++v) os << (v ? ", " : "") << render(v);
  os << "}\n";
}

}  // namespace detail

/// Object and morphism tables of a functor instance for sizes <= n.
inline std::string showFunctor(const std::string& name, std::size_t n) {
  Functor f = functorInstance(name);
  std::ostringstream os;
  os << f.name() << "\n";
  for (std::size_t z = 0; z <= n; ++z) {
    FinSet x{z};
    os << "  F(" << z << ") = " << f(x).card << ":";
    detail::listElements(os, f(x).card, [&](std::size_t v) {
      return renderFunctorElement(f, x, v);
    });
  }
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= n; ++b) {
      for (const auto& h : enumHom(FinSet{a}, FinSet{b})) {
        os << "  F(" << h.str() << ") = " << f.onMorphism(h).str() << "\n";
      }
    }
  }
  return os.str();
}

/// The carrier of a profunctor instance at (X, Y).
inline std::string showProfunctor(const std::string& name, std::size_t x,
                                  std::size_t y) {
  Profunctor p = profunctorInstance(name);
  FinSet X{x};
  FinSet Y{y};
  std::ostringstream os;
  std::size_t n = p(X, Y).card;
  os << p.name() << "\n  P(" << x << "," << y << ") = " << n << ":";
  detail::listElements(os, n, [&](std::size_t v) {
    return renderProfunctorElement(name, X, Y, v);
  });
  return os.str();
}

/// `sizes` is {n} for functors (tables up to n) and {x, y} or {n} for
/// profunctors (one carrier, or every carrier up to (n, n)).
inline std::string showInstance(const std::string& name,
                                const std::vector<std::size_t>& sizes) {
  if (sizes.empty() || sizes.size() > 2) {
    throw DomainError("show expects one or two object sizes");
  }
  if (isFunctorInstance(name)) {
    if (sizes.size() != 1) throw DomainError("functor instances take one size");
    return showFunctor(name, sizes[0]);
  }
  if (isProfunctorInstance(name)) {
    if (sizes.size() == 2) return showProfunctor(name, sizes[0], sizes[1]);
    std::string out;
    for (std::size_t x = 0; x <= sizes[0]; ++x) {
      for (std::size_t y = 0; y <= sizes[0]; ++y) {
        out += showProfunctor(name, x, y);
      }
    }
    return out;
  }
  throw LookupError("unknown instance '" + name + "'");
}

}  // namespace notions
