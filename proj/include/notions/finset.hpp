#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace notions {

/// An object of the skeletal category of finite sets: {0, ..., card-1}.
struct FinSet {
  std::size_t card = 0;

  constexpr FinSet() = default;
  constexpr explicit FinSet(std::size_t n) : card(n) {}

  friend constexpr bool operator==(FinSet, FinSet) = default;
  friend constexpr auto operator<=>(FinSet, FinSet) = default;
};

inline constexpr FinSet kTerminal{1};
inline constexpr FinSet kEmpty{0};

/// Largest cardinality any constructed set may have.
inline constexpr std::size_t kMaxCard = std::size_t{1} << 48;

inline std::size_t checkedMul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kMaxCard / a) {
    throw CapacityError("cardinality overflow: " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return a * b;
}

inline std::size_t checkedPow(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r = checkedMul(r, base);
  return r;
}

/// Big-endian positional codec: digits[0] is the most significant.
inline std::size_t encodeDigits(std::span<const std::size_t> digits,
                                std::size_t base) {
  std::size_t r = 0;
  for (std::size_t d : digits) r = r * base + d;
  return r;
}

inline void decodeDigits(std::size_t index, std::size_t base,
                         std::span<std::size_t> out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = index % base;
    index /= base;
  }
}

inline std::vector<std::size_t> decodeDigits(std::size_t index,
                                             std::size_t base,
                                             std::size_t length) {
  std::vector<std::size_t> out(length);
  decodeDigits(index, base, out);
  return out;
}

/// A tabulated function between finite sets.
class FinFun {
 public:
  FinFun() = default;

  FinFun(FinSet dom, FinSet cod, std::vector<std::size_t> table)
      : dom_(dom), cod_(cod), table_(std::move(table)) {
    if (table_.size() != dom_.card) {
      throw DomainError("FinFun: table length " +
                        std::to_string(table_.size()) + " != |dom| " +
                        std::to_string(dom_.card));
    }
    for (std::size_t k = 0; k < table_.size(); ++k) {
      if (table_[k] >= cod_.card) {
        throw DomainError("FinFun: entry " + std::to_string(k) + " = " +
                          std::to_string(table_[k]) + " not below |cod| " +
                          std::to_string(cod_.card));
      }
    }
  }

  static FinFun identity(FinSet a) {
    std::vector<std::size_t> t(a.card);
    for (std::size_t k = 0; k < a.card; ++k) t[k] = k;
    return FinFun(a, a, std::move(t));
  }

  FinSet dom() const { return dom_; }
  FinSet cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }

  std::size_t operator()(std::size_t k) const {
    if (k >= table_.size()) {
      throw DomainError("FinFun: argument " + std::to_string(k) +
                        " outside domain of size " +
                        std::to_string(dom_.card));
    }
    return table_[k];
  }

  bool isInjective() const {
    std::vector<bool> seen(cod_.card, false);
    for (std::size_t v : table_) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  bool isSurjective() const {
    std::vector<bool> seen(cod_.card, false);
    std::size_t hit = 0;
    for (std::size_t v : table_) {
      if (!seen[v]) {
        seen[v] = true;
        ++hit;
      }
    }
    return hit == cod_.card;
  }

  bool isBijective() const { return dom_ == cod_ && isInjective(); }

  /// Two-sided inverse; throws InvertibilityError unless bijective.
  FinFun inverse() const {
    if (!isBijective()) {
      throw InvertibilityError("FinFun: not a bijection (" +
                               std::to_string(dom_.card) + " -> " +
                               std::to_string(cod_.card) + ")");
    }
    std::vector<std::size_t> t(cod_.card);
    for (std::size_t k = 0; k < table_.size(); ++k) t[table_[k]] = k;
    return FinFun(cod_, dom_, std::move(t));
  }

  std::string str() const {
    std::ostringstream os;
    os << dom_.card << "->" << cod_.card << " [";
    for (std::size_t k = 0; k < table_.size(); ++k) {
      os << (k ? "," : "") << table_[k];
    }
    os << "]";
    return os.str();
  }

  friend bool operator==(const FinFun&, const FinFun&) = default;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> table_;
};

/// A function between finite sets evaluated on demand. Used where the domain
/// is too large to tabulate (hom-sets between products, for instance).
class LazyFun {
 public:
  LazyFun() = default;

  LazyFun(FinSet dom, FinSet cod, std::function<std::size_t(std::size_t)> fn)
      : dom_(dom), cod_(cod), fn_(std::move(fn)) {}

  // NOLINTNEXTLINE(google-explicit-constructor)
  LazyFun(const FinFun& f) : dom_(f.dom()), cod_(f.cod()) {
    auto table = std::make_shared<const std::vector<std::size_t>>(f.table());
    fn_ = [table](std::size_t k) { return (*table)[k]; };
  }

  FinSet dom() const { return dom_; }
  FinSet cod() const { return cod_; }
  std::size_t operator()(std::size_t k) const { return fn_(k); }

  FinFun tabulate() const {
    std::vector<std::size_t> t(dom_.card);
    for (std::size_t k = 0; k < dom_.card; ++k) t[k] = fn_(k);
    return FinFun(dom_, cod_, std::move(t));
  }

 private:
  FinSet dom_;
  FinSet cod_;
  std::function<std::size_t(std::size_t)> fn_;
};

inline LazyFun identityLazy(FinSet a) {
  return LazyFun(a, a, [](std::size_t k) { return k; });
}

inline FinFun compose(const FinFun& g, const FinFun& f) {
  if (f.cod() != g.dom()) {
    throw DomainError("compose: f : " + std::to_string(f.dom().card) + " -> " +
                      std::to_string(f.cod().card) + " does not meet g : " +
                      std::to_string(g.dom().card) + " -> " +
                      std::to_string(g.cod().card));
  }
  std::vector<std::size_t> t(f.dom().card);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = g.table()[f.table()[k]];
  return FinFun(f.dom(), g.cod(), std::move(t));
}

inline LazyFun composeLazy(LazyFun g, LazyFun f) {
  if (f.cod() != g.dom()) {
    throw DomainError("compose: codomain " + std::to_string(f.cod().card) +
                      " != domain " + std::to_string(g.dom().card));
  }
  FinSet dom = f.dom();
  FinSet cod = g.cod();
  return LazyFun(dom, cod, [g = std::move(g), f = std::move(f)](std::size_t k) {
    return g(f(k));
  });
}

/// The unique map A -> 1.
inline FinFun bang(FinSet a) {
  return FinFun(a, kTerminal, std::vector<std::size_t>(a.card, 0));
}

/// The unique map 0 -> A.
inline FinFun fromEmpty(FinSet a) { return FinFun(kEmpty, a, {}); }

/// The constant map A -> B at b.
inline FinFun constant(FinSet a, FinSet b, std::size_t value) {
  if (value >= b.card) throw DomainError("constant: value out of range");
  return FinFun(a, b, std::vector<std::size_t>(a.card, value));
}

// ---------------------------------------------------------------------------
// Products. Row-major: (a, b) -> a * |B| + b.

inline FinSet product(FinSet a, FinSet b) {
  return FinSet{checkedMul(a.card, b.card)};
}

inline std::size_t pairIndex(FinSet a, FinSet b, std::size_t x, std::size_t y) {
  if (x >= a.card || y >= b.card) {
    throw DomainError("pairIndex: (" + std::to_string(x) + "," +
                      std::to_string(y) + ") outside " +
                      std::to_string(a.card) + "x" + std::to_string(b.card));
  }
  return x * b.card + y;
}

inline std::pair<std::size_t, std::size_t> unpairIndex(FinSet a, FinSet b,
                                                       std::size_t k) {
  if (k >= a.card * b.card) {
    throw DomainError("unpairIndex: " + std::to_string(k) + " outside " +
                      std::to_string(a.card) + "x" + std::to_string(b.card));
  }
  return {k / b.card, k % b.card};
}

inline FinFun proj1(FinSet a, FinSet b) {
  std::vector<std::size_t> t(a.card * b.card);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = k / b.card;
  return FinFun(product(a, b), a, std::move(t));
}

inline FinFun proj2(FinSet a, FinSet b) {
  std::vector<std::size_t> t(a.card * b.card);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = k % b.card;
  return FinFun(product(a, b), b, std::move(t));
}

/// <f, g> : A -> B x C.
inline FinFun tuple(const FinFun& f, const FinFun& g) {
  if (f.dom() != g.dom()) throw DomainError("tuple: domains differ");
  std::vector<std::size_t> t(f.dom().card);
  for (std::size_t k = 0; k < t.size(); ++k) {
    t[k] = f.table()[k] * g.cod().card + g.table()[k];
  }
  return FinFun(f.dom(), product(f.cod(), g.cod()), std::move(t));
}

/// f x g : A x B -> A' x B'.
inline FinFun productMap(const FinFun& f, const FinFun& g) {
  FinSet dom = product(f.dom(), g.dom());
  std::vector<std::size_t> t(dom.card);
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto [a, b] = unpairIndex(f.dom(), g.dom(), k);
    t[k] = f.table()[a] * g.cod().card + g.table()[b];
  }
  return FinFun(dom, product(f.cod(), g.cod()), std::move(t));
}

inline LazyFun productLazy(LazyFun f, LazyFun g) {
  FinSet dom = product(f.dom(), g.dom());
  FinSet cod = product(f.cod(), g.cod());
  return LazyFun(dom, cod, [f = std::move(f), g = std::move(g)](std::size_t k) {
    std::size_t gd = g.dom().card;
    return f(k / gd) * g.cod().card + g(k % gd);
  });
}

// ---------------------------------------------------------------------------
// Exponentials. A function h : A -> B is encoded big-endian:
//   index = sum_k h(k) * |B|^(|A| - 1 - k).

inline FinSet exponential(FinSet a, FinSet b) {
  return FinSet{checkedPow(b.card, a.card)};
}

inline std::size_t funToIndex(const FinFun& f) {
  return encodeDigits(f.table(), f.cod().card);
}

inline FinFun indexToFun(FinSet a, FinSet b, std::size_t index) {
  if (index >= exponential(a, b).card) {
    throw DomainError("indexToFun: index " + std::to_string(index) +
                      " outside " + std::to_string(b.card) + "^" +
                      std::to_string(a.card));
  }
  return FinFun(a, b, decodeDigits(index, b.card, a.card));
}

/// ev : (A -> B) x A -> B.
inline LazyFun evLazy(FinSet a, FinSet b) {
  FinSet hom = exponential(a, b);
  std::size_t na = a.card;
  std::size_t nb = b.card;
  return LazyFun(product(hom, a), b, [na, nb](std::size_t k) {
    std::size_t h = k / na;
    std::size_t x = k % na;
    // digit x of h, most significant first
    for (std::size_t i = na - 1; i > x; --i) h /= nb;
    return h % nb;
  });
}

inline FinFun ev(FinSet a, FinSet b) { return evLazy(a, b).tabulate(); }

/// curry(f) : X -> (A -> B) for f : X x A -> B.
inline FinFun curry(const FinFun& f, FinSet x, FinSet a) {
  if (f.dom().card != x.card * a.card) {
    throw DomainError("curry: domain of size " +
                      std::to_string(f.dom().card) + " is not " +
                      std::to_string(x.card) + "x" + std::to_string(a.card));
  }
  FinSet b = f.cod();
  std::vector<std::size_t> t(x.card);
  for (std::size_t i = 0; i < x.card; ++i) {
    std::span<const std::size_t> row(f.table().data() + i * a.card, a.card);
    t[i] = encodeDigits(row, b.card);
  }
  return FinFun(x, exponential(a, b), std::move(t));
}

/// Hom(f, g) : (A -> B) -> (A' -> B'), h |-> g . h . f for f : A' -> A and
/// g : B -> B'.
inline LazyFun homMapLazy(LazyFun f, LazyFun g) {
  FinSet a = f.cod();
  FinSet b = g.dom();
  FinSet a2 = f.dom();
  FinSet b2 = g.cod();
  FinSet dom = exponential(a, b);
  FinSet cod = exponential(a2, b2);
  return LazyFun(dom, cod, [a, b, a2, b2, f = std::move(f),
                            g = std::move(g)](std::size_t h) {
    std::vector<std::size_t> digits = decodeDigits(h, b.card, a.card);
    std::size_t r = 0;
    for (std::size_t k = 0; k < a2.card; ++k) r = r * b2.card + g(digits[f(k)]);
    return r;
  });
}

/// h |-> h . f : (A -> X) -> (A' -> X).
inline LazyFun precomposeLazy(LazyFun f, FinSet x) {
  return homMapLazy(std::move(f), identityLazy(x));
}

/// h |-> g . h : (A -> B) -> (A -> B').
inline LazyFun postcomposeLazy(LazyFun g, FinSet a) {
  return homMapLazy(identityLazy(a), std::move(g));
}

inline std::vector<FinFun> enumHom(FinSet a, FinSet b) {
  std::size_t n = exponential(a, b).card;
  std::vector<FinFun> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(indexToFun(a, b, i));
  return out;
}

// ---------------------------------------------------------------------------
// Cartesian structural isomorphisms.

/// lambda = pi_2 : 1 x A -> A.
inline FinFun cartLambda(FinSet a) { return proj2(kTerminal, a); }
/// lambda^-1 = <!, id>.
inline FinFun cartLambdaInv(FinSet a) {
  return tuple(bang(a), FinFun::identity(a));
}
/// rho = pi_1 : A x 1 -> A.
inline FinFun cartRho(FinSet a) { return proj1(a, kTerminal); }
/// rho^-1 = <id, !>.
inline FinFun cartRhoInv(FinSet a) {
  return tuple(FinFun::identity(a), bang(a));
}

/// alpha : A x (B x C) -> (A x B) x C.
inline FinFun cartAlpha(FinSet a, FinSet b, FinSet c) {
  FinSet bc = product(b, c);
  FinSet dom = product(a, bc);
  std::vector<std::size_t> t(dom.card);
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto [x, yz] = unpairIndex(a, bc, k);
    auto [y, z] = unpairIndex(b, c, yz);
    t[k] = pairIndex(product(a, b), c, pairIndex(a, b, x, y), z);
  }
  return FinFun(dom, product(product(a, b), c), std::move(t));
}

/// alpha^-1 : (A x B) x C -> A x (B x C).
inline FinFun cartAlphaInv(FinSet a, FinSet b, FinSet c) {
  FinSet ab = product(a, b);
  FinSet dom = product(ab, c);
  std::vector<std::size_t> t(dom.card);
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto [xy, z] = unpairIndex(ab, c, k);
    auto [x, y] = unpairIndex(a, b, xy);
    t[k] = pairIndex(a, product(b, c), x, pairIndex(b, c, y, z));
  }
  return FinFun(dom, product(a, product(b, c)), std::move(t));
}

}  // namespace notions
