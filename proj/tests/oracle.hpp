#pragma once

/// Brute-force coend oracle for tests: generators at every object of size
/// <= K, related along every map, classes counted with a plain disjoint-set
/// forest. Shares nothing with the engine beyond the integrand's action.

#include <cstddef>
#include <numeric>
#include <vector>

#include "notions/coend.hpp"

namespace oracle {

struct Quotient {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> parent;

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t g = 0; g < parent.size(); ++g) n += find(g) == g;
    return n;
  }
  bool same(std::size_t wa, std::size_t a, std::size_t wb, std::size_t b) {
    return find(offsets[wa] + a) == find(offsets[wb] + b);
  }
};

inline Quotient coend(const notions::DiBifunctor& h, std::size_t k) {
  using notions::FinFun;
  using notions::FinSet;
  using notions::LazyFun;
  Quotient q;
  q.offsets.push_back(0);
  for (std::size_t w = 0; w <= k; ++w) {
    q.offsets.push_back(q.offsets.back() + h(FinSet{w}, FinSet{w}).card);
  }
  q.parent.resize(q.offsets.back());
  std::iota(q.parent.begin(), q.parent.end(), 0);
  for (std::size_t w = 0; w <= k; ++w) {
    for (std::size_t w2 = 0; w2 <= k; ++w2) {
      for (const auto& f : notions::enumHom(FinSet{w}, FinSet{w2})) {
        LazyFun lf(f);
        LazyFun id1 = notions::identityLazy(FinSet{w});
        LazyFun id2 = notions::identityLazy(FinSet{w2});
        std::size_t n = h(FinSet{w2}, FinSet{w}).card;
        for (std::size_t x = 0; x < n; ++x) {
          q.join(q.offsets[w] + h.apply(lf, id1, x),
                 q.offsets[w2] + h.apply(id2, lf, x));
        }
      }
    }
  }
  return q;
}

}  // namespace oracle
