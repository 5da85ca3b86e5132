#pragma once

// Independent reference computations used by the tests.  Nothing here calls
// the pairing engine or the library shuffle.

#include <cstdint>

#include "qsh/free_algebra.hpp"
#include "qsh/shuffle.hpp"

namespace oracle {

using namespace qsh;

inline Scalar letter_pair(const CartanDatum& datum, int a) {
  return Scalar(1L) / (Scalar(1L) - Scalar(LaurentPoly::v(-2 * datum.d(a))));
}

// The form straight from its axioms: peel the first letter of u through r(w).
inline Scalar axiom_pair(const CartanDatum& datum, const Word& w, const Word& u) {
  if (w.size() != u.size()) return Scalar();
  if (u.empty()) return Scalar(1L);
  if (u.size() == 1) return w == u ? letter_pair(datum, u[0]) : Scalar();
  const Word head{u[0]}, rest = u.sub(1);
  Scalar total;
  for (const auto& [k, c] : coproduct_r(datum, word_vector(w)))
    if (k.first == head) total += c * letter_pair(datum, u[0]) * axiom_pair(datum, k.second, rest);
  return total;
}

inline BMElement axiom_iota(const CartanDatum& datum, const GradedVector& x) {
  BMElement out;
  for (const auto& [w, c] : x)
    for (const Word& u : enumerate_words(Coloring::content(w, datum.rank()), 12))
      out.add(u, c * axiom_pair(datum, w, u));
  return out;
}

// Shuffle by brute force over position subsets S of the merged word: the
// letters in S come from a, the rest from b, weighted by
// v^{sum (w_i, w_j)} over i in S, j not in S, j < i.
inline BMElement naive_shuffle(const CartanDatum& datum, const BMElement& a, const BMElement& b) {
  BMElement out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      const std::size_t n = x.size() + y.size();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != x.size()) continue;
        Word merged;
        std::size_t ix = 0, iy = 0;
        for (std::size_t p = 0; p < n; ++p) merged.push_back((mask >> p) & 1 ? x[ix++] : y[iy++]);
        int e = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (((mask >> i) & 1) && !((mask >> j) & 1)) e += datum.inner(merged[i], merged[j]);
        out.add(merged, cx * cy * Scalar(LaurentPoly::v(e)));
      }
    }
  return out;
}

inline std::uint64_t multinomial(const std::vector<int>& counts) {
  std::uint64_t r = 1;
  int n = 0;
  for (int c : counts)
    for (int k = 1; k <= c; ++k) r = r * ++n / k;
  return r;
}

}  // namespace oracle
