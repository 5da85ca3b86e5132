#pragma once

#include <random>

#include "qsh/fraction.hpp"
#include "qsh/scalar_io.hpp"

namespace testing {

inline qsh::Scalar V(int e) { return qsh::Scalar(qsh::LaurentPoly::v(e)); }
inline qsh::LaurentPoly P(int e) { return qsh::LaurentPoly::v(e); }
// s(p,i) in a table of the given rank
inline qsh::Scalar S(int rank, int p, int i, int power = 1) {
  return qsh::Scalar(qsh::LaurentPoly::var(qsh::SymbolTable{rank, p}.slot(p, i), power));
}
// 1/(1 - v^{-2d})
inline qsh::Scalar base(int d) { return qsh::Scalar(1L) / (qsh::Scalar(1L) - V(-2 * d)); }

// Small random Laurent polynomial in v and two puncture symbols.
inline qsh::LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 2), terms(0, 3);
  qsh::LaurentPoly p;
  for (int t = terms(rng); t > 0; --t) {
    qsh::Monomial m;
    m.e[0] = exp(rng);
    m.e[1] = exp(rng) / 2;
    m.e[2] = exp(rng) / 2;
    p += qsh::LaurentPoly::monomial(m, coef(rng));
  }
  return p;
}

}  // namespace testing
