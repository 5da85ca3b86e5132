#pragma once

// The shuffle side: coordinates in the multi-pearl basis {F_w}, the map
// iota(x)[w] = (x, w), and the quantum shuffle product
//   (a * b)[w] = sum_S v^{e(S)} a[w|_S] b[w|_{not S}]
// which makes iota multiplicative.  In normalized mode coordinates are
// multiplied by D_c = prod (1 - q_b^-1) over the letters, so iota(w[a]) is
// the unit vector at (a) and every coordinate is a Laurent polynomial.

#include "qsh/bilinear_form.hpp"

namespace qsh {

struct BMTag {};
using BMElement = Combination<Word, BMTag>;

inline BMElement bm_unit() { return BMElement(Word{}); }
inline BMElement bm_basis(const Word& w) { return BMElement(w); }

BMElement iota(PairingEngine& engine, const GradedVector& x, bool normalized = false);
BMElement shuffle_mul(const CartanDatum& datum, const BMElement& a, const BMElement& b);
bool is_in_radical(PairingEngine& engine, const GradedVector& x);

// Dual-basis pairing sum_w x[w] y[w].
Scalar coordinate_pair(const BMElement& x, const BMElement& y);

}  // namespace qsh
