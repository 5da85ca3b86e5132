#pragma once

// The free algebra on the simple roots: word concatenation, the twisted
// coproduct r, divided powers and Serre elements.
//
// The tensor square carries the twisted product
//   (x1 (x) x2)(y1 (x) y2) = v^{(|x2|,|y1|)} x1 y1 (x) x2 y2,
// and r is the algebra map with r(w[i]) = w[i] (x) 1 + 1 (x) w[i].  On a
// word it expands to a sum over subsets S of positions:
//   r(w) = sum_S v^{e(S)} w|_S (x) w|_{not S},
//   e(S) = sum over i < j with i not in S, j in S of (w_i, w_j).

#include <functional>
#include <utility>

#include "qsh/cartan.hpp"
#include "qsh/combination.hpp"

namespace qsh {

struct FreeTag {};
using GradedVector = Combination<Word, FreeTag>;
using WordPair = std::pair<Word, Word>;
using TensorVector = Combination<WordPair, FreeTag>;

inline GradedVector word_vector(const Word& w) { return GradedVector(w); }
inline GradedVector unit_vector() { return GradedVector(Word{}); }

// Enumerates the splittings of w into (w|_S, w|_{not S}) with exponent e(S).
void for_each_split(const CartanDatum& datum, const Word& w,
                    const std::function<void(const Word& left, const Word& right, int exponent)>& fn);

// Enumerates the shuffles of u (positions S) with w (the complement); the
// exponent is e(S) of the merged word.
void for_each_shuffle(const CartanDatum& datum, const Word& u, const Word& w,
                      const std::function<void(const Word& merged, int exponent)>& fn);

GradedVector concat_mul(const GradedVector& x, const GradedVector& y);
TensorVector coproduct_r(const CartanDatum& datum, const GradedVector& x);
TensorVector twisted_mul(const CartanDatum& datum, const TensorVector& a, const TensorVector& b);
TensorVector tensor(const GradedVector& x, const GradedVector& y);

// DP(i,k) = w[i,...,i] / [k]_{v^{d_i}}!.
GradedVector divided_power_word(const CartanDatum& datum, int i, int k);

// sum_{l=0}^{k} (-1)^l DP(i,l) w[j] DP(i,k-l), k = 1 - a_ij.
GradedVector serre_element(const CartanDatum& datum, int i, int j);

// The same alternating sum for an arbitrary k (no vanishing expected when
// k < 1 - a_ij).
GradedVector serre_sum(const CartanDatum& datum, int i, int j, int k);

// Content of a homogeneous element; throws if x mixes contents or is zero.
Coloring homogeneous_content(const CartanDatum& datum, const GradedVector& x);

}  // namespace qsh
