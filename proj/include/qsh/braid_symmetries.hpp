#pragma once

// Lusztig's braid operators T_i on the part of the algebra with no a_i, and
// the truncated alternating sums whose vanishing generalizes quantum Serre.
//
//   T_i(F_j) = sum_{l=0}^{k} (-1)^{k-l} q_i^{l/2} F_i^{(l)} F_j F_i^{(k-l)},  k = -a_ij
//   V_k(i, x) = iota( sum_{l=0}^{k} (-1)^{k-l} kappa_l DP(i,l) x DP(i,k-l) )
//   kappa_l = v^{-l (a_i, c)} v^{d_i ((k-l)(k-l-1)/2 - l(l-1)/2)}
//
// V_k(i, x) vanishes for k > sum_j c_j (-a_ij), c the content of x.

#include "qsh/shuffle.hpp"

namespace qsh {

BMElement t_i_generator(PairingEngine& engine, int i, int j, bool normalized = false);
// x must be supported on contents with no a_i.
BMElement t_i_apply(PairingEngine& engine, int i, const GradedVector& x, bool normalized = false);

GradedVector vanishing_sum(const CartanDatum& datum, int i, const GradedVector& x, int k);
BMElement vanishing_element(PairingEngine& engine, int i, const GradedVector& x, int k, bool normalized = false);

// k(i, c) = sum_j c_j (-a_ij).
int truncation_threshold(const CartanDatum& datum, int i, const Coloring& c);

}  // namespace qsh
