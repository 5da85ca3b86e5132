#pragma once

// Lusztig's form on the free algebra, from its three axioms:
//   (w[a], w[b]) = delta_ab / (1 - q_a^-1),
//   (x, y'y'') = (r(x), y' (x) y''),
//   (x'x'', y) = (x' (x) x'', r(y)).
//
// Both recursions are evaluated polynomially.  For words of content c put
// D_c = prod over letters b of (1 - v^{-2 d_b}); then D_c (w,u) is a Laurent
// polynomial P(w,u).  Peeling the first letter b of u (second axiom):
//   P(w, u) = sum_{p : w_p = b} v^{sum_{i<p} (w_i, b)} P(w \ p, u \ 1),
// and peeling the last letter b of w (third axiom):
//   P(w'b, u) = sum_{p : u_p = b} v^{sum_{j>p} (b, u_j)} P(w', u \ p).

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsh/free_algebra.hpp"
#include "qsh/linalg.hpp"

namespace qsh {

// Memo tables are per engine; use one engine per thread.
class PairingEngine {
 public:
  explicit PairingEngine(const CartanDatum& datum, int max_weight = 8)
      : datum_(datum), max_weight_(max_weight) {}

  const CartanDatum& datum() const { return datum_; }
  int max_weight() const { return max_weight_; }

  // D_c for the content of w.
  LaurentPoly normalizer(const Coloring& c) const;

  // P(w,u) by the first-letter recursion and by the last-letter recursion.
  LaurentPoly pair_normalized(const Word& w, const Word& u);
  LaurentPoly pair_normalized_mirror(const Word& w, const Word& u);

  Scalar pair(const Word& w, const Word& u);
  Scalar pair_mirror(const Word& w, const Word& u);
  Scalar pair(const GradedVector& x, const GradedVector& y);
  // Slotwise product of pairings.
  Scalar pair_tensor(const TensorVector& x, const TensorVector& y);

  ScalarMatrix gram(const Coloring& c);
  // D_c * gram(c); same rank, polynomial entries.
  PolyMatrix gram_normalized(const Coloring& c);
  std::size_t radical_rank(const Coloring& c);

 private:
  CartanDatum datum_;
  int max_weight_;
  std::unordered_map<std::string, LaurentPoly> memo_, memo_mirror_;
};

// Rank of span{u s w : s a Serre element, u, w words} inside the words of
// content c.  Serre elements are taken in integral form
//   sum_l (-1)^l binom(k,l)_{v^{d_i}} i^l j i^{k-l}
// (the divided-power form times [k]!), which spans the same space.
std::size_t serre_ideal_rank(const CartanDatum& datum, const Coloring& c, int max_weight = 8);

}  // namespace qsh
