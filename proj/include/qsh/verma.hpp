#pragma once

// Universal Verma modules and their tensor products.
//
// A fold is one Verma module, realized in normalized shuffle coordinates:
// the vacuum is the unit vector at the empty word and F_a^{(k)} acts by
// left shuffle multiplication with iota^(DP(a,k)).  Fold p carries the
// symbols s(p,a); on weight c
//   K_a = s(p,a)^-1 v^{-(a,c)},
//   (E_a m)[w] = s^-1 v^{2 d_a - (a,c)} m[a w] - s m[w a].
// The second formula is the unique operator with E v0 = 0, [E_a, F_b] = 0
// for a != b and [E_a, F_a] = K_a - K_a^-1.
//
// n folds use the iterated coproducts
//   F^{(k)} -> sum_{k_1+..+k_n=k} v^{-d sum_{a<b} k_a k_b}
//              (x)_a K^{-(k_{a+1}+..+k_n)} F^{(k_a)},
//   E -> sum_p 1 (x) .. (x) E (x) K (x) .. (x) K,     K -> K (x) .. (x) K.

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "qsh/scalar_io.hpp"
#include "qsh/shuffle.hpp"

namespace qsh {

struct VermaTag {};
using FoldKey = std::vector<Word>;
using TensorElement = Combination<FoldKey, VermaTag>;

// Puncture symbols s(p, a) for p = 1..punctures.
struct WeightParams {
  int rank = 0;
  int punctures = 1;
  SymbolTable symbols() const { return {rank, punctures}; }
  LaurentPoly s(int p, int a, int power = 1) const;  // p 1-based, a 0-based
};

class VermaModule {
 public:
  // labels[f] is the puncture whose symbols fold f uses (1-based); folds
  // may share a label.
  VermaModule(std::shared_ptr<PairingEngine> engine, std::vector<int> labels);
  static VermaModule with_punctures(std::shared_ptr<PairingEngine> engine, int n);

  const CartanDatum& datum() const { return engine_->datum(); }
  PairingEngine& engine() const { return *engine_; }
  std::shared_ptr<PairingEngine> engine_ptr() const { return engine_; }
  int folds() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int max_label() const;

  TensorElement vacuum() const;
  // Embeds free-algebra elements (one per fold) as iota^(x_1) (x) ... (x) iota^(x_n).
  TensorElement from_words(const std::vector<Word>& words) const;

  // Eigenvalue of K_a^power on a fold with puncture label p and weight c.
  Scalar fold_k(int a, int power, int label, const Coloring& c) const;
  Scalar k_eigenvalue(int a, const FoldKey& key) const;

  // Single-fold operators on normalized coordinates.
  BMElement fold_F(int a, int k, const BMElement& m) const;
  BMElement fold_E(int a, int label, const BMElement& m) const;

  TensorElement act_F(int a, int k, const TensorElement& m) const;
  TensorElement act_E(int a, const TensorElement& m) const;
  TensorElement act_K(int a, int power, const TensorElement& m) const;
  // E^{(k)} = E^k / [k]_{v^{d_a}}!
  TensorElement act_E_divided_power(int a, int k, const TensorElement& m) const;

  // E applied to iota^(x) by commuting it through each word of x (one
  // fold only); returns a free-algebra element whose iota^ is E iota^(x).
  GradedVector act_E_by_decomposition(int a, int label, const GradedVector& x) const;

 private:
  const BMElement& iota_dp(int a, int k) const;
  TensorElement apply_fold(const TensorElement& m, int fold,
                           const std::function<BMElement(const BMElement&, const Coloring&)>& op) const;

  std::shared_ptr<PairingEngine> engine_;
  std::vector<int> labels_;
  mutable std::map<std::pair<int, int>, BMElement> dp_cache_;
};

// The dual-side adjoint of F^{(k)}: deletes k letters a,
//   (E^{[k]} x)[u] = sum over (w, S) with S a k-set of a-positions of w and
//   w|_{not S} = u of v^{d k(k-1)/2 + e(S)} x[w].
BMElement act_E_dual(const CartanDatum& datum, int a, int k, const BMElement& x);
// sum_w x[w] y[w]
Scalar intersection_pair(const BMElement& x, const BMElement& y);

// Regrouping of n folds into (folds 1..N) and (folds N+1..n).
struct SplitTag {};
using SplitKey = std::pair<FoldKey, FoldKey>;
using SplitElement = Combination<SplitKey, SplitTag>;

SplitElement split(const TensorElement& m, int cut);
TensorElement unsplit(const SplitElement& m);

// Two blocks acted on through the two-fold coproduct, each block through its
// own iterated coproduct.
class SplitModule {
 public:
  SplitModule(const VermaModule& whole, int cut);
  SplitElement act_F(int a, int k, const SplitElement& m) const;
  SplitElement act_E(int a, const SplitElement& m) const;
  SplitElement act_K(int a, int power, const SplitElement& m) const;
  const VermaModule& left() const { return left_; }
  const VermaModule& right() const { return right_; }

 private:
  VermaModule left_, right_;
};

}  // namespace qsh
