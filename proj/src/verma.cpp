#include "qsh/verma.hpp"

#include <algorithm>

#include "qsh/qnumbers.hpp"

namespace qsh {

namespace {

// All compositions of k into n nonnegative parts.
void for_each_composition(int k, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      parts[i] = left;
      fn(parts);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      parts[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (n > 0) rec(0, k);
}

}  // namespace

LaurentPoly WeightParams::s(int p, int a, int power) const {
  return LaurentPoly::var(symbols().slot(p, a + 1), power);
}

VermaModule::VermaModule(std::shared_ptr<PairingEngine> engine, std::vector<int> labels)
    : engine_(std::move(engine)), labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("a tensor product needs at least one fold");
  const int rank = engine_->datum().rank();
  for (int p : labels_)
    if (p < 1 || 1 + static_cast<std::size_t>(p * rank) > kSlots)
      throw std::out_of_range("puncture label out of range");
}

VermaModule VermaModule::with_punctures(std::shared_ptr<PairingEngine> engine, int n) {
  std::vector<int> labels(n);
  for (int p = 0; p < n; ++p) labels[p] = p + 1;
  return VermaModule(std::move(engine), std::move(labels));
}

int VermaModule::max_label() const { return *std::max_element(labels_.begin(), labels_.end()); }

TensorElement VermaModule::vacuum() const { return TensorElement(FoldKey(labels_.size())); }

TensorElement VermaModule::from_words(const std::vector<Word>& words) const {
  if (words.size() != labels_.size()) throw std::invalid_argument("one word per fold expected");
  TensorElement out(FoldKey{});
  for (const Word& w : words) {
    const BMElement f = iota(*engine_, word_vector(w), true);
    TensorElement next;
    for (const auto& [key, c] : out)
      for (const auto& [u, d] : f) {
        FoldKey k = key;
        k.push_back(u);
        next.add(k, c * d);
      }
    out = std::move(next);
  }
  return out;
}

Scalar VermaModule::fold_k(int a, int power, int label, const Coloring& c) const {
  const WeightParams params{datum().rank(), label};
  const LaurentPoly k = params.s(label, a, -power).times(Monomial::var(0, -power * datum().inner(a, c)));
  return Scalar(k);
}

Scalar VermaModule::k_eigenvalue(int a, const FoldKey& key) const {
  Scalar out(1L);
  for (std::size_t f = 0; f < key.size(); ++f)
    out *= fold_k(a, 1, labels_[f], Coloring::content(key[f], datum().rank()));
  return out;
}

const BMElement& VermaModule::iota_dp(int a, int k) const {
  auto it = dp_cache_.find({a, k});
  if (it == dp_cache_.end())
    it = dp_cache_.emplace(std::make_pair(a, k), iota(*engine_, divided_power_word(datum(), a, k), true)).first;
  return it->second;
}

BMElement VermaModule::fold_F(int a, int k, const BMElement& m) const {
  datum().check_index(a);
  if (k < 0) throw std::domain_error("divided power exponent must be nonnegative");
  if (k == 0) return m;
  return shuffle_mul(datum(), iota_dp(a, k), m);
}

BMElement VermaModule::fold_E(int a, int label, const BMElement& m) const {
  datum().check_index(a);
  const WeightParams params{datum().rank(), label};
  const LaurentPoly s = params.s(label, a), s_inv = params.s(label, a, -1);
  BMElement out;
  for (const auto& [u, c] : m) {
    if (u.empty()) continue;
    const Coloring content = Coloring::content(u, datum().rank());
    if (u[0] == a) {
      const int e = 2 * datum().d(a) - datum().inner(a, content);
      out.add(u.sub(1), c * Scalar(s_inv.times(Monomial::var(0, e))));
    }
    if (u[u.size() - 1] == a) out.add(u.sub(0, u.size() - 1), -(c * Scalar(s)));
  }
  return out;
}

TensorElement VermaModule::apply_fold(
    const TensorElement& m, int fold,
    const std::function<BMElement(const BMElement&, const Coloring&)>& op) const {
  TensorElement out;
  for (const auto& [key, c] : m) {
    const BMElement image = op(bm_basis(key[fold]), Coloring::content(key[fold], datum().rank()));
    for (const auto& [w, d] : image) {
      FoldKey k = key;
      k[fold] = w;
      out.add(k, c * d);
    }
  }
  return out;
}

TensorElement VermaModule::act_K(int a, int power, const TensorElement& m) const {
  datum().check_index(a);
  TensorElement out;
  for (const auto& [key, c] : m) {
    Scalar e(1L);
    for (std::size_t f = 0; f < key.size(); ++f)
      e *= fold_k(a, power, labels_[f], Coloring::content(key[f], datum().rank()));
    out.add(key, c * e);
  }
  return out;
}

TensorElement VermaModule::act_F(int a, int k, const TensorElement& m) const {
  datum().check_index(a);
  if (k < 0) throw std::domain_error("divided power exponent must be nonnegative");
  const int n = folds();
  const int d = datum().d(a);
  TensorElement out;
  for_each_composition(k, n, [&](const std::vector<int>& parts) {
    int cross = 0, later = 0;
    for (int f = n - 1; f >= 0; --f) {
      cross += parts[f] * later;
      later += parts[f];
    }
    TensorElement t = m;
    later = 0;
    for (int f = n - 1; f >= 0; --f) {
      const int kf = parts[f], kinv = later;
      const int label = labels_[f];
      t = apply_fold(t, f, [&](const BMElement& x, const Coloring&) {
        BMElement y = fold_F(a, kf, x);
        if (kinv == 0) return y;
        BMElement z;
        for (const auto& [w, c] : y)
          z.add(w, c * fold_k(a, -kinv, label, Coloring::content(w, datum().rank())));
        return z;
      });
      later += kf;
    }
    out += Scalar(LaurentPoly::v(-d * cross)) * t;
  });
  return out;
}

TensorElement VermaModule::act_E(int a, const TensorElement& m) const {
  datum().check_index(a);
  const int n = folds();
  TensorElement out;
  for (int p = 0; p < n; ++p) {
    TensorElement t = apply_fold(m, p, [&](const BMElement& x, const Coloring&) { return fold_E(a, labels_[p], x); });
    for (int b = p + 1; b < n; ++b) {
      const int label = labels_[b];
      t = apply_fold(t, b, [&](const BMElement& x, const Coloring& c) {
        return fold_k(a, 1, label, c) * x;
      });
    }
    out += t;
  }
  return out;
}

TensorElement VermaModule::act_E_divided_power(int a, int k, const TensorElement& m) const {
  if (k < 0) throw std::domain_error("divided power exponent must be nonnegative");
  TensorElement t = m;
  for (int r = 0; r < k; ++r) t = act_E(a, t);
  return Scalar(LaurentPoly(1L), sym_factorial(k, LaurentPoly::v(datum().d(a)))) * t;
}

GradedVector VermaModule::act_E_by_decomposition(int a, int label, const GradedVector& x) const {
  datum().check_index(a);
  const WeightParams params{datum().rank(), label};
  const LaurentPoly s = params.s(label, a), s_inv = params.s(label, a, -1);
  GradedVector out;
  for (const auto& [u, c] : x) {
    int suffix = 0;  // (a, content of u_{p+1..})
    for (std::size_t p = u.size(); p-- > 0;) {
      if (u[p] == a) {
        // [E, F_a] = K - K^-1 evaluated on the suffix weight
        const LaurentPoly k = s_inv.times(Monomial::var(0, -suffix)) - s.times(Monomial::var(0, suffix));
        out.add(u.erase(p), c * Scalar(k));
      }
      suffix += datum().inner(a, u[p]);
    }
  }
  return out;
}

BMElement act_E_dual(const CartanDatum& datum, int a, int k, const BMElement& x) {
  datum.check_index(a);
  if (k < 0) throw std::domain_error("divided power exponent must be nonnegative");
  const int base = datum.d(a) * k * (k - 1) / 2;
  BMElement out;
  for (const auto& [w, c] : x) {
    // choose k positions carrying a; e(S) collects (w_i, a) for i < j, i kept, j chosen
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t pos, int left, int e) {
      if (left == 0) {
        Word rest;
        std::size_t ci = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (ci < chosen.size() && chosen[ci] == i) {
            ++ci;
            continue;
          }
          rest.push_back(w[i]);
        }
        out.add(rest, c * Scalar(LaurentPoly::v(base + e)));
        return;
      }
      if (pos == w.size()) return;
      if (w[pos] == a) {
        int kept_before = 0;
        std::size_t ci = 0;
        for (std::size_t i = 0; i < pos; ++i) {
          if (ci < chosen.size() && chosen[ci] == i) {
            ++ci;
            continue;
          }
          kept_before += datum.inner(w[i], a);
        }
        chosen.push_back(pos);
        rec(pos + 1, left - 1, e + kept_before);
        chosen.pop_back();
      }
      rec(pos + 1, left, e);
    };
    rec(0, k, 0);
  }
  return out;
}

Scalar intersection_pair(const BMElement& x, const BMElement& y) { return coordinate_pair(x, y); }

SplitElement split(const TensorElement& m, int cut) {
  SplitElement out;
  for (const auto& [key, c] : m) {
    if (cut < 1 || cut >= static_cast<int>(key.size())) throw std::out_of_range("split position out of range");
    out.add({FoldKey(key.begin(), key.begin() + cut), FoldKey(key.begin() + cut, key.end())}, c);
  }
  return out;
}

TensorElement unsplit(const SplitElement& m) {
  TensorElement out;
  for (const auto& [key, c] : m) {
    FoldKey k = key.first;
    k.insert(k.end(), key.second.begin(), key.second.end());
    out.add(k, c);
  }
  return out;
}

namespace {

std::vector<int> slice(const std::vector<int>& v, int from, int to) {
  return std::vector<int>(v.begin() + from, v.begin() + to);
}

using BlockOp = std::function<TensorElement(const TensorElement&)>;

SplitElement apply_blocks(const SplitElement& m, const BlockOp& left, const BlockOp& right) {
  SplitElement out;
  for (const auto& [key, c] : m) {
    const TensorElement l = left(TensorElement(key.first));
    if (l.is_zero()) continue;
    const TensorElement r = right(TensorElement(key.second));
    for (const auto& [kl, cl] : l)
      for (const auto& [kr, cr] : r) out.add({kl, kr}, c * cl * cr);
  }
  return out;
}

}  // namespace

SplitModule::SplitModule(const VermaModule& whole, int cut)
    : left_(whole.engine_ptr(), slice(whole.labels(), 0, std::clamp(cut, 0, whole.folds()))),
      right_(whole.engine_ptr(), slice(whole.labels(), std::clamp(cut, 0, whole.folds()), whole.folds())) {}

SplitElement SplitModule::act_F(int a, int k, const SplitElement& m) const {
  const int d = left_.datum().d(a);
  SplitElement out;
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    // v^{-d ij} K^{-i} F^{(j)} (x) F^{(i)}
    SplitElement t = apply_blocks(
        m,
        [&](const TensorElement& x) {
          TensorElement y = left_.act_F(a, j, x);
          return i == 0 ? y : left_.act_K(a, -i, y);
        },
        [&](const TensorElement& x) { return right_.act_F(a, i, x); });
    out += Scalar(LaurentPoly::v(-d * i * j)) * t;
  }
  return out;
}

SplitElement SplitModule::act_E(int a, const SplitElement& m) const {
  SplitElement out = apply_blocks(
      m, [&](const TensorElement& x) { return left_.act_E(a, x); },
      [&](const TensorElement& x) { return right_.act_K(a, 1, x); });
  out += apply_blocks(
      m, [](const TensorElement& x) { return x; }, [&](const TensorElement& x) { return right_.act_E(a, x); });
  return out;
}

SplitElement SplitModule::act_K(int a, int power, const SplitElement& m) const {
  return apply_blocks(
      m, [&](const TensorElement& x) { return left_.act_K(a, power, x); },
      [&](const TensorElement& x) { return right_.act_K(a, power, x); });
}

}  // namespace qsh
