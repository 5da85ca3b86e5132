#include "qsh/bilinear_form.hpp"

#include <algorithm>
#include <map>

#include "qsh/qnumbers.hpp"

namespace qsh {

namespace {

std::string memo_key(const Word& w, const Word& u) { return w.bytes() + '\xff' + u.bytes(); }

bool same_content(const Word& w, const Word& u) {
  if (w.size() != u.size()) return false;
  std::string a = w.bytes(), b = u.bytes();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

LaurentPoly PairingEngine::normalizer(const Coloring& c) const {
  LaurentPoly out(1L);
  for (int i = 0; i < c.rank(); ++i) {
    const LaurentPoly f = LaurentPoly(1L) - LaurentPoly::v(-2 * datum_.d(i));
    for (int k = 0; k < c[i]; ++k) out *= f;
  }
  return out;
}

LaurentPoly PairingEngine::pair_normalized(const Word& w, const Word& u) {
  if (!same_content(w, u)) return {};
  if (u.empty()) return LaurentPoly(1L);
  const std::string key = memo_key(w, u);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const int b = u[0];
  const Word rest = u.sub(1);
  LaurentPoly out;
  int e = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == b) out += pair_normalized(w.erase(p), rest).times(Monomial::var(0, e));
    e += datum_.inner(w[p], b);
  }
  memo_.emplace(key, out);
  return out;
}

LaurentPoly PairingEngine::pair_normalized_mirror(const Word& w, const Word& u) {
  if (!same_content(w, u)) return {};
  if (w.empty()) return LaurentPoly(1L);
  const std::string key = memo_key(w, u);
  if (auto it = memo_mirror_.find(key); it != memo_mirror_.end()) return it->second;
  const int b = w[w.size() - 1];
  const Word rest = w.sub(0, w.size() - 1);
  LaurentPoly out;
  int e = 0;
  for (std::size_t p = u.size(); p-- > 0;) {
    if (u[p] == b) out += pair_normalized_mirror(rest, u.erase(p)).times(Monomial::var(0, e));
    e += datum_.inner(b, u[p]);
  }
  memo_mirror_.emplace(key, out);
  return out;
}

Scalar PairingEngine::pair(const Word& w, const Word& u) {
  LaurentPoly p = pair_normalized(w, u);
  if (p.is_zero()) return {};
  return Scalar(std::move(p), normalizer(Coloring::content(w, datum_.rank())));
}

Scalar PairingEngine::pair_mirror(const Word& w, const Word& u) {
  LaurentPoly p = pair_normalized_mirror(w, u);
  if (p.is_zero()) return {};
  return Scalar(std::move(p), normalizer(Coloring::content(w, datum_.rank())));
}

Scalar PairingEngine::pair(const GradedVector& x, const GradedVector& y) {
  // Group by content so each normalizer division happens once.
  std::map<Coloring, Scalar> sums;
  for (const auto& [w, a] : x)
    for (const auto& [u, b] : y) {
      LaurentPoly p = pair_normalized(w, u);
      if (p.is_zero()) continue;
      sums[Coloring::content(w, datum_.rank())] += a * b * Scalar(std::move(p));
    }
  Scalar out;
  for (const auto& [c, s] : sums) out += s / Scalar(normalizer(c));
  return out;
}

Scalar PairingEngine::pair_tensor(const TensorVector& x, const TensorVector& y) {
  Scalar out;
  for (const auto& [kx, a] : x)
    for (const auto& [ky, b] : y) {
      if (!same_content(kx.first, ky.first) || !same_content(kx.second, ky.second)) continue;
      out += a * b * pair(kx.first, ky.first) * pair(kx.second, ky.second);
    }
  return out;
}

PolyMatrix PairingEngine::gram_normalized(const Coloring& c) {
  const auto words = enumerate_words(c, max_weight_);
  PolyMatrix m(words.size(), words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      m(i, j) = pair_normalized(words[i], words[j]);
      m(j, i) = m(i, j);
    }
  return m;
}

ScalarMatrix PairingEngine::gram(const Coloring& c) {
  const PolyMatrix p = gram_normalized(c);
  const Scalar inv = Scalar(LaurentPoly(1L), normalizer(c));
  ScalarMatrix m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero()) m(i, j) = Scalar(p(i, j)) * inv;
  return m;
}

std::size_t PairingEngine::radical_rank(const Coloring& c) { return rank(gram_normalized(c)); }

std::size_t serre_ideal_rank(const CartanDatum& datum, const Coloring& c, int max_weight) {
  const int rank_l = datum.rank();
  const auto words = enumerate_words(c, max_weight);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], k);

  RowEchelon echelon(words.size());
  for (int i = 0; i < rank_l; ++i)
    for (int j = 0; j < rank_l; ++j) {
      if (i == j) continue;
      const int k = datum.serre_degree(i, j);
      const Coloring cs = Coloring::root(rank_l, i, k) + Coloring::root(rank_l, j);
      if (!(cs <= c)) continue;
      std::vector<std::pair<Word, LaurentPoly>> serre;
      const LaurentPoly x = LaurentPoly::v(datum.d(i));
      for (int l = 0; l <= k; ++l) {
        LaurentPoly coef = sym_binomial(k, l, x);
        if (l % 2) coef = -coef;
        serre.emplace_back(repeat_letter(i, l) + Word{j} + repeat_letter(i, k - l), coef);
      }
      const Coloring rest = c - cs;
      // every split of the remaining content between the left and right factor
      for (const Coloring& left : colorings_up_to(rank_l, rest.total(), true)) {
        if (!(left <= rest)) continue;
        const auto lw = enumerate_words(left, max_weight);
        const auto rw = enumerate_words(rest - left, max_weight);
        for (const Word& a : lw)
          for (const Word& b : rw) {
            std::vector<LaurentPoly> row(words.size());
            for (const auto& [s, coef] : serre) row[index.at(a + s + b)] += coef;
            if (echelon.rank() == words.size()) return echelon.rank();
            echelon.insert(std::move(row));
          }
      }
    }
  return echelon.rank();
}

}  // namespace qsh
