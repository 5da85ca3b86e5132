#include "qsh/free_algebra.hpp"

#include "qsh/qnumbers.hpp"

namespace qsh {

void for_each_split(const CartanDatum& datum, const Word& w,
                    const std::function<void(const Word&, const Word&, int)>& fn) {
  const int rank = datum.rank();
  std::vector<int> right_content(rank, 0);
  Word left, right;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int exponent) {
    if (pos == w.size()) {
      fn(left, right, exponent);
      return;
    }
    const int letter = w[pos];
    // position goes to S: every earlier position outside S contributes
    int gain = 0;
    for (int b = 0; b < rank; ++b) gain += right_content[b] * datum.inner(b, letter);
    left.push_back(letter);
    rec(pos + 1, exponent + gain);
    left = left.sub(0, left.size() - 1);

    right.push_back(letter);
    ++right_content[letter];
    rec(pos + 1, exponent);
    --right_content[letter];
    right = right.sub(0, right.size() - 1);
  };
  rec(0, 0);
}

void for_each_shuffle(const CartanDatum& datum, const Word& u, const Word& w,
                      const std::function<void(const Word&, int)>& fn) {
  const int rank = datum.rank();
  std::vector<int> placed_w(rank, 0);
  Word merged;
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int exponent) {
    if (i == u.size() && j == w.size()) {
      fn(merged, exponent);
      return;
    }
    if (i < u.size()) {
      const int letter = u[i];
      int gain = 0;
      for (int b = 0; b < rank; ++b) gain += placed_w[b] * datum.inner(b, letter);
      merged.push_back(letter);
      rec(i + 1, j, exponent + gain);
      merged = merged.sub(0, merged.size() - 1);
    }
    if (j < w.size()) {
      const int letter = w[j];
      merged.push_back(letter);
      ++placed_w[letter];
      rec(i, j + 1, exponent);
      --placed_w[letter];
      merged = merged.sub(0, merged.size() - 1);
    }
  };
  rec(0, 0, 0);
}

GradedVector concat_mul(const GradedVector& x, const GradedVector& y) {
  GradedVector out;
  for (const auto& [u, a] : x)
    for (const auto& [w, b] : y) out.add(u + w, a * b);
  return out;
}

TensorVector coproduct_r(const CartanDatum& datum, const GradedVector& x) {
  TensorVector out;
  for (const auto& [w, c] : x) {
    for (std::size_t k = 0; k < w.size(); ++k) datum.check_index(w[k]);
    for_each_split(datum, w, [&](const Word& l, const Word& r, int e) {
      out.add({l, r}, c * Scalar(LaurentPoly::v(e)));
    });
  }
  return out;
}

TensorVector twisted_mul(const CartanDatum& datum, const TensorVector& a, const TensorVector& b) {
  TensorVector out;
  const int rank = datum.rank();
  for (const auto& [ka, ca] : a) {
    const Coloring c2 = Coloring::content(ka.second, rank);
    for (const auto& [kb, cb] : b) {
      const Coloring c1p = Coloring::content(kb.first, rank);
      const int e = datum.inner(c2, c1p);
      out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb * Scalar(LaurentPoly::v(e)));
    }
  }
  return out;
}

TensorVector tensor(const GradedVector& x, const GradedVector& y) {
  TensorVector out;
  for (const auto& [u, a] : x)
    for (const auto& [w, b] : y) out.add({u, w}, a * b);
  return out;
}

GradedVector divided_power_word(const CartanDatum& datum, int i, int k) {
  datum.check_index(i);
  if (k < 0) throw std::domain_error("divided power exponent must be nonnegative");
  const LaurentPoly fact = sym_factorial(k, LaurentPoly::v(datum.d(i)));
  return GradedVector(repeat_letter(i, k), ScalarFraction(LaurentPoly(1L), fact));
}

GradedVector serre_sum(const CartanDatum& datum, int i, int j, int k) {
  datum.check_index(i);
  datum.check_index(j);
  if (i == j) throw std::domain_error("Serre element needs two distinct roots");
  GradedVector out;
  const GradedVector wj = word_vector(Word{j});
  for (int l = 0; l <= k; ++l) {
    GradedVector t = concat_mul(concat_mul(divided_power_word(datum, i, l), wj), divided_power_word(datum, i, k - l));
    if (l % 2) out -= t;
    else out += t;
  }
  return out;
}

GradedVector serre_element(const CartanDatum& datum, int i, int j) {
  datum.check_index(i);
  datum.check_index(j);
  if (i == j) throw std::domain_error("Serre element needs two distinct roots");
  return serre_sum(datum, i, j, datum.serre_degree(i, j));
}

Coloring homogeneous_content(const CartanDatum& datum, const GradedVector& x) {
  if (x.is_zero()) throw std::domain_error("zero element has no content");
  const Coloring c = Coloring::content(x.begin()->first, datum.rank());
  for (const auto& [w, s] : x)
    if (Coloring::content(w, datum.rank()) != c) throw std::domain_error("element is not homogeneous");
  return c;
}

}  // namespace qsh
