#include "qsh/braid_symmetries.hpp"

#include <map>

namespace qsh {

BMElement t_i_generator(PairingEngine& engine, int i, int j, bool normalized) {
  const CartanDatum& datum = engine.datum();
  datum.check_index(i);
  datum.check_index(j);
  if (i == j) throw std::domain_error("T_i(F_i) is outside the restricted domain");
  const int k = -datum.a(i, j);
  GradedVector sum;
  const GradedVector wj = word_vector(Word{j});
  for (int l = 0; l <= k; ++l) {
    GradedVector t = concat_mul(concat_mul(divided_power_word(datum, i, l), wj), divided_power_word(datum, i, k - l));
    t *= Scalar(LaurentPoly::v(datum.d(i) * l));
    if ((k - l) % 2) sum -= t;
    else sum += t;
  }
  return iota(engine, sum, normalized);
}

BMElement t_i_apply(PairingEngine& engine, int i, const GradedVector& x, bool normalized) {
  const CartanDatum& datum = engine.datum();
  datum.check_index(i);
  std::map<int, BMElement> gens;
  BMElement out;
  for (const auto& [w, c] : x) {
    BMElement term = bm_unit();
    for (std::size_t p = 0; p < w.size(); ++p) {
      const int j = w[p];
      if (j == i) throw std::domain_error("T_i is only defined on contents with no a_i");
      auto it = gens.find(j);
      if (it == gens.end()) it = gens.emplace(j, t_i_generator(engine, i, j, normalized)).first;
      term = shuffle_mul(datum, term, it->second);
    }
    out += c * term;
  }
  return out;
}

GradedVector vanishing_sum(const CartanDatum& datum, int i, const GradedVector& x, int k) {
  datum.check_index(i);
  if (k < 0) throw std::domain_error("truncation degree must be nonnegative");
  const Coloring c = x.is_zero() ? Coloring::zero(datum.rank()) : homogeneous_content(datum, x);
  const int d = datum.d(i);
  const int ic = datum.inner(i, c);
  GradedVector out;
  for (int l = 0; l <= k; ++l) {
    const int e = -l * ic + d * ((k - l) * (k - l - 1) / 2 - l * (l - 1) / 2);
    GradedVector t = concat_mul(concat_mul(divided_power_word(datum, i, l), x), divided_power_word(datum, i, k - l));
    t *= Scalar(LaurentPoly::v(e));
    if ((k - l) % 2) out -= t;
    else out += t;
  }
  return out;
}

BMElement vanishing_element(PairingEngine& engine, int i, const GradedVector& x, int k, bool normalized) {
  return iota(engine, vanishing_sum(engine.datum(), i, x, k), normalized);
}

int truncation_threshold(const CartanDatum& datum, int i, const Coloring& c) {
  int k = 0;
  for (int j = 0; j < datum.rank(); ++j)
    if (j != i) k += c[j] * -datum.a(i, j);
  return k;
}

}  // namespace qsh
