#include "qsh/shuffle.hpp"

#include <map>

namespace qsh {

BMElement iota(PairingEngine& engine, const GradedVector& x, bool normalized) {
  const CartanDatum& datum = engine.datum();
  std::map<Coloring, std::vector<std::pair<Word, Scalar>>> by_content;
  for (const auto& [w, c] : x) by_content[Coloring::content(w, datum.rank())].emplace_back(w, c);

  BMElement out;
  for (const auto& [content, terms] : by_content) {
    const Scalar scale = normalized ? Scalar(1L) : Scalar(LaurentPoly(1L), engine.normalizer(content));
    for (const Word& u : enumerate_words(content, engine.max_weight())) {
      Scalar acc;
      for (const auto& [w, c] : terms) {
        LaurentPoly p = engine.pair_normalized(w, u);
        if (!p.is_zero()) acc += c * Scalar(std::move(p));
      }
      if (!acc.is_zero()) out.add(u, acc * scale);
    }
  }
  return out;
}

BMElement shuffle_mul(const CartanDatum& datum, const BMElement& a, const BMElement& b) {
  BMElement out;
  for (const auto& [u, x] : a)
    for (const auto& [w, y] : b) {
      const Scalar xy = x * y;
      for_each_shuffle(datum, u, w, [&](const Word& merged, int e) {
        out.add(merged, xy * Scalar(LaurentPoly::v(e)));
      });
    }
  return out;
}

bool is_in_radical(PairingEngine& engine, const GradedVector& x) {
  return iota(engine, x, true).is_zero();
}

Scalar coordinate_pair(const BMElement& x, const BMElement& y) {
  Scalar out;
  const BMElement& small = x.size() <= y.size() ? x : y;
  const BMElement& large = x.size() <= y.size() ? y : x;
  for (const auto& [w, a] : small) {
    const Scalar b = large.coefficient(w);
    if (!b.is_zero()) out += a * b;
  }
  return out;
}

}  // namespace qsh
