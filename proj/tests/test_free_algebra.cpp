#include <doctest.h>

#include "helpers.hpp"
#include "qsh/free_algebra.hpp"
#include "qsh/qnumbers.hpp"

using namespace qsh;
using testing::V;

namespace {
GradedVector w(std::initializer_list<int> letters) { return word_vector(Word(letters)); }
}  // namespace

TEST_CASE("concatenation") {
  CHECK(concat_mul(w({0}), w({1})) == w({0, 1}));
  CHECK(concat_mul(w({0}) + w({1}), w({0})) == w({0, 0}) + w({1, 0}));
  CHECK(concat_mul(unit_vector(), w({1, 0})) == w({1, 0}));
}

TEST_CASE("twisted coproduct") {
  const CartanDatum a2 = CartanDatum::named("A2");
  CHECK(coproduct_r(a2, w({0})) == tensor(w({0}), unit_vector()) + tensor(unit_vector(), w({0})));
  CHECK(coproduct_r(a2, unit_vector()) == tensor(unit_vector(), unit_vector()));
  const TensorVector want = tensor(w({0, 1}), unit_vector()) + V(-1) * tensor(w({1}), w({0})) +
                            tensor(w({0}), w({1})) + tensor(unit_vector(), w({0, 1}));
  CHECK(coproduct_r(a2, w({0, 1})) == want);
  // r is multiplicative for the twisted product on the tensor square
  const CartanDatum b2 = CartanDatum::named("B2");
  CHECK(coproduct_r(b2, w({0, 1, 1})) ==
        twisted_mul(b2, coproduct_r(b2, w({0, 1})), coproduct_r(b2, w({1}))));
}

TEST_CASE("divided powers and Serre elements") {
  const CartanDatum a2 = CartanDatum::named("A2");
  CHECK(divided_power_word(a2, 0, 0) == unit_vector());
  CHECK(divided_power_word(a2, 1, 1) == w({1}));
  const Scalar two(sym_int(2, LaurentPoly::v(1)));
  CHECK(divided_power_word(a2, 0, 2) == two.inverse() * w({0, 0}));
  const CartanDatum b2 = CartanDatum::named("B2");
  CHECK(divided_power_word(b2, 0, 2) == Scalar(sym_int(2, LaurentPoly::v(2))).inverse() * w({0, 0}));

  // l = 0 term first: DP(i,0) w[j] DP(i,1)
  CHECK(serre_element(CartanDatum::named("A1xA1"), 0, 1) == w({1, 0}) - w({0, 1}));
  const GradedVector dp = divided_power_word(a2, 0, 2);
  CHECK(serre_element(a2, 0, 1) == concat_mul(dp, w({1})) - w({0, 1, 0}) + concat_mul(w({1}), dp));
  CHECK(homogeneous_content(a2, serre_element(a2, 0, 1)) == Coloring({2, 1}));
  CHECK(homogeneous_content(b2, serre_element(b2, 1, 0)) == Coloring({1, 3}));
  CHECK_THROWS(homogeneous_content(a2, w({0}) + w({1})));
}

TEST_CASE("splits and shuffles enumerate all positions") {
  const CartanDatum a2 = CartanDatum::named("A2");
  int splits = 0;
  for_each_split(a2, Word{0, 1, 0}, [&](const Word&, const Word&, int) { ++splits; });
  CHECK(splits == 8);
  int shuffles = 0;
  for_each_shuffle(a2, Word{0, 1}, Word{1}, [&](const Word&, int) { ++shuffles; });
  CHECK(shuffles == 3);
}
