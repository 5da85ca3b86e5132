#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qsh/qnumbers.hpp"
#include "qsh/shuffle.hpp"

using namespace qsh;
using testing::base;
using testing::V;

using oracle::naive_shuffle;

TEST_CASE("iota on letters") {
  PairingEngine e(CartanDatum::named("B2"));
  for (int a = 0; a < 2; ++a) {
    CHECK(iota(e, word_vector(Word{a})) == base(e.datum().d(a)) * bm_basis(Word{a}));
    CHECK(iota(e, word_vector(Word{a}), true) == bm_basis(Word{a}));
  }
  CHECK(iota(e, unit_vector()) == bm_unit());
}

TEST_CASE("shuffle product against brute force") {
  for (const char* name : {"A2", "B2", "G2"}) {
    const CartanDatum d = CartanDatum::named(name);
    PairingEngine e(d);
    const BMElement x = iota(e, word_vector(Word{0, 1})), y = iota(e, word_vector(Word{1, 1, 0}));
    CHECK(shuffle_mul(d, x, y) == naive_shuffle(d, x, y));
    CHECK(shuffle_mul(d, bm_unit(), x) == x);
    CHECK(shuffle_mul(d, x, bm_unit()) == x);
    // iota is an algebra map
    CHECK(iota(e, word_vector(Word{0, 1, 1, 1, 0})) == naive_shuffle(d, x, y));
    CHECK(iota(e, word_vector(Word{0, 1})) ==
          shuffle_mul(d, iota(e, word_vector(Word{0})), iota(e, word_vector(Word{1}))));
  }
}

TEST_CASE("Serre vanishing and divided powers") {
  PairingEngine a2(CartanDatum::named("A2"));
  CHECK(iota(a2, serre_element(a2.datum(), 0, 1)).is_zero());
  CHECK(iota(a2, word_vector(Word{0})).coefficient(Word{1}).is_zero());
  for (const char* name : {"A2", "B2", "G2"}) {
    PairingEngine e(CartanDatum::named(name));
    const CartanDatum& d = e.datum();
    for (int a = 0; a < 2; ++a)
      for (int k = 1; k <= 4; ++k) {
        // normalized image of a divided power is a single monomial coordinate
        CHECK(iota(e, divided_power_word(d, a, k), true) ==
              V(d.d(a) * k * (k - 1) / 2) * bm_basis(repeat_letter(a, k)));
        BMElement p = bm_unit();
        for (int j = 0; j < k; ++j) p = naive_shuffle(d, p, iota(e, word_vector(Word{a})));
        CHECK(p == Scalar(sym_factorial(k, LaurentPoly::v(d.d(a)))) * iota(e, divided_power_word(d, a, k)));
      }
  }
}

TEST_CASE("coordinate pairing") {
  const BMElement x = bm_basis(Word{0, 1}) + V(2) * bm_basis(Word{1, 0});
  CHECK(coordinate_pair(x, bm_basis(Word{1, 0})) == V(2));
  CHECK(coordinate_pair(x, bm_basis(Word{0, 0})).is_zero());
}
