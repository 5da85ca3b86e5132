#include <doctest.h>

#include "helpers.hpp"
#include "qsh/braid_symmetries.hpp"

using namespace qsh;
using testing::V;

TEST_CASE("T_i on generators") {
  PairingEngine a1a1(CartanDatum::named("A1xA1"));
  CHECK(t_i_generator(a1a1, 0, 1) == iota(a1a1, word_vector(Word{1})));
  PairingEngine a2(CartanDatum::named("A2"));
  CHECK(t_i_generator(a2, 0, 1) == V(1) * iota(a2, word_vector(Word{0, 1})) - iota(a2, word_vector(Word{1, 0})));
  PairingEngine b2(CartanDatum::named("B2"));
  const BMElement t = t_i_generator(b2, 1, 0, true);
  REQUIRE_FALSE(t.is_zero());
  for (const auto& [w, c] : t) CHECK(Coloring::content(w, 2) == Coloring({1, 2}));
}

TEST_CASE("T_i is multiplicative") {
  PairingEngine a2(CartanDatum::named("A2"));
  const CartanDatum& d = a2.datum();
  CHECK(t_i_apply(a2, 0, unit_vector()) == bm_unit());
  const BMElement t2 = t_i_apply(a2, 0, word_vector(Word{1}));
  CHECK(t_i_apply(a2, 0, word_vector(Word{1, 1})) == shuffle_mul(d, t2, t2));
  CHECK_THROWS(t_i_apply(a2, 0, word_vector(Word{0})));
  PairingEngine g2(CartanDatum::named("G2"));
  const BMElement u = t_i_apply(g2, 1, word_vector(Word{0}), true);
  CHECK(t_i_apply(g2, 1, word_vector(Word{0, 0}), true) == shuffle_mul(g2.datum(), u, u));
}

TEST_CASE("vanishing elements") {
  PairingEngine a2(CartanDatum::named("A2"));
  const GradedVector x = word_vector(Word{1, 1});
  CHECK(vanishing_element(a2, 0, x, 0) == iota(a2, x));
  CHECK(truncation_threshold(a2.datum(), 0, Coloring({0, 2})) == 2);
  CHECK_FALSE(vanishing_element(a2, 0, x, 2).is_zero());
  CHECK(vanishing_element(a2, 0, x, 3).is_zero());
  for (const char* name : {"A2", "B2", "G2"}) {
    PairingEngine e(CartanDatum::named(name));
    for (int i = 0; i < 2; ++i) {
      const int j = 1 - i;
      const int k = e.datum().serre_degree(i, j);
      CHECK(vanishing_element(e, i, word_vector(Word{j}), k).is_zero());
      CHECK_FALSE(vanishing_element(e, i, word_vector(Word{j}), k - 1).is_zero());
    }
  }
}
