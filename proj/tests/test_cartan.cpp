#include <doctest.h>

#include "qsh/cartan.hpp"

using namespace qsh;

TEST_CASE("named data and the inner product") {
  const CartanDatum a2 = CartanDatum::named("A2");
  CHECK(a2.inner(0, 0) == 2);
  CHECK(a2.inner(0, 1) == -1);
  CHECK(a2.inner(Coloring({1, 1}), Coloring({1, 0})) == 1);
  const CartanDatum g2 = CartanDatum::named("G2");
  CHECK(g2.matrix() == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
  CHECK(g2.inner(0, 1) == -3);
  CHECK(g2.inner(1, 1) == 6);
  const CartanDatum b2 = CartanDatum::named("B2");
  CHECK(b2.matrix() == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
  CHECK(b2.symmetrizer() == std::vector<int>{2, 1});
  CHECK(b2.serre_degree(1, 0) == 3);
  CHECK(CartanDatum::named("A1xA1").inner(0, 1) == 0);
  CHECK(CartanDatum::named("A3").rank() == 3);
  for (const char* n : {"A1", "A2", "B2", "C2", "G2", "A3", "B3", "D4", "E6"})
    CHECK(CartanDatum::named(n).positive_definite());
}

TEST_CASE("datum validation") {
  CHECK_NOTHROW(CartanDatum({{2, -1}, {-1, 2}}, {1, 1}));
  CHECK_NOTHROW(CartanDatum({{2, -3}, {-1, 2}}, {1, 3}));
  CHECK_THROWS_AS(CartanDatum({{2, 1}, {1, 2}}, {1, 1}), DatumError);
  CHECK_FALSE(datum_violations({{2, -3}, {-1, 2}}, {1, 1}).empty());
  CHECK_FALSE(datum_violations({{2, -1}, {0, 2}}, {1, 1}).empty());
  CHECK_THROWS_AS(CartanDatum::named("Q7"), std::invalid_argument);
  CHECK_THROWS(CartanDatum::named("A2").check_index(2));
}

TEST_CASE("words of a coloring") {
  CHECK(enumerate_words(Coloring({1, 1})) == std::vector<Word>{Word{0, 1}, Word{1, 0}});
  CHECK(enumerate_words(Coloring({2, 0})) == std::vector<Word>{Word{0, 0}});
  CHECK(word_count(Coloring({2, 1})) == 3);
  CHECK(word_count(Coloring({2, 2, 1})) == 30);
  CHECK(enumerate_words(Coloring({0, 0})) == std::vector<Word>{Word{}});
  CHECK_THROWS_AS(enumerate_words(Coloring({5, 4}), 8), SizeBoundError);
  CHECK(Word::parse("1,2,1") == Word{0, 1, 0});
  CHECK(Word{0, 1, 0}.to_string() == "1,2,1");
  CHECK(Coloring::parse("2,1", 2) == Coloring({2, 1}));
  CHECK_THROWS(Coloring::parse("2,1,1", 2));
  CHECK(Coloring({1, 0}) <= Coloring({1, 2}));
  CHECK_FALSE(Coloring({2, 0}) <= Coloring({1, 2}));
  const auto cs = colorings_up_to(2, 2, true);
  CHECK(cs.size() == 6);
  CHECK(cs.front() == Coloring({0, 0}));
}
