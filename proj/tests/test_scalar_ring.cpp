#include <doctest.h>

#include "helpers.hpp"
#include "qsh/qnumbers.hpp"

using namespace qsh;
using testing::P;
using testing::V;

TEST_CASE("polynomial arithmetic") {
  CHECK((LaurentPoly(1L) + P(1)) * (LaurentPoly(1L) - P(1)) == LaurentPoly(1L) - P(2));
  // q_a = q^{d_a} with q = v^2
  CHECK(P(2).pow(2) == P(4));
  const LaurentPoly s = LaurentPoly::var(1), s_inv = LaurentPoly::var(1, -1);
  CHECK((s * s_inv).is_one());
  CHECK(s.inverse() == s_inv);
  CHECK_THROWS_AS((LaurentPoly(1L) + s).inverse(), NonInvertibleError);
}

TEST_CASE("gcd and exact division") {
  const LaurentPoly a = (LaurentPoly(1L) + P(1)) * (LaurentPoly(1L) - P(1));
  const LaurentPoly b = (LaurentPoly(1L) + P(1)) * (LaurentPoly(2L) + P(1));
  CHECK(gcd(a, b) == LaurentPoly(1L) + P(1));
  CHECK(divide_exact(a, LaurentPoly(1L) - P(1)) == std::optional<LaurentPoly>(LaurentPoly(1L) + P(1)));
  CHECK_FALSE(divide_exact(a, LaurentPoly(2L) + P(1)).has_value());
  // units are absorbed: gcd is shifted to exponent zero
  CHECK(gcd(P(-3) * a, P(5) * a) == gcd(a, a));
}

TEST_CASE("fraction normal form") {
  CHECK(Scalar(LaurentPoly(1L) - P(4), LaurentPoly(1L) - P(2)) == Scalar(LaurentPoly(1L) + P(2)));
  const Scalar x = Scalar(1L) / (Scalar(1L) - V(-2));
  CHECK(x.num() == P(2));
  CHECK(x.den() == P(2) - LaurentPoly(1L));
  CHECK((x * (Scalar(1L) - V(-2))).is_one());
  const Scalar z(LaurentPoly(), LaurentPoly(1L) + P(3));
  CHECK(z.is_zero());
  CHECK(z.den().is_one());
  CHECK_THROWS(Scalar(LaurentPoly(1L), LaurentPoly()));
  CHECK_THROWS_AS(Scalar().inverse(), NonInvertibleError);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const LaurentPoly a = testing::random_poly(rng), b = testing::random_poly(rng), c = testing::random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    if (b.is_zero() || c.is_zero()) continue;
    const Scalar x(a, b), y(c, b * b), w(b, c);
    CHECK((x + w) * y == x * y + w * y);
    CHECK(x * w.inverse() == x / w);
    CHECK((w * w.inverse()).is_one());
    CHECK(x - x == Scalar());
    // a/b * b = a
    CHECK(x * Scalar(b) == Scalar(a));
  }
}

TEST_CASE("quantum numbers") {
  CHECK(asym_int(3, P(1)) == LaurentPoly(1L) + P(1) + P(2));
  CHECK(sym_int(2, P(1)) == P(1) + P(-1));
  CHECK(asym_int(3, P(-2)) == P(-2) * sym_int(3, P(1)));
  CHECK(sym_factorial(3, P(1)) == sym_int(2, P(1)) * sym_int(3, P(1)));
  CHECK(sym_binomial(4, 2, P(1)) * sym_factorial(2, P(1)) * sym_factorial(2, P(1)) == sym_factorial(4, P(1)));
  CHECK(sym_int(0, P(1)).is_zero());
  CHECK(sym_factorial(0, P(1)).is_one());
  // [k]_x (x - x^-1) = x^k - x^-k
  for (int k = 1; k < 7; ++k) CHECK(sym_int(k, P(2)) * (P(2) - P(-2)) == brace(k, P(2)));
}

TEST_CASE("scalar serialization") {
  const SymbolTable symbols{2, 2};
  CHECK(symbols.slot(1, 1) == 1);
  CHECK(symbols.slot(2, 1) == 3);
  CHECK(symbols.name(symbols.slot(2, 2)) == "s(2,2)");
  const Scalar x = Scalar(LaurentPoly::var(symbols.slot(1, 2), -1) - P(3), LaurentPoly(1L) - P(-2));
  CHECK(scalar_from_json(to_json(x, symbols)) == x);
  CHECK(to_string(Scalar(P(2) + LaurentPoly(1L)), symbols) == "q + 1");
  CHECK(to_string(Scalar(P(1)), symbols) == "v");
}
