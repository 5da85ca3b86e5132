#include <doctest.h>

#include "helpers.hpp"
#include "qsh/expr.hpp"
#include "qsh/qnumbers.hpp"

using namespace qsh;
using testing::S;
using testing::V;

TEST_CASE("trees") {
  const ExprPtr e = parse("F(1)*F(2) - q^-1*F(2)*F(1)");
  REQUIRE(e->kind == Expr::Kind::sub);
  CHECK(e->children[0]->kind == Expr::Kind::mul);
  const Expr& rhs = *e->children[1];
  REQUIRE(rhs.kind == Expr::Kind::mul);
  // products associate to the left
  CHECK(rhs.children[0]->kind == Expr::Kind::mul);
  CHECK(rhs.children[0]->children[0]->kind == Expr::Kind::power);
  CHECK(rhs.children[0]->children[0]->exponent == -1);
  const ExprPtr s = parse("serre(1,2)");
  CHECK(s->kind == Expr::Kind::gen);
  CHECK(s->name == "serre");
  CHECK(s->args == std::vector<int>{1, 2});
  CHECK(parse("F(0)")->kind == Expr::Kind::gen);
}

TEST_CASE("printing") {
  CHECK(print(*parse("(F(1)*F(2))*F(1)")) == "F(1)*F(2)*F(1)");
  CHECK(print(*parse("F(1)*(F(2)*F(1))")) == "F(1)*(F(2)*F(1))");
  CHECK(print(*parse("F(1) - (F(2) - F(1))")) == "F(1) - (F(2) - F(1))");
  CHECK(print(*parse("(F(1) - F(2)) - F(1)")) == "F(1) - F(2) - F(1)");
  CHECK(print(*parse("- -F(1)")) == "- -F(1)");
  CHECK(print(*parse("w[1, 2]")) == "w[1,2]");
  CHECK(print(*parse("q^+3")) == "q^3");
  for (const char* t : {"s(1,2)^-1*v", "-(F(1) + F(2))", "E(1,2)", "3*w[1,2] + -2*w[2,1]"}) {
    const ExprPtr e = parse(t);
    CHECK(*parse(print(*e)) == *e);
  }
}

TEST_CASE("errors carry positions") {
  auto at = [](const char* text) -> std::pair<int, int> {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(at("F(1") == std::pair{1, 4});
  CHECK(at("2 $ 3") == std::pair{1, 3});
  CHECK(at("q^x") == std::pair{1, 3});
  CHECK(at("F(1) +\n  @") == std::pair{2, 3});
  CHECK(at("F(1))") == std::pair{1, 5});
  CHECK(at("Kinv(1,2)") == std::pair{1, 9});
}

TEST_CASE("evaluation") {
  const CartanDatum a2 = CartanDatum::named("A2");
  const SymbolTable sym{2, 1};
  CHECK(eval_free(*parse("w[1,2]"), a2, sym) == word_vector(Word{0, 1}));
  CHECK(eval_free(*parse("dp(1,2)*w[2]"), a2, sym) ==
        Scalar(sym_int(2, LaurentPoly::v(1))).inverse() * word_vector(Word{0, 0, 1}));
  CHECK(eval_free(*parse("- -F(1)"), a2, sym) == word_vector(Word{0}));
  CHECK_THROWS_AS(eval_free(*parse("F(0)"), a2, sym), EvalError);
  CHECK_THROWS_AS(eval_free(*parse("F(3)"), a2, sym), EvalError);
  CHECK_THROWS_AS(eval_free(*parse("E(1)"), a2, sym), EvalError);
  CHECK_THROWS_AS(eval_scalar(*parse("s(2,1)"), sym), EvalError);
  CHECK(eval_scalar(*parse("q^-1*s(1,2)^2 - 1"), sym) == V(-2) * S(2, 1, 2, 2) - Scalar(1L));
  PairingEngine e(a2);
  CHECK(eval_shuffle(*parse("serre(1,2)"), e, sym, false).is_zero());
  CHECK(eval_shuffle(*parse("F(1)*F(2)"), e, sym, true) ==
        bm_basis(Word{0, 1}) + V(-1) * bm_basis(Word{1, 0}));

  const VermaModule m = VermaModule::with_punctures(std::make_shared<PairingEngine>(a2), 1);
  CHECK(eval_operator(*parse("E(1)*F(1)"), m, m.vacuum()) == (S(2, 1, 1, -1) - S(2, 1, 1)) * m.vacuum());
  CHECK(eval_operator(*parse("w[1,2]"), m, m.vacuum()) == m.act_F(0, 1, m.act_F(1, 1, m.vacuum())));
  CHECK(eval_operator(*parse("K(1)*Kinv(1) - 1"), m, m.act_F(1, 1, m.vacuum())).is_zero());
}

TEST_CASE("printed polynomials reparse to the same value") {
  std::mt19937 rng(11);
  const SymbolTable sym{2, 1};
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly p = testing::random_poly(rng);
    CHECK(eval_scalar(*parse(to_string(p, sym)), sym) == Scalar(p));
    CHECK(eval_scalar(*parse(to_string(p, sym, false)), sym) == Scalar(p));
  }
}
