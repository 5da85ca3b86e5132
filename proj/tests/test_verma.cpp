#include <doctest.h>

#include "helpers.hpp"
#include "qsh/qnumbers.hpp"
#include "qsh/verma.hpp"

using namespace qsh;
using testing::S;
using testing::V;

namespace {
std::shared_ptr<PairingEngine> engine(const char* name) {
  return std::make_shared<PairingEngine>(CartanDatum::named(name));
}
TensorElement basis(std::vector<Word> key) { return TensorElement(FoldKey(std::move(key))); }
}  // namespace

TEST_CASE("K eigenvalues") {
  const VermaModule a1 = VermaModule::with_punctures(engine("A1"), 1);
  CHECK(a1.k_eigenvalue(0, FoldKey{Word{}}) == S(1, 1, 1, -1));
  const VermaModule a2 = VermaModule::with_punctures(engine("A2"), 1);
  CHECK(a2.k_eigenvalue(0, FoldKey{Word{0, 1}}) == S(2, 1, 1, -1) * V(-1));
  // one F_a lowers the eigenvalue by v^{-(a,a)}
  const VermaModule b2 = VermaModule::with_punctures(engine("B2"), 1);
  CHECK(b2.k_eigenvalue(0, FoldKey{Word{0, 1}}) == b2.k_eigenvalue(0, FoldKey{Word{1}}) * V(-4));
}

TEST_CASE("action on the vacuum") {
  const VermaModule m = VermaModule::with_punctures(engine("A2"), 1);
  const TensorElement v0 = m.vacuum();
  CHECK(v0 == basis({Word{}}));
  for (int a = 0; a < 2; ++a) {
    CHECK(m.act_F(a, 1, v0) == basis({Word{a}}));
    const Scalar two(sym_int(2, LaurentPoly::v(1)));
    CHECK(m.act_F(a, 1, m.act_F(a, 1, v0)) == two * m.act_F(a, 2, v0));
    CHECK(m.act_E(a, m.act_F(a, 1, v0)) == (S(2, 1, a + 1, -1) - S(2, 1, a + 1)) * v0);
    CHECK(m.act_E(a, m.act_F(1 - a, 1, v0)).is_zero());
    CHECK(m.act_E(a, v0).is_zero());
  }
}

TEST_CASE("two folds") {
  const VermaModule m = VermaModule::with_punctures(engine("A2"), 2);
  const TensorElement v0 = m.vacuum();
  CHECK(v0 == basis({Word{}, Word{}}));
  for (int a = 0; a < 2; ++a)
    CHECK(m.act_F(a, 1, v0) == basis({Word{a}, Word{}}) + S(2, 1, a + 1) * basis({Word{}, Word{a}}));
}

TEST_CASE("split equivariance and associativity") {
  auto e = engine("A1");
  const VermaModule m2 = VermaModule::with_punctures(e, 2);
  const SplitModule sm(m2, 1);
  for (const auto& key : {FoldKey{Word{}, Word{}}, FoldKey{Word{0}, Word{}}, FoldKey{Word{}, Word{0}}}) {
    const TensorElement x = m2.from_words(key);
    CHECK(split(m2.act_F(0, 2, x), 1) == sm.act_F(0, 2, split(x, 1)));
    CHECK(split(m2.act_E(0, x), 1) == sm.act_E(0, split(x, 1)));
    CHECK(unsplit(split(x, 1)) == x);
  }
  const VermaModule m3 = VermaModule::with_punctures(engine("A2"), 3);
  const TensorElement x = m3.act_F(0, 1, m3.act_F(1, 2, m3.vacuum()));
  // split at 1 then at 1 again equals split at 2 then at 1
  std::map<std::tuple<Word, Word, Word>, Scalar> left, right;
  for (const auto& [k, c] : split(x, 1)) {
    REQUIRE(k.first.size() == 1);
    for (const auto& [kk, cc] : split(TensorElement(k.second, c), 1))
      left[{k.first[0], kk.first[0], kk.second[0]}] = cc;
  }
  for (const auto& [k, c] : split(x, 2)) {
    REQUIRE(k.second.size() == 1);
    for (const auto& [kk, cc] : split(TensorElement(k.first, c), 1))
      right[{kk.first[0], kk.second[0], k.second[0]}] = cc;
  }
  CHECK(left == right);
  CHECK(left.size() == x.size());
}

TEST_CASE("closed E agrees with commuting E through words") {
  const VermaModule m = VermaModule::with_punctures(engine("B2"), 1);
  PairingEngine& e = m.engine();
  for (const Word& w : {Word{0, 1, 0}, Word{1, 1, 0}, Word{0, 0, 1, 1}, Word{1, 0, 1}})
    for (int a = 0; a < 2; ++a)
      CHECK(m.fold_E(a, 1, iota(e, word_vector(w), true)) ==
            iota(e, m.act_E_by_decomposition(a, 1, word_vector(w)), true));
}

TEST_CASE("dual side") {
  const CartanDatum a2 = CartanDatum::named("A2");
  const VermaModule m = VermaModule::with_punctures(engine("A2"), 1);
  CHECK(intersection_pair(bm_basis(Word{0, 1}), bm_basis(Word{0, 1})).is_one());
  CHECK(intersection_pair(bm_basis(Word{0, 1}), bm_basis(Word{1, 0})).is_zero());
  // E^[1] is the transpose of F^(1)
  for (const Coloring& c : colorings_up_to(2, 2, true))
    for (const Word& u : enumerate_words(c))
      for (int a = 0; a < 2; ++a) {
        const BMElement f = m.fold_F(a, 1, bm_basis(u));
        for (const Word& w : enumerate_words(c + Coloring::root(2, a)))
          CHECK(act_E_dual(a2, a, 1, bm_basis(w)).coefficient(u) == f.coefficient(w));
      }
}
