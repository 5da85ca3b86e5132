#include <doctest.h>

#include "helpers.hpp"
#include "qsh/braiding.hpp"

using namespace qsh;

namespace {
struct Fixture {
  std::shared_ptr<PairingEngine> engine;
  std::shared_ptr<FoldBasis> basis;
  explicit Fixture(const char* name)
      : engine(std::make_shared<PairingEngine>(CartanDatum::named(name))),
        basis(std::make_shared<FoldBasis>(engine)) {}
};

bool is_monomial(const Scalar& s) { return s.num().is_unit() && s.den().is_unit(); }
}  // namespace

TEST_CASE("fold basis") {
  Fixture f("A2");
  CHECK(f.basis->dim(Coloring({1, 1})) == 2);
  CHECK(f.basis->dim(Coloring({2, 1})) == 2);
  const VermaModule m = VermaModule::with_punctures(f.engine, 2);
  const TensorElement x = m.act_F(0, 1, m.act_F(1, 1, m.act_F(0, 1, m.vacuum())));
  CHECK(f.basis->from_basis(m, f.basis->to_basis(x)) == x);
}

TEST_CASE("A1 braiding blocks") {
  Fixture f("A1");
  Braiding b(f.basis, f.engine, 1, 2, 2);
  REQUIRE(b.solved());
  for (const BlockReport& r : b.reports()) CHECK(r.status == "unique");
  const ScalarMatrix zero = b.block_matrix(Coloring({0}));
  CHECK(zero.rows() == 1);
  CHECK(zero(0, 0).is_one());
  const ScalarMatrix one = b.block_matrix(Coloring({1}));
  CHECK(one.rows() == 2);
  const auto dets = b.block_determinants();
  CHECK(is_monomial(dets.at(Coloring({1}))));
  CHECK_FALSE(dets.at(Coloring({2})).is_zero());
  CHECK(b.check_equivariance());
}

TEST_CASE("braid relations") {
  for (const char* name : {"A1", "A2"}) {
    CHECK(ybe_check(CartanDatum::named(name), 2).pass);
    CHECK(ybe_check(CartanDatum::named(name), 0).pass);
  }
  CHECK(ybe_check(CartanDatum::named("A1"), 2, Triangular::upper).pass);
  Fixture f("A1");
  BraidRepresentation rep(f.engine, {1, 1, 1, 1}, 1);
  for (const auto& [t, ok] : rep.compare(parse_braid_word("1,3"), parse_braid_word("3,1"))) CHECK(ok);
  const auto id = rep.matrix(parse_braid_word("2,-2"));
  for (const auto& [key, col] : id) CHECK(col == TensorElement(key));
  CHECK(id.size() == rep.basis_tuples().size());
}

TEST_CASE("braid words") {
  const auto w = parse_braid_word("1,2,-1");
  REQUIRE(w.size() == 3);
  CHECK(w[2].index == 1);
  CHECK(w[2].inverse);
  CHECK_FALSE(w[1].inverse);
  CHECK_THROWS(parse_braid_word("1,x"));
  CHECK_THROWS(parse_braid_word("0"));
}
