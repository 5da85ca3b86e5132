#include <doctest.h>

#include "qsh/checks.hpp"

using namespace qsh;

namespace {
std::string failures(const CheckReport& r) {
  std::string s;
  for (const auto& i : r.items)
    if (!i.pass) s += i.name + " " + i.detail + "; ";
  return s;
}
}  // namespace

TEST_CASE("all relations on larger truncations") {
  for (auto [name, m] : {std::pair{"A1", 5}, std::pair{"A2", 5}, std::pair{"B2", 4}}) {
    auto e = std::make_shared<PairingEngine>(CartanDatum::named(name));
    FoldBasis basis(e);
    const VermaModule module = VermaModule::with_punctures(e, 1);
    const CheckReport r = relations_check(module, basis, m);
    CHECK_MESSAGE(r.pass(), std::string(name), ": ", failures(r));
    const CheckReport fr = fundamental_relation_check(module, basis, 4, 2);
    CHECK_MESSAGE(fr.pass(), std::string(name), ": ", failures(fr));
  }
}

TEST_CASE("checks on other data") {
  auto g2 = std::make_shared<PairingEngine>(CartanDatum::named("G2"));
  const CheckReport e = e_decomposition_check(VermaModule::with_punctures(g2, 1), 5);
  CHECK_MESSAGE(e.pass(), failures(e));
  const CheckReport s = split_check(VermaModule::with_punctures(g2, 2), *std::make_unique<FoldBasis>(g2), 1, 3, 2);
  CHECK_MESSAGE(s.pass(), failures(s));
  auto a2 = std::make_shared<PairingEngine>(CartanDatum::named("A2"));
  FoldBasis basis(a2);
  const CheckReport three = split_check(VermaModule::with_punctures(a2, 3), basis, 2, 3, 1);
  CHECK_MESSAGE(three.pass(), failures(three));
  const CheckReport b = braiding_check(CartanDatum::named("A2"), 2, Triangular::upper);
  CHECK_MESSAGE(b.pass(), failures(b));
}

TEST_CASE("reports") {
  CheckReport r;
  CHECK_FALSE(r.pass());
  r.add("a", true);
  CHECK(r.pass());
  CheckReport other;
  other.add("b", false, "why");
  r.merge(other, "x ");
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == 1);
  CHECK(r.items.back().name == "x b");
  CHECK_THROWS(run_criterion(12, ""));
}
