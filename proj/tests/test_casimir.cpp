#include "mqtlab/casimir.hpp"
#include "mqtlab/errors.hpp"

#include <doctest.h>

using namespace mqtlab;
using namespace mqtlab::liecore;
using namespace mqtlab::qsymbols;

TEST_CASE("sl2 Casimir values") {
  CHECK(casimir_sl2(0) == 0);
  CHECK(casimir_sl2(1) == 3);
  CHECK(casimir_sl2(2) == 8);
  CHECK_THROWS_AS(casimir_sl2(-1), DomainError);
}

TEST_CASE("general Casimir agrees with sl2 on A1 for N = 0..50") {
  const auto a1 = build_root_system(RootSystemName::A1);
  const RootVector omega = a1.simple_roots()[0] * ExactScalar(1, 2);
  for (int n = 0; n <= 50; ++n) {
    CAPTURE(n);
    CHECK(casimir_general(a1, omega * ExactScalar(n)) == casimir_sl2(n));
  }
}

TEST_CASE("adjoint Casimir is 4 h_dual") {
  const std::pair<RootSystemName, int> dual_coxeter[] = {{RootSystemName::A1, 2}, {RootSystemName::A2, 3},
                                                         {RootSystemName::G2, 4}, {RootSystemName::D4, 6},
                                                         {RootSystemName::F4, 9}, {RootSystemName::E6, 12}};
  for (const auto& [name, h] : dual_coxeter) {
    CAPTURE(to_string(name));
    const auto rs = build_root_system(name);
    CHECK(casimir_general(rs, rs.highest_root()) == 4 * h);
  }
}

TEST_CASE("non-dominant weights are rejected") {
  const auto g2 = build_root_system(RootSystemName::G2);
  CHECK_THROWS_AS(casimir_general(g2, -g2.highest_root()), DomainError);
  CHECK_THROWS_AS(casimir_general(g2, RootVector(2)), DimensionError);
  CHECK(!is_dominant(g2, g2.simple_roots()[0]));
  CHECK(is_dominant(g2, g2.highest_root()));
}

TEST_CASE("polarised Casimir on spin 1/2 x spin 1/2") {
  const auto a1 = build_root_system(RootSystemName::A1);
  const RootVector omega = a1.simple_roots()[0] * ExactScalar(1, 2);
  CHECK(casimir_polarization(a1, omega, omega, RootVector(2)) == -3);
  CHECK(casimir_polarization(a1, omega, omega, omega * ExactScalar(2)) == 1);
}
