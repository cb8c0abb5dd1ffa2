#include "mqtlab/errors.hpp"
#include "mqtlab/root_system.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace mqtlab;
using namespace mqtlab::liecore;

namespace {

std::set<std::string> as_set(std::span<const RootVector> roots) {
  std::set<std::string> out;
  for (const auto& r : roots) out.insert(to_string(r));
  return out;
}

// Brute-force lattice enumeration: vectors with entries in {0, +-1/2, +-1}
// that are all integral or all half-integral, with the requested norms.
std::set<std::string> lattice_roots(std::size_t dim, bool allow_half, std::set<ExactScalar> norms) {
  const std::vector<ExactScalar> values = {-1, ExactScalar(-1, 2), 0, ExactScalar(1, 2), 1};
  std::set<std::string> out;
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    RootVector v(dim);
    bool any_half = false, all_half = true;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = values[idx[i]];
      const bool half = v[i].get_den() == 2;
      any_half = any_half || half;
      all_half = all_half && half;
    }
    const bool shape = any_half ? (allow_half && all_half) : true;
    if (shape && norms.count(inner(v, v))) out.insert(to_string(v));
    std::size_t k = 0;
    while (k < dim && ++idx[k] == values.size()) idx[k++] = 0;
    if (k == dim) break;
  }
  return out;
}

// E8 roots lying in the span of rs's simple roots.
std::set<std::string> e8_roots_in_span(const RootSystem& rs, std::size_t dim) {
  const std::vector<ExactScalar> values = {-1, ExactScalar(-1, 2), 0, ExactScalar(1, 2), 1};
  const ExactMatrix ginv = rs.gram().inverse();
  std::set<std::string> out;
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    RootVector v(dim);
    bool any_half = false, all_half = true;
    int minus = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = values[idx[i]];
      const bool half = v[i].get_den() == 2;
      any_half = any_half || half;
      all_half = all_half && half;
      minus += v[i] < 0 ? 1 : 0;
    }
    // E8 roots: integral of norm 2, or all half-integral with an even number of minus signs.
    const bool e8 = inner(v, v) == 2 && (!any_half || (all_half && minus % 2 == 0));
    if (e8) {
      RootVector pairings(rs.rank());
      for (std::size_t i = 0; i < rs.rank(); ++i) pairings[i] = inner(rs.simple_roots()[i], v);
      const RootVector c = ginv * pairings;
      if (rs.combine(c.coords()) == v) out.insert(to_string(v));
    }
    std::size_t k = 0;
    while (k < dim && ++idx[k] == values.size()) idx[k++] = 0;
    if (k == dim) break;
  }
  return out;
}

}  // namespace

TEST_CASE("root counts per system") {
  const std::pair<RootSystemName, std::size_t> expected[] = {
      {RootSystemName::A1, 2}, {RootSystemName::A1xA1, 4}, {RootSystemName::A2, 6}, {RootSystemName::G2, 12},
      {RootSystemName::D4, 24}, {RootSystemName::F4, 48}, {RootSystemName::E6, 72}};
  for (const auto& [name, count] : expected) {
    CAPTURE(to_string(name));
    const auto rs = build_root_system(name);
    CHECK(rs.all_roots().size() == count);
    CHECK(rs.positive_roots().size() == count / 2);
    CHECK(as_set(rs.all_roots()).size() == count);
  }
}

TEST_CASE("D4 and F4 match brute-force lattice enumeration") {
  const auto d4 = build_root_system(RootSystemName::D4);
  CHECK(as_set(d4.all_roots()) == lattice_roots(4, false, {2}));
  const auto f4 = build_root_system(RootSystemName::F4);
  CHECK(as_set(f4.all_roots()) == lattice_roots(4, true, {1, 2}));
}

TEST_CASE("E6 is the part of E8 in its span") {
  const auto e6 = build_root_system(RootSystemName::E6);
  CHECK(as_set(e6.all_roots()) == e8_roots_in_span(e6, 8));
}

TEST_CASE("root system closure and integrality properties") {
  for (auto name : kAllRootSystems) {
    CAPTURE(to_string(name));
    const auto rs = build_root_system(name);
    const auto all = as_set(rs.all_roots());
    for (const auto& a : rs.all_roots()) {
      CHECK(all.count(to_string(-a)) == 1);
      for (const auto& b : rs.all_roots()) {
        const ExactScalar n = coroot_pairing(b, a);
        REQUIRE(n.get_den() == 1);
        CHECK(all.count(to_string(b - n * a)) == 1);
      }
    }
    // Long roots have norm 2.
    ExactScalar longest = 0;
    for (const auto& a : rs.all_roots()) longest = std::max(longest, inner(a, a));
    CHECK(longest == 2);
    // Positive roots have nonnegative simple coefficients; in irreducible
    // systems the highest root dominates all of them.
    for (std::size_t i = 0; i < rs.positive_roots().size(); ++i)
      for (int c : rs.simple_coefficients(i)) CHECK(c >= 0);
    if (name == RootSystemName::A1xA1) continue;
    const auto top = rs.simple_coefficients(rs.positive_roots().size() - 1);
    for (std::size_t i = 0; i < rs.positive_roots().size(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j) CHECK(rs.simple_coefficients(i)[j] <= top[j]);
  }
}

TEST_CASE("Cartan matrices are realised") {
  for (auto name : kAllRootSystems) {
    const auto rs = build_root_system(name);
    CHECK(std::vector<int>(rs.cartan_matrix().begin(), rs.cartan_matrix().end()) == reference_cartan_matrix(name));
  }
}

TEST_CASE("G2 geometry") {
  const auto g2 = build_root_system(RootSystemName::G2);
  CHECK(to_string(g2.simple_roots()[0]) == "(-1/3, 2/3, -1/3)");
  CHECK(to_string(g2.simple_roots()[1]) == "(1, -1, 0)");
  CHECK(to_string(g2.highest_root()) == "(1, 0, -1)");
  CHECK(inner(g2.simple_roots()[0], g2.simple_roots()[0]) == ExactScalar(2, 3));

  const RootVector f = principal_sl2_vector(g2);
  CHECK(to_string(f) == "(4, 2, -6)");
  const int f_coeffs[] = {18, 10};
  CHECK(g2.combine(f_coeffs) == f);
  CHECK(inner(f, f) == 56);

  const int rho[] = {5, 3};
  CHECK(weyl_vector(g2) == g2.combine(rho));
  CHECK(dynkin_index_principal(g2) == 28);

  const auto angle = embedding_angle_cos(g2, g2.highest_root());
  CHECK(angle.cos2 == ExactScalar(25, 28));
  const auto dual = dual_embedding_norm(g2);
  CHECK(dual.norm == ExactScalar(56, 3));
  CHECK(dual.factor == ExactScalar(1, 3));
  CHECK_THROWS_AS(dual_embedding_norm(build_root_system(RootSystemName::A2)), DomainError);
}

TEST_CASE("principal vector equals the sum of positive coroots") {
  for (auto name : kAllRootSystems) {
    CAPTURE(to_string(name));
    const auto rs = build_root_system(name);
    RootVector sum(rs.ambient_dim());
    for (const auto& a : rs.positive_roots()) sum += coroot(a);
    const RootVector f = principal_sl2_vector(rs);
    CHECK(f == sum);
    for (const auto& a : rs.simple_roots()) CHECK(inner(a, f) == 2);
  }
}

TEST_CASE("Dynkin indices of the principal embedding") {
  // (f, f) / 2 = sum of squared coroot heights; classical values.
  CHECK(dynkin_index_principal(build_root_system(RootSystemName::A1)) == 1);
  CHECK(dynkin_index_principal(build_root_system(RootSystemName::A2)) == 4);
  CHECK(dynkin_index_principal(build_root_system(RootSystemName::D4)) == 28);
  CHECK(dynkin_index_principal(build_root_system(RootSystemName::F4)) == 156);
  CHECK(dynkin_index_principal(build_root_system(RootSystemName::E6)) == 156);
}

TEST_CASE("names parse case-insensitively") {
  CHECK(parse_root_system_name("g2") == RootSystemName::G2);
  CHECK(parse_root_system_name("a1xa1") == RootSystemName::A1xA1);
  CHECK(!parse_root_system_name("B3"));
  CHECK_THROWS_AS(coroot(RootVector(3)), DomainError);
}
