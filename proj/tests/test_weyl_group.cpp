#include "mqtlab/errors.hpp"
#include "mqtlab/weyl_group.hpp"

#include <doctest.h>

#include <set>

using namespace mqtlab;
using namespace mqtlab::liecore;

TEST_CASE("Weyl group orders: enumeration and rho orbit agree") {
  const std::pair<RootSystemName, std::size_t> expected[] = {
      {RootSystemName::A1, 2},   {RootSystemName::A1xA1, 4}, {RootSystemName::A2, 6},
      {RootSystemName::G2, 12},  {RootSystemName::D4, 192},  {RootSystemName::F4, 1152},
      {RootSystemName::E6, 51840}};
  for (const auto& [name, order] : expected) {
    CAPTURE(to_string(name));
    const auto rs = build_root_system(name);
    CHECK(weyl_group(rs).order() == order);
    CHECK(weyl_group_order(rs) == order);
  }
}

TEST_CASE("element cap is enforced") {
  const auto e6 = build_root_system(RootSystemName::E6);
  CHECK_THROWS_AS(weyl_group(e6, 1000), ResourceError);
}

TEST_CASE("group axioms on small groups") {
  for (auto name : {RootSystemName::A2, RootSystemName::G2, RootSystemName::D4}) {
    CAPTURE(to_string(name));
    const auto w = weyl_group(build_root_system(name));
    const std::size_t e = w.identity_index();
    for (std::size_t a = 0; a < w.order(); ++a) {
      CHECK(w.compose(a, e) == a);
      CHECK(w.compose(w.inverse(a), a) == e);
    }
    for (std::size_t a = 0; a < w.order(); a += 7)
      for (std::size_t b = 0; b < w.order(); b += 5)
        for (std::size_t c = 0; c < w.order(); c += 11)
          CHECK(w.compose(w.compose(a, b), c) == w.compose(a, w.compose(b, c)));
  }
}

TEST_CASE("every element is orthogonal and permutes the roots") {
  for (auto name : {RootSystemName::A1xA1, RootSystemName::A2, RootSystemName::G2, RootSystemName::F4}) {
    CAPTURE(to_string(name));
    const auto rs = build_root_system(name);
    const auto w = weyl_group(rs);
    std::set<std::string> roots;
    for (const auto& r : rs.all_roots()) roots.insert(to_string(r));
    const std::size_t step = w.order() > 200 ? 13 : 1;
    for (std::size_t k = 0; k < w.order(); k += step) {
      const ExactMatrix m = w.ambient_matrix(rs, k);
      CHECK(m * m.transpose() == ExactMatrix::identity(rs.ambient_dim()));
      std::set<std::string> image;
      for (const auto& r : rs.all_roots()) image.insert(to_string(m * r));
      CHECK(image == roots);
    }
  }
}

TEST_CASE("simple reflections are involutions sending their root to its negative") {
  for (auto name : kAllRootSystems) {
    const auto rs = build_root_system(name);
    const auto w = weyl_group(rs);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const auto s = simple_reflection(rs, i);
      const std::size_t k = w.find(s);
      CHECK(w.compose(k, k) == w.identity_index());
      std::vector<int> e(rs.rank(), 0);
      e[i] = 1;
      auto image = w.act(k, e);
      e[i] = -1;
      CHECK(image == e);
    }
  }
}
