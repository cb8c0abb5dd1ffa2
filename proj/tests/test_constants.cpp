#include "mqtlab/constants.hpp"
#include "mqtlab/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace mqtlab;
using namespace mqtlab::mqt;

namespace {

std::string key_of(const std::string& text) {
  try {
    parse_profile(text, "t");
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("builtin profiles") {
  CHECK(builtin_profile_names() == std::vector<std::string>{"paper", "codata"});
  CHECK(paper_profile().alpha_prime.literal() == "0.00116140981411");
  CHECK(paper_profile().c.literal() == "299792458");
  CHECK(paper_profile().planck_h.literal() != paper_profile().planck_h_newton.literal());
  CHECK(paper_profile().m_e_kg.literal() != paper_profile().m_e_kg_nucleon.literal());
  CHECK(codata_profile().planck_h.literal() == "6.62607015e-34");
  CHECK(!builtin_profile("nope"));
}

TEST_CASE("serialize and parse round trip") {
  for (const auto& name : builtin_profile_names()) {
    const auto p = *builtin_profile(name);
    CHECK(parse_profile(serialize_profile(p), "other") == p);
  }
}

TEST_CASE("profile parse errors name the key") {
  const std::string good = serialize_profile(paper_profile());
  CHECK(key_of(good) == "<none>");
  CHECK(key_of(good + "bogus = 1\n") == "bogus");
  CHECK(key_of(good + "c = 3e8\n") == "c");

  std::string missing = good;
  const auto pos = missing.find("G_measured");
  missing.erase(pos, missing.find('\n', pos) - pos + 1);
  CHECK(key_of(missing) == "G_measured");

  std::string negative = good;
  const auto at = negative.find("alpha_prime = ") + 14;
  negative.insert(at, "-");
  CHECK(key_of(negative) == "alpha_prime");

  std::string garbage = good;
  const auto h = garbage.find("planck_h = ") + 11;
  garbage.replace(h, 1, "x");
  CHECK(key_of(garbage) == "planck_h");
}

TEST_CASE("name defaults and comments") {
  std::string text = "# comment only\n\n" + serialize_profile(paper_profile());
  const auto name_line = text.find("name = paper\n");
  text.erase(name_line, 13);
  CHECK(parse_profile(text, "from_file").name == "from_file");
}

TEST_CASE("profile files") {
  const auto dir = std::filesystem::temp_directory_path() / "mqtlab_constants_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "mine.txt";
  {
    std::ofstream out(path);
    out << serialize_profile(codata_profile());
  }
  CHECK(resolve_profile(path.string()) == codata_profile());
  CHECK(resolve_profile("paper") == paper_profile());
  CHECK_THROWS_AS(resolve_profile((dir / "absent.txt").string()), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("decimal constants reject bad literals") {
  CHECK_THROWS_AS(DecimalConstant("0"), DomainError);
  CHECK_THROWS_AS(DecimalConstant("-1"), DomainError);
  CHECK_THROWS_AS(DecimalConstant("1e"), DomainError);
  CHECK(DecimalConstant("6.67e-11").literal() == "6.67e-11");
}
