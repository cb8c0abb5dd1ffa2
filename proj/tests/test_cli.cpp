#include "cli.hpp"

#include "mqtlab/constants.hpp"
#include "mqtlab/verification.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

using mqtlab::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "mqtlab_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

const std::vector<std::string> kFastSeries = {"--series-n", "1000", "2000"};

}  // namespace

TEST_CASE("roots queries") {
  CHECK(run({"roots", "g2", "principal"}).out == "(4, 2, -6), norm 56\n");
  CHECK(run({"roots", "a1", "weyl-order"}).out == "2\n");
  CHECK(run({"roots", "e6", "weyl-order"}).out == "51840\n");
  CHECK(run({"roots", "F4", "weyl-order", "--enumerate"}).out == "1152\n");
  CHECK(run({"roots", "g2", "highest"}).out == "(1, 0, -1) = 3a1 + 2a2\n");
  CHECK(run({"roots", "g2", "index"}).out == "28\n");
  CHECK(run({"roots", "g2", "simple"}).out == "a1 = (-1/3, 2/3, -1/3)\na2 = (1, -1, 0)\n");
  const auto j = nlohmann::json::parse(run({"roots", "g2", "principal", "--format", "json"}).out);
  CHECK(j.at("cos2_highest") == "25/28");
  CHECK(j.at("cos_highest").get<std::string>().rfind("9.44911182523068068036291340585", 0) == 0);
}

TEST_CASE("exit code 2 for usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"roots", "b7", "simple"}).code == 2);
  CHECK(run({"roots", "g2", "everything"}).code == 2);
  CHECK(run({"mqt", "run", "--precision", "49"}).code == 2);
  CHECK(run({"mqt", "run", "--format", "xml"}).code == 2);
  CHECK(run({"mqt", "run", "--profile", "/nonexistent/profile.txt"}).code == 2);
  CHECK(run({"verify", "--profile", "/nonexistent/profile.txt"}).code == 2);
  CHECK(run({"series", "--n", "2000000000"}).code == 2);
  CHECK(run({"series", "--variant", "bogus", "--n", "10"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("exit code 0 for help, version and manual") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
  const auto man = run({"man"});
  CHECK(man.code == 0);
  for (const char* section : {"mqtlab roots", "mqtlab mqt run", "mqtlab verify", "mqtlab series",
                              "mqtlab constants export", "Exit codes"})
    CHECK(man.out.find(section) != std::string::npos);
}

TEST_CASE("bad profile file names the offending key") {
  const auto path = temp_dir() / "bad.txt";
  {
    std::ofstream out(path);
    out << mqtlab::mqt::serialize_profile(mqtlab::mqt::paper_profile()) << "speed_of_dark = 1\n";
  }
  const auto r = run({"mqt", "run", "--profile", path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("speed_of_dark") != std::string::npos);
}

TEST_CASE("mqt run formats") {
  const auto csv = run({"mqt", "run", "--format", "csv"});
  CHECK(csv.code == 0);
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "quantity,computed,paper,measured,rel_err_paper,rel_err_measured,provenance");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows >= 18);

  const auto j = nlohmann::json::parse(run({"mqt", "run", "--format", "json"}).out);
  CHECK(j.at("meta").at("profile") == "paper");
  CHECK(j.at("meta").at("precision") == 60);

  const auto path = temp_dir() / "report.json";
  CHECK(run({"mqt", "run", "--format", "json", "--out", path.string()}).code == 0);
  std::ifstream file(path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  CHECK(nlohmann::json::parse(buffer.str()) == j);
}

TEST_CASE("50 and 80 digit runs share 40 significant digits") {
  const auto low = nlohmann::json::parse(run({"mqt", "run", "--format", "json", "--precision", "50"}).out);
  const auto high = nlohmann::json::parse(run({"mqt", "run", "--format", "json", "--precision", "80"}).out);
  REQUIRE(low.at("rows").size() == high.at("rows").size());
  for (std::size_t i = 0; i < low.at("rows").size(); ++i) {
    const auto a = low["rows"][i]["computed"].get<std::string>();
    const auto b = high["rows"][i]["computed"].get<std::string>();
    CAPTURE(low["rows"][i]["quantity"]);
    // Scientific notation: sign, leading digit, '.', then 39 more digits.
    CHECK(a.substr(0, 41) == b.substr(0, 41));
  }
}

TEST_CASE("verify exit code follows the check results") {
  auto args = std::vector<std::string>{"verify", "--order-only"};
  args.insert(args.end(), kFastSeries.begin(), kFastSeries.end());
  const auto r = run(args);
  mqtlab::VerifyOptions options;
  options.weyl_order_only = true;
  options.series_ns = {1000, 2000};
  const bool passed = mqtlab::verify_all(mqtlab::mqt::paper_profile(), options).passed();
  CHECK(r.code == (passed ? 0 : 1));
  CHECK(r.out.find("PASS  [ 1]") != std::string::npos);
}

TEST_CASE("verify fails with exit 1 when alpha' is perturbed by 1%") {
  auto profile = mqtlab::mqt::paper_profile();
  profile.alpha_prime = mqtlab::mqt::DecimalConstant("0.0011730239122511");
  const auto path = temp_dir() / "perturbed.txt";
  {
    std::ofstream out(path);
    out << mqtlab::mqt::serialize_profile(profile);
  }
  auto args = std::vector<std::string>{"verify", "--order-only", "--format", "json", "--profile", path.string()};
  args.insert(args.end(), kFastSeries.begin(), kFastSeries.end());
  const auto r = run(args);
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  std::set<std::string> failing;
  for (const auto& c : j.at("checks"))
    if (!c.at("pass").get<bool>()) failing.insert(c.at("name").get<std::string>());
  for (const char* q : {"position_2N", "neutron_mass_kg", "proton_mass_kg", "muon_mass_GeV", "tau_mass_GeV"})
    CHECK(failing.count(q) == 1);
}

TEST_CASE("series study command") {
  const auto r = run({"series", "--variant", "plain", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5.773502691896257645091487805020e-01") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"series", "--n", "1000", "--n", "4000", "--format", "json"}).out);
  CHECK(j.at("rows").size() == 8);
  CHECK(j.at("summaries").size() == 4);
}

TEST_CASE("constants export feeds back into mqt run") {
  const auto path = temp_dir() / "codata.txt";
  CHECK(run({"constants", "export", "--profile", "codata", "--out", path.string()}).code == 0);
  const auto a = run({"mqt", "run", "--profile", path.string(), "--format", "csv"});
  const auto b = run({"mqt", "run", "--profile", "codata", "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"constants", "list"}).out == "paper\ncodata\n");
  CHECK(run({"constants", "show"}).out.find("alpha_prime = 0.00116140981411") != std::string::npos);
}

TEST_CASE("oracle command") {
  const auto r = run({"mqt", "oracle", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("rows").size() >= 10);
}
