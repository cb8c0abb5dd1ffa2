#include "mqtlab/oracle.hpp"
#include "mqtlab/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

using namespace mqtlab;
using namespace mqtlab::mqt;

TEST_CASE("report rows and provenance") {
  const auto report = run_full_chain(paper_profile());
  CHECK(report.rows.size() >= 18);
  CHECK(report.profile == "paper");
  CHECK(report.precision == 60);
  std::set<std::string> names;
  for (const auto& row : report.rows) names.insert(row.quantity);
  CHECK(names.size() == report.rows.size());
  for (const auto& ref : reference_values()) {
    CAPTURE(ref.quantity);
    const auto& row = report.row(ref.quantity);
    CHECK(row.paper_value.has_value());
    CHECK(row.rel_err_paper.has_value());
  }
  CHECK(report.row("alpha").provenance == Provenance::TRIVIAL);
  CHECK(report.row("G_solved").provenance == Provenance::DERIVED);
  CHECK(report.row("G_solved").measured_value.has_value());
  CHECK_THROWS_AS((void)report.row("nope"), std::out_of_range);
}

TEST_CASE("reports are deterministic") {
  const auto a = run_full_chain(paper_profile());
  const auto b = run_full_chain(paper_profile());
  CHECK(a == b);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("JSON and CSV round trip to identical reports") {
  for (unsigned precision : {50u, 60u, 80u}) {
    CAPTURE(precision);
    const auto report = run_full_chain(codata_profile(), {precision});
    CHECK(parse_json_report(to_json(report)) == report);
    CHECK(parse_csv_report(to_csv(report), report.profile, precision) == report);
  }
}

TEST_CASE("JSON schema is stable") {
  const auto j = nlohmann::json::parse(to_json(run_full_chain(paper_profile())));
  CHECK(j.at("meta").size() == 3);
  CHECK(j.at("meta").contains("profile"));
  CHECK(j.at("meta").contains("precision"));
  CHECK(j.at("meta").contains("version"));
  for (const auto& row : j.at("rows")) {
    CHECK(row.size() == 7);
    CHECK(row.at("computed").is_string());
    for (const char* key : {"quantity", "paper_value", "measured_value", "rel_err_paper", "rel_err_measured",
                            "provenance"})
      CHECK(row.contains(key));
  }
}

TEST_CASE("CSV layout") {
  const std::string csv = to_csv(run_full_chain(paper_profile()));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kCsvHeader);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(rows >= 18);
  CHECK_THROWS(parse_csv_report("bad header\n", "x", 60));
}

TEST_CASE("oracle study rows") {
  const auto rows = oracle_study(paper_profile());
  PrecisionScope scope(60);
  const auto get = [&](std::string_view q) -> const OracleRow& {
    return *std::find_if(rows.begin(), rows.end(), [&](const OracleRow& r) { return r.quantity == q; });
  };
  CHECK(*get("psi_from_profile_p").rel_err < parse_decimal("1e-9"));
  CHECK(*get("psi_from_rounded_p").rel_err > parse_decimal("1e-7"));
  CHECK(*get("psi_from_p_calc").rel_err > parse_decimal("1e-5"));
  CHECK(*get("qft_gap_alpha_prime_over_pi").rel_err < parse_decimal("1e-5"));
  CHECK(*get("qft_gap_alpha_over_pi").rel_err > parse_decimal("1"));
  CHECK(*get("proton_mass_duality").rel_err < parse_decimal("1e-5"));
  CHECK(*get("proton_mass_printed_formula").rel_err > parse_decimal("1e-3"));
  CHECK(*get("neutron_lag_check").rel_err < parse_decimal("1e-9"));
  CHECK(*get("m_e_GeV_em_derived").rel_err > parse_decimal("1e-5"));
  CHECK(abs(get("newton_lhs_printed_exponent").value - parse_decimal("1e-80")) < parse_decimal("1e-88"));
  CHECK(!oracle_table(rows).empty());
}
