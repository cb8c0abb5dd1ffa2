#include "mqtlab/report.hpp"

#include "mqtlab/errors.hpp"
#include "mqtlab/root_system.hpp"
#include "mqtlab/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mqtlab::mqt {

namespace {

constexpr std::array kReferences = {
    ReferenceValue{"anomalous_moment_calc", "0.001159611317", "1e-9", 5},
    ReferenceValue{"qft_second_order_gap", "6.6057e-10", "1e-3", 5},
    ReferenceValue{"psi", "1.0015156511", "1e-8", 6},
    ReferenceValue{"position_2N", "7.08432804709e37", "1e-6", 7},
    ReferenceValue{"h_over_c2", "7.37250327e-51", "1e-8", 8},
    ReferenceValue{"electron_period_s", "8.09355159e-21", "1e-8", 8},
    ReferenceValue{"universe_age_s", "5.73373745e17", "1e-8", 9},
    ReferenceValue{"universe_age_years", "1.818e10", "1e-3", 0},
    ReferenceValue{"newton_lhs", "2.06019465385e-40", "1e-8", 10},
    ReferenceValue{"newton_rhs", "2.06016657202e-40", "1e-8", 10},
    ReferenceValue{"newton_ratio", "1.00001363085", "1e-8", 10},
    ReferenceValue{"g2_dynkin_index", "28", "0", 1},
    ReferenceValue{"g2_cos2_a", "25/28", "0", 1},
    ReferenceValue{"nucleon_form_ratio", "224/9", "0", 1},
    ReferenceValue{"neutron_lag", "0.386181207486", "1e-9", 11},
    ReferenceValue{"neutron_mass_kg", "1.67488836e-27", "1e-5", 11},
    ReferenceValue{"proton_lag", "0.38676658329", "1e-9", 12},
    ReferenceValue{"proton_mass_kg", "1.672744e-27", "1e-5", 12},
    ReferenceValue{"muon_lag", "2.8066887241", "1e-9", 13},
    ReferenceValue{"muon_mass_GeV", "0.105931407278", "1e-8", 13},
    ReferenceValue{"tau_lag", "2.80744603698", "1e-9", 14},
    ReferenceValue{"tau_mass_GeV", "1.82146", "1e-5", 14},
};

BigReal reference_number(std::string_view literal) {
  if (is_decimal_literal(literal)) return parse_decimal(literal);
  return from_exact(parse_exact(literal));
}

template <class F>
BigReal step(const char* quantity, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw DomainError(std::string(quantity) + ": " + e.what());
  }
}

std::optional<BigReal> parse_optional(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_decimal(text);
}

std::string optional_text(const std::optional<BigReal>& x) { return x ? to_decimal(*x) : std::string(); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  out.push_back(std::move(field));
  return out;
}

std::string short_number(const std::optional<BigReal>& x, unsigned digits) {
  return x ? to_decimal(*x, digits) : std::string("-");
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::PAPER: return "PAPER";
    case Provenance::TRIVIAL: return "TRIVIAL";
    case Provenance::DERIVED: return "DERIVED";
  }
  return "?";
}

std::optional<Provenance> parse_provenance(std::string_view text) {
  for (auto p : {Provenance::PAPER, Provenance::TRIVIAL, Provenance::DERIVED})
    if (to_string(p) == text) return p;
  return std::nullopt;
}

std::span<const ReferenceValue> reference_values() { return kReferences; }

const ReferenceValue* find_reference(std::string_view quantity) {
  const auto it = std::find_if(kReferences.begin(), kReferences.end(),
                               [&](const ReferenceValue& r) { return r.quantity == quantity; });
  return it == kReferences.end() ? nullptr : &*it;
}

std::string to_string(PsiSource s) { return s == PsiSource::measured ? "measured" : "calculated"; }

std::string to_string(ProtonPsiPlacement p) {
  return p == ProtonPsiPlacement::duality ? "duality" : "printed";
}

const ReportRow& MqtReport::row(std::string_view quantity) const {
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.quantity == quantity; });
  if (it == rows.end()) throw std::out_of_range("no report row named " + std::string(quantity));
  return *it;
}

MqtReport run_full_chain(const ConstantsProfile& profile, const ChainOptions& options) {
  if (options.precision < kMinPrecision)
    throw DomainError("chain precision must be at least " + std::to_string(kMinPrecision) + " digits");
  PrecisionScope scope(options.precision);

  MqtReport report{profile.name, options.precision, kVersion, {}};
  const auto add = [&](std::string quantity, const BigReal& value, Provenance provenance,
                       std::optional<BigReal> measured = std::nullopt) {
    ReportRow row{std::move(quantity), value, std::nullopt, std::move(measured), std::nullopt, std::nullopt,
                  provenance};
    if (const auto* ref = find_reference(row.quantity)) row.paper_value = reference_number(ref->literal);
    if (row.paper_value) row.rel_err_paper = relative_error(row.computed, *row.paper_value);
    if (row.measured_value) row.rel_err_measured = relative_error(row.computed, *row.measured_value);
    report.rows.push_back(std::move(row));
  };

  // Electron sector.
  const BigReal alpha_prime = profile.alpha_prime.value();
  const BigReal alpha = step("alpha", [&] { return alpha_from_prime(alpha_prime); });
  add("alpha", alpha, Provenance::TRIVIAL);
  add("inverse_alpha", 1 / alpha, Provenance::DERIVED);

  const BigReal p_calc = step("anomalous_moment_calc", [&] { return anomalous_moment(alpha_prime); });
  add("anomalous_moment_calc", p_calc, Provenance::PAPER, profile.p_measured.value());
  // The expansion variable alpha'' is evaluated as alpha'/pi, which is how the
  // published gap was obtained.
  add("qft_second_order_gap", qft_second_order_gap(alpha_prime / pi()), Provenance::PAPER);

  const BigReal p_ref = options.psi_source == PsiSource::measured ? profile.p_measured.value() : p_calc;
  const BigReal psi_value = step("psi", [&] { return psi(alpha_prime, p_ref); });
  add("psi", psi_value, Provenance::PAPER);

  const BigReal two_n = step("position_2N", [&] { return solve_position(alpha); });
  add("position_2N", two_n, Provenance::PAPER);

  const ElectronPeriod period = electron_period(profile);
  add("h_over_c2", period.h_over_c2, Provenance::PAPER);
  add("electron_period_s", period.period, Provenance::PAPER);

  const UniverseAge age = universe_age(two_n, period.period);
  add("universe_age_s", age.seconds, Provenance::PAPER);
  add("universe_age_years", age.years, Provenance::PAPER);

  // Newton cross-check, fed with the position 2N.
  const BigReal lhs = step("newton_lhs", [&] { return newton_lhs(alpha, two_n); });
  const BigReal rhs = step("newton_rhs", [&] { return newton_rhs(profile, psi_value, alpha_prime); });
  add("newton_lhs", lhs, Provenance::PAPER);
  add("newton_rhs", rhs, Provenance::PAPER);
  add("newton_ratio", lhs / rhs, Provenance::PAPER);
  add("G_solved", step("G_solved", [&] { return solve_G(profile, alpha, psi_value, alpha_prime, two_n); }),
      Provenance::DERIVED, profile.G_measured.value());

  // G2 geometry.
  const auto g2 = liecore::build_root_system(liecore::RootSystemName::G2);
  const auto angle = liecore::embedding_angle_cos(g2, g2.highest_root());
  const ExactScalar form_ratio = nucleon_form_ratio();
  add("g2_dynkin_index", from_exact(liecore::dynkin_index_principal(g2)), Provenance::PAPER);
  add("g2_cos2_a", from_exact(angle.cos2), Provenance::PAPER);
  add("g2_cos_a", angle.cos, Provenance::DERIVED);
  add("nucleon_form_ratio", from_exact(form_ratio), Provenance::PAPER);

  // Nucleons.
  const BigReal t_n = step("neutron_lag", [&] { return nucleon_lag(angle.cos, alpha, form_ratio); });
  add("neutron_lag", t_n, Provenance::PAPER);
  add("neutron_mass_kg", step("neutron_mass_kg", [&] { return nucleon_mass(t_n, profile, alpha_prime, alpha); }),
      Provenance::PAPER, profile.m_n_measured.value());
  const BigReal t_p = step("proton_lag", [&] { return nucleon_lag(angle.cos, alpha, form_ratio, psi_value); });
  add("proton_lag", t_p, Provenance::PAPER);
  add("proton_mass_kg",
      step("proton_mass_kg",
           [&] { return nucleon_mass(t_p, profile, alpha_prime, alpha, psi_value, options.proton_placement); }),
      Provenance::PAPER, profile.m_p_measured.value());

  // Leptons.
  const BigReal t_mu = step("muon_lag", [&] { return lepton_lag(alpha); });
  add("muon_lag", t_mu, Provenance::PAPER);
  add("muon_mass_GeV", step("muon_mass_GeV", [&] { return lepton_mass(t_mu, profile, Lepton::mu); }),
      Provenance::PAPER, profile.m_mu_measured.value());
  const BigReal t_tau = step("tau_lag", [&] { return lepton_lag(alpha, psi_value); });
  add("tau_lag", t_tau, Provenance::PAPER);
  add("tau_mass_GeV", step("tau_mass_GeV", [&] { return lepton_mass(t_tau, profile, Lepton::tau, psi_value); }),
      Provenance::PAPER, profile.m_tau_measured.value());

  return report;
}

std::string to_json(const MqtReport& report) {
  nlohmann::ordered_json j;
  j["meta"] = {{"profile", report.profile}, {"precision", report.precision}, {"version", report.version}};
  j["rows"] = nlohmann::ordered_json::array();
  const auto optional_json = [](const std::optional<BigReal>& x) -> nlohmann::ordered_json {
    if (!x) return nullptr;
    return to_decimal(*x);
  };
  for (const auto& row : report.rows) {
    j["rows"].push_back({{"quantity", row.quantity},
                         {"computed", to_decimal(row.computed)},
                         {"paper_value", optional_json(row.paper_value)},
                         {"measured_value", optional_json(row.measured_value)},
                         {"rel_err_paper", optional_json(row.rel_err_paper)},
                         {"rel_err_measured", optional_json(row.rel_err_measured)},
                         {"provenance", to_string(row.provenance)}});
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const MqtReport& report) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& row : report.rows) {
    out << row.quantity << ',' << to_decimal(row.computed) << ',' << optional_text(row.paper_value) << ','
        << optional_text(row.measured_value) << ',' << optional_text(row.rel_err_paper) << ','
        << optional_text(row.rel_err_measured) << ',' << to_string(row.provenance) << '\n';
  }
  return out.str();
}

std::string to_table(const MqtReport& report) {
  std::ostringstream out;
  out << "profile " << report.profile << ", " << report.precision << " digits, mqtlab " << report.version << "\n\n";
  out << std::left << std::setw(24) << "quantity" << std::setw(26) << "computed" << std::setw(26) << "paper"
      << std::setw(12) << "rel_err" << std::setw(26) << "measured" << std::setw(12) << "rel_err" << "provenance\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(24) << row.quantity << std::setw(26) << to_decimal(row.computed, 16)
        << std::setw(26) << short_number(row.paper_value, 12) << std::setw(12) << short_number(row.rel_err_paper, 2)
        << std::setw(26) << short_number(row.measured_value, 12) << std::setw(12)
        << short_number(row.rel_err_measured, 2) << to_string(row.provenance) << '\n';
  }
  return out.str();
}

MqtReport parse_json_report(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  MqtReport report;
  report.profile = j.at("meta").at("profile").get<std::string>();
  report.precision = j.at("meta").at("precision").get<unsigned>();
  report.version = j.at("meta").at("version").get<std::string>();
  PrecisionScope scope(report.precision);
  const auto optional_value = [](const nlohmann::json& x) -> std::optional<BigReal> {
    if (x.is_null()) return std::nullopt;
    return parse_decimal(x.get<std::string>());
  };
  for (const auto& r : j.at("rows")) {
    const auto provenance = parse_provenance(r.at("provenance").get<std::string>());
    if (!provenance) throw DomainError("unknown provenance tag in report");
    report.rows.push_back({r.at("quantity").get<std::string>(), parse_decimal(r.at("computed").get<std::string>()),
                           optional_value(r.at("paper_value")), optional_value(r.at("measured_value")),
                           optional_value(r.at("rel_err_paper")), optional_value(r.at("rel_err_measured")),
                           *provenance});
  }
  return report;
}

MqtReport parse_csv_report(std::string_view text, std::string profile, unsigned precision) {
  MqtReport report{std::move(profile), precision, kVersion, {}};
  PrecisionScope scope(precision);
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw DomainError("CSV report lacks the expected header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw DomainError("CSV report row with " + std::to_string(f.size()) + " fields");
    const auto provenance = parse_provenance(f[6]);
    if (!provenance) throw DomainError("unknown provenance tag in report");
    report.rows.push_back({f[0], parse_decimal(f[1]), parse_optional(f[2]), parse_optional(f[3]),
                           parse_optional(f[4]), parse_optional(f[5]), *provenance});
  }
  return report;
}

}  // namespace mqtlab::mqt
