#include "mqtlab/oracle.hpp"

#include "mqtlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace mqtlab::mqt {

namespace {

BigReal published(std::string_view quantity) { return parse_decimal(find_reference(quantity)->literal); }

}  // namespace

std::vector<OracleRow> oracle_study(const ConstantsProfile& profile, unsigned precision) {
  const MqtReport report = run_full_chain(profile, {precision, PsiSource::measured, ProtonPsiPlacement::duality});
  PrecisionScope scope(precision);

  std::vector<OracleRow> rows;
  const auto add = [&](std::string quantity, const BigReal& value, std::optional<BigReal> reference,
                       std::string note) {
    std::optional<BigReal> err;
    if (reference) err = relative_error(value, *reference);
    rows.push_back({std::move(quantity), value, std::move(reference), std::move(err), std::move(note)});
  };
  const auto computed = [&](std::string_view q) { return report.row(q).computed; };

  const BigReal alpha_prime = profile.alpha_prime.value();
  const BigReal alpha = computed("alpha");
  const BigReal psi_paper = published("psi");

  add("psi_from_p_calc", alpha_prime / computed("anomalous_moment_calc"), psi_paper,
      "psi with the second-order moment instead of the measured one");
  add("psi_from_rounded_p", alpha_prime / parse_decimal(kRoundedMeasuredMoment), psi_paper,
      "psi with the measured moment rounded to 7 digits");
  add("psi_from_profile_p", computed("psi"), psi_paper, "psi with the profile p_measured");

  const BigReal gap_paper = published("qft_second_order_gap");
  add("qft_gap_alpha_over_pi", qft_second_order_gap(alpha / pi()), gap_paper, "expansion variable alpha/pi");
  add("qft_gap_alpha_prime_over_pi", qft_second_order_gap(alpha_prime / pi()), gap_paper,
      "expansion variable alpha'/pi");

  add("m_e_implied_by_period", computed("h_over_c2") / published("electron_period_s"), profile.m_e_kg.value(),
      "electron mass that reproduces the published period");
  add("age_from_published_period", computed("position_2N") * published("electron_period_s"),
      published("universe_age_s"), "2N times the published period");

  // rhs scales as psi^-2.
  add("psi_implied_by_newton_rhs", computed("psi") * sqrt(computed("newton_rhs") / published("newton_rhs")),
      psi_paper, "psi that reproduces the published Newton right-hand side");
  add("newton_lhs_printed_exponent", computed("newton_lhs") / parse_decimal("2.06019465385e40"), std::nullopt,
      "computed lhs over the value as printed with exponent +40");

  // Proton lag scales as sqrt(psi^2 - alpha^2).
  const BigReal psi_chain = computed("psi");
  const BigReal lag_scale = computed("proton_lag") / sqrt(psi_chain * psi_chain - alpha * alpha);
  const BigReal lag_ratio = published("proton_lag") / lag_scale;
  add("psi_implied_by_proton_lag", sqrt(lag_ratio * lag_ratio + alpha * alpha), psi_paper,
      "psi that reproduces the published proton lag");
  add("psi_implied_by_tau_lag", alpha * cosh(2 * published("tau_lag")), psi_paper,
      "psi that reproduces the published tau lag");
  add("inverse_alpha_implied_by_muon_lag", cosh(2 * published("muon_lag")), computed("inverse_alpha"),
      "1/alpha that reproduces the published muon lag");

  add("m_e_GeV_em_derived", derived_em_mass_GeV(profile), profile.m_e_GeV_em.value(),
      "m_e c^2 / alpha' against the literal electromagnetic mass");

  add("neutron_over_measured", computed("neutron_mass_kg") / profile.m_n_measured.value(), BigReal(1),
      "computed neutron mass over the measured one");

  const ExactScalar form_ratio = nucleon_form_ratio();
  const BigReal printed =
      nucleon_mass(computed("proton_lag"), profile, alpha_prime, alpha, psi_chain, ProtonPsiPlacement::printed_formula);
  add("proton_mass_printed_formula", printed, published("proton_mass_kg"), "psi in the numerator as printed");
  add("proton_mass_duality", computed("proton_mass_kg"), published("proton_mass_kg"),
      "psi alpha' in the denominator");
  add("neutron_lag_check", nucleon_lag(g2_embedding_cos(), alpha, form_ratio), published("neutron_lag"),
      "independent re-evaluation of the neutron lag");
  return rows;
}

std::string oracle_table(const std::vector<OracleRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(36) << "quantity" << std::setw(26) << "value" << std::setw(26) << "reference"
      << std::setw(12) << "rel_err" << "note\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(36) << row.quantity << std::setw(26) << to_decimal(row.value, 16) << std::setw(26)
        << (row.reference ? to_decimal(*row.reference, 12) : "-") << std::setw(12)
        << (row.rel_err ? to_decimal(*row.rel_err, 2) : "-") << row.note << '\n';
  }
  return out.str();
}

}  // namespace mqtlab::mqt
