#include "mqtlab/chain.hpp"

#include "mqtlab/casimir.hpp"
#include "mqtlab/cosh_law.hpp"
#include "mqtlab/errors.hpp"
#include "mqtlab/root_system.hpp"

namespace mqtlab::mqt {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

BigReal lit(const char* text) { return parse_decimal(text); }

}  // namespace

BigReal alpha_from_prime(const BigReal& alpha_prime) {
  require(alpha_prime > 0, "alpha' must be positive");
  return 2 * pi() * alpha_prime;
}

BigReal prime_from_alpha(const BigReal& alpha) {
  require(alpha > 0, "alpha must be positive");
  return alpha / (2 * pi());
}

BigReal anomalous_moment(const BigReal& alpha_prime) {
  require(alpha_prime > 0 && alpha_prime < 1, "anomalous moment needs 0 < alpha' < 1");
  return alpha_prime - alpha_prime * alpha_prime - alpha_prime * alpha_prime / 3;
}

BigReal qft_second_order_gap(const BigReal& expansion_variable) {
  return (BigReal(1) / 3 - lit(kQedSecondOrderCoefficient)) * expansion_variable * expansion_variable;
}

BigReal psi(const BigReal& alpha_prime, const BigReal& p_ref) {
  require(p_ref > 0, "psi needs a positive reference moment");
  return alpha_prime / p_ref;
}

BigReal sigma_asymptote(const BigReal& n) {
  require(n > 0, "sigma asymptote needs N > 0");
  return log(2 * n) + lit(kSigmaAsymptoteConstant);
}

BigReal solve_position(const BigReal& alpha) {
  require(alpha > 0 && alpha < 1, "position solve needs 0 < alpha < 1");
  const BigReal radicand = 1 / (alpha * alpha) - 1;
  return exp(2 / pi() * sqrt(radicand) - lit(kSigmaAsymptoteConstant));
}

ElectronPeriod electron_period(const ConstantsProfile& profile) {
  const BigReal c = profile.c.value();
  const BigReal h_over_c2 = profile.planck_h.value() / (c * c);
  return {h_over_c2, h_over_c2 / profile.m_e_kg.value()};
}

UniverseAge universe_age(const BigReal& two_n, const BigReal& period) {
  require(two_n >= 0 && period >= 0, "universe age needs nonnegative inputs");
  const BigReal seconds = two_n * period;
  return {seconds, seconds / lit(kJulianYearSeconds)};
}

BigReal newton_lhs(const BigReal& alpha, const BigReal& position) {
  require(alpha >= 0 && alpha < 1, "Newton check needs 0 <= alpha < 1");
  require(position > 0, "Newton check needs a positive position");
  return 2 * alpha / (sqrt(1 - alpha * alpha) * position);
}

BigReal newton_rhs(const ConstantsProfile& profile, const BigReal& psi_value, const BigReal& alpha_prime) {
  require(psi_value > 0 && alpha_prime > 0, "Newton check needs positive psi and alpha'");
  const BigReal mass = profile.m_e_kg.value() / (psi_value * alpha_prime);
  return profile.G_measured.value() * mass * mass / (profile.c.value() * profile.planck_h_newton.value());
}

BigReal solve_G(const ConstantsProfile& profile, const BigReal& alpha, const BigReal& psi_value,
                const BigReal& alpha_prime, const BigReal& position) {
  require(alpha > 0 && alpha < 1, "G solve needs 0 < alpha < 1");
  require(psi_value > 0 && alpha_prime > 0 && position > 0, "G solve needs positive inputs");
  const BigReal m_e = profile.m_e_kg.value();
  const BigReal scaled = psi_value * alpha_prime;
  return 2 * alpha * profile.c.value() * profile.planck_h_newton.value() * scaled * scaled /
         (sqrt(1 - alpha * alpha) * position * m_e * m_e);
}

BigReal nucleon_lag(const BigReal& cos_a, const BigReal& alpha, const ExactScalar& form_ratio,
                    const std::optional<BigReal>& psi_value) {
  require(cos_a > 0 && cos_a <= 1, "nucleon lag needs 0 < cos a <= 1");
  require(alpha > 0 && alpha < 1, "nucleon lag needs 0 < alpha < 1");
  require(form_ratio > 0, "nucleon lag needs a positive form ratio");
  BigReal hyperbolic;
  if (psi_value) {
    const BigReal& s = *psi_value;
    require(s > alpha, "proton lag needs psi > alpha");
    const BigReal reduced = alpha / s;
    hyperbolic = 2 * s * sqrt(1 - reduced * reduced) / alpha;
  } else {
    hyperbolic = 2 * sqrt(1 - alpha * alpha) / alpha;
  }
  return (1 - cos_a) * hyperbolic * (2 / pi()) / from_exact(form_ratio);
}

BigReal nucleon_mass(const BigReal& lag, const ConstantsProfile& profile, const BigReal& alpha_prime,
                     const BigReal& alpha, const std::optional<BigReal>& psi_value,
                     ProtonPsiPlacement placement) {
  require(lag >= 0, "nucleon mass needs a nonnegative lag");
  require(alpha_prime > 0 && alpha > 0, "nucleon mass needs positive couplings");
  const BigReal m_e = profile.m_e_kg_nucleon.value();
  const BigReal numerator = 2 * qsymbols::cosh_law(lag) * m_e;
  // Named intermediates keep the evaluation order fixed so that psi = 1
  // reproduces the neutron value bit for bit.
  if (!psi_value) {
    const BigReal denominator = alpha_prime * BigReal(1 + alpha);
    return numerator / denominator;
  }
  const BigReal& s = *psi_value;
  require(s > 0, "proton mass needs psi > 0");
  const BigReal denominator = alpha_prime * BigReal(1 + alpha / s);
  if (placement == ProtonPsiPlacement::printed_formula) return BigReal(numerator * s) / denominator;
  return numerator / BigReal(s * denominator);
}

BigReal lepton_lag(const BigReal& alpha, const std::optional<BigReal>& psi_value) {
  require(alpha > 0, "lepton lag needs alpha > 0");
  const BigReal ratio = (psi_value ? *psi_value : BigReal(1)) / alpha;
  require(ratio >= 1, "arccosh argument below 1");
  return acosh(ratio) / 2;
}

BigReal lepton_mass(const BigReal& lag, const ConstantsProfile& profile, Lepton lepton,
                    const std::optional<BigReal>& psi_value) {
  require(lag >= 0, "lepton mass needs a nonnegative lag");
  const BigReal m_em = profile.m_e_GeV_em.value();
  if (lepton == Lepton::mu) return m_em * 2 / qsymbols::cosh_law(lag);
  require(psi_value.has_value() && *psi_value > 0, "tau mass needs psi > 0");
  return m_em * qsymbols::cosh_law(lag / *psi_value) / 2;
}

BigReal derived_em_mass_GeV(const ConstantsProfile& profile) {
  const BigReal c = profile.c.value();
  const BigReal joules = profile.m_e_kg.value() * c * c / profile.alpha_prime.value();
  return joules / profile.electronvolt_J.value() / BigReal("1e9");
}

ExactScalar nucleon_form_ratio() {
  const auto g2 = liecore::build_root_system(liecore::RootSystemName::G2);
  const ExactScalar index = liecore::dynkin_index_principal(g2);
  const ExactScalar dual_factor = liecore::dual_embedding_norm(g2).factor;
  ExactScalar casimir_ratio(qsymbols::casimir_sl2(2), qsymbols::casimir_sl2(1));
  casimir_ratio.canonicalize();
  ExactScalar ratio = index * dual_factor * casimir_ratio;
  ratio.canonicalize();
  return ratio;
}

BigReal g2_embedding_cos() {
  const auto g2 = liecore::build_root_system(liecore::RootSystemName::G2);
  return liecore::embedding_angle_cos(g2, g2.highest_root()).cos;
}

}  // namespace mqtlab::mqt
