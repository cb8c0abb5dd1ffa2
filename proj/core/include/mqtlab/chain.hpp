#pragma once

// Mass-quantification calculation chain: electron sector, Newton cross-check,
// G2 nucleon lags and masses, mu/tau lepton lags and masses.
//
// All functions evaluate at the working precision set by PrecisionScope and
// throw DomainError when an argument leaves the stated range.

#include "mqtlab/bigreal.hpp"
#include "mqtlab/constants.hpp"
#include "mqtlab/exact.hpp"

#include <optional>

namespace mqtlab::mqt {

/// Constant of the logarithmic approximation of the partial sums.
inline constexpr const char* kSigmaAsymptoteConstant = "0.08396412352";
/// Second-order coefficient of the QED anomaly expansion in alpha/pi.
inline constexpr const char* kQedSecondOrderCoefficient = "0.3285";
/// Seconds per Julian year.
inline constexpr const char* kJulianYearSeconds = "3.15576e7";

/// alpha = 2 pi alpha'
BigReal alpha_from_prime(const BigReal& alpha_prime);
/// alpha' = alpha / 2 pi
BigReal prime_from_alpha(const BigReal& alpha);

/// p = alpha' - alpha'^2 - alpha'^2 / 3, for 0 < alpha' < 1.
BigReal anomalous_moment(const BigReal& alpha_prime);

/// (1/3 - 0.3285) x^2 for the expansion variable x.
BigReal qft_second_order_gap(const BigReal& expansion_variable);

/// psi = alpha' / p_ref
BigReal psi(const BigReal& alpha_prime, const BigReal& p_ref);

/// ln(2N) + 0.08396412352
BigReal sigma_asymptote(const BigReal& n);

/// 2N = exp((2/pi) sqrt(1/alpha^2 - 1) - 0.08396412352), for 0 < alpha < 1.
BigReal solve_position(const BigReal& alpha);

struct ElectronPeriod {
  BigReal h_over_c2;  ///< kg s
  BigReal period;     ///< s
};

/// T_e = (h / c^2) / m_e with planck_h and m_e_kg.
ElectronPeriod electron_period(const ConstantsProfile& profile);

struct UniverseAge {
  BigReal seconds;
  BigReal years;  ///< Julian years
};

UniverseAge universe_age(const BigReal& two_n, const BigReal& period);

/// 2 alpha / (sqrt(1 - alpha^2) N)
BigReal newton_lhs(const BigReal& alpha, const BigReal& position);

/// G (m_e / (psi alpha'))^2 / (c h) with planck_h_newton and m_e_kg.
BigReal newton_rhs(const ConstantsProfile& profile, const BigReal& psi_value, const BigReal& alpha_prime);

/// Newton constant that makes newton_lhs equal newton_rhs.
BigReal solve_G(const ConstantsProfile& profile, const BigReal& alpha, const BigReal& psi_value,
                const BigReal& alpha_prime, const BigReal& position);

/// Lag of the G2-type particle relative to the electron:
///   neutron: (1 - cos a) 2 sqrt(1 - alpha^2) / alpha (2/pi) / i
///   proton:  (1 - cos a) 2 psi sqrt(1 - (alpha/psi)^2) / alpha (2/pi) / i
/// The proton variant is selected by passing psi.
BigReal nucleon_lag(const BigReal& cos_a, const BigReal& alpha, const ExactScalar& form_ratio,
                    const std::optional<BigReal>& psi_value = std::nullopt);

/// Where psi enters the proton mass prefactor.
enum class ProtonPsiPlacement {
  /// m_e / (psi alpha' (1 + alpha/psi)): the mass is modified by (psi alpha')^-1
  /// as in the Newton cross-check. Reproduces the quoted proton mass.
  duality,
  /// m_e psi / (alpha' (1 + alpha/psi)): the printed closed form.
  printed_formula,
};

/// Neutron: 2 cosh(t) m_e / (alpha' (1 + alpha)); proton when psi is given.
/// Uses m_e_kg_nucleon.
BigReal nucleon_mass(const BigReal& lag, const ConstantsProfile& profile, const BigReal& alpha_prime,
                     const BigReal& alpha, const std::optional<BigReal>& psi_value = std::nullopt,
                     ProtonPsiPlacement placement = ProtonPsiPlacement::duality);

/// cos(pi/3) arccosh(1/alpha), or arccosh(psi/alpha) when psi is given.
BigReal lepton_lag(const BigReal& alpha, const std::optional<BigReal>& psi_value = std::nullopt);

enum class Lepton { mu, tau };

/// mu: m_em 2 / cosh(t); tau: m_em cosh(t / psi) / 2. GeV/c^2.
BigReal lepton_mass(const BigReal& lag, const ConstantsProfile& profile, Lepton lepton,
                    const std::optional<BigReal>& psi_value = std::nullopt);

/// m_e c^2 / alpha' expressed in GeV.
BigReal derived_em_mass_GeV(const ConstantsProfile& profile);

/// Ratio of intrinsic forms for the G2 lag: Dynkin index of the principal
/// embedding, times the coroot-side factor, times C(adjoint)/C(standard) of
/// sl2. Equals 224/9.
ExactScalar nucleon_form_ratio();

/// cos of the angle between the G2 highest root and the principal sl2.
BigReal g2_embedding_cos();

}  // namespace mqtlab::mqt
