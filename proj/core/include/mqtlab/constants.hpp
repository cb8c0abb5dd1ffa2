#pragma once

// Named registry of physical input constants.
//
// Values are stored as their decimal literals and converted to BigReal on
// demand, so one profile can drive the chain at any working precision.
//
// Text format, one entry per line:
//
//   # comment
//   name = paper
//   alpha_prime = 0.00116140981411
//
// Keys are exactly the field names below. Unknown, duplicate or missing keys
// and non-positive values are rejected with a ConfigError naming the key.

#include "mqtlab/bigreal.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mqtlab::mqt {

class DecimalConstant {
public:
  DecimalConstant() = default;
  /// Throws DomainError unless text is a strictly positive decimal literal.
  explicit DecimalConstant(std::string text);

  [[nodiscard]] const std::string& literal() const noexcept { return text_; }
  [[nodiscard]] BigReal value() const { return parse_decimal(text_); }

  friend bool operator==(const DecimalConstant&, const DecimalConstant&) = default;

private:
  std::string text_;
};

struct ConstantsProfile {
  std::string name;
  DecimalConstant alpha_prime;      ///< alpha / 2 pi, dimensionless
  DecimalConstant m_e_kg;           ///< electron mass for the electron and Newton sections, kg
  DecimalConstant m_e_kg_nucleon;   ///< electron mass used by the nucleon masses, kg
  DecimalConstant m_e_GeV_em;       ///< electromagnetic electron mass, GeV/c^2
  DecimalConstant c;                ///< m/s
  DecimalConstant planck_h;         ///< J s, electron period
  DecimalConstant planck_h_newton;  ///< J s, Newton cross-check
  DecimalConstant G_measured;       ///< m^3 kg^-1 s^-2
  DecimalConstant p_measured;       ///< electron anomalous moment, dimensionless
  DecimalConstant m_n_measured;     ///< kg
  DecimalConstant m_p_measured;     ///< kg
  DecimalConstant m_mu_measured;    ///< GeV/c^2
  DecimalConstant m_tau_measured;   ///< GeV/c^2
  DecimalConstant electronvolt_J;   ///< J per eV

  friend bool operator==(const ConstantsProfile&, const ConstantsProfile&) = default;
};

/// Every numeric key of ConstantsProfile, in declaration order.
inline constexpr std::array<std::string_view, 14> kProfileNumericKeys = {
    "alpha_prime",  "m_e_kg",       "m_e_kg_nucleon", "m_e_GeV_em",     "c",
    "planck_h",     "planck_h_newton", "G_measured",  "p_measured",     "m_n_measured",
    "m_p_measured", "m_mu_measured", "m_tau_measured", "electronvolt_J"};

const DecimalConstant& field(const ConstantsProfile& profile, std::string_view key);
DecimalConstant& field(ConstantsProfile& profile, std::string_view key);

/// Literal values of each section of the reproduced calculation, with the
/// speed of light corrected to 299792458 m/s.
const ConstantsProfile& paper_profile();
/// CODATA 2018 values.
const ConstantsProfile& codata_profile();

std::optional<ConstantsProfile> builtin_profile(std::string_view name);
std::vector<std::string> builtin_profile_names();

ConstantsProfile parse_profile(std::string_view text, std::string default_name);
ConstantsProfile load_profile_file(const std::filesystem::path& path);
/// Builtin name first, then a file path.
ConstantsProfile resolve_profile(std::string_view name_or_path);

std::string serialize_profile(const ConstantsProfile& profile);

}  // namespace mqtlab::mqt
