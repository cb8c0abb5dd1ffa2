#pragma once

#include "mqtlab/bigreal.hpp"
#include "mqtlab/chain.hpp"
#include "mqtlab/constants.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mqtlab::mqt {

enum class Provenance { PAPER, TRIVIAL, DERIVED };
std::string to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view text);

/// Published value of a chain quantity and the relative tolerance within
/// which the chain must reproduce it from the paper profile.
struct ReferenceValue {
  std::string_view quantity;
  std::string_view literal;
  std::string_view tolerance;  ///< relative; "0" for exact quantities
  int criterion;               ///< acceptance criterion number
};

/// Reference values in report order. Exponents are as published except for the
/// Newton left-hand side, whose printed "10^40" is a sign typo for 10^-40.
std::span<const ReferenceValue> reference_values();
const ReferenceValue* find_reference(std::string_view quantity);

enum class PsiSource {
  measured,    ///< alpha' / p_measured
  calculated,  ///< alpha' / p_calc
};
std::string to_string(PsiSource s);
std::string to_string(ProtonPsiPlacement p);

struct ChainOptions {
  unsigned precision = kDefaultPrecision;
  PsiSource psi_source = PsiSource::measured;
  ProtonPsiPlacement proton_placement = ProtonPsiPlacement::duality;
};

struct ReportRow {
  std::string quantity;
  BigReal computed;
  std::optional<BigReal> paper_value;
  std::optional<BigReal> measured_value;
  std::optional<BigReal> rel_err_paper;
  std::optional<BigReal> rel_err_measured;
  Provenance provenance = Provenance::DERIVED;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct MqtReport {
  std::string profile;
  unsigned precision = kDefaultPrecision;
  std::string version;
  std::vector<ReportRow> rows;

  [[nodiscard]] const ReportRow& row(std::string_view quantity) const;

  friend bool operator==(const MqtReport&, const MqtReport&) = default;
};

/// Electron, Newton, nucleon and lepton sections in dependency order.
/// Runs at options.precision; errors name the failing quantity.
MqtReport run_full_chain(const ConstantsProfile& profile, const ChainOptions& options = {});

std::string to_json(const MqtReport& report);
std::string to_csv(const MqtReport& report);
std::string to_table(const MqtReport& report);

inline constexpr std::string_view kCsvHeader =
    "quantity,computed,paper,measured,rel_err_paper,rel_err_measured,provenance";

/// Inverse of to_json. Values are parsed at the precision stored in meta.
MqtReport parse_json_report(std::string_view text);
/// Inverse of to_csv; CSV carries rows only, so meta is supplied.
MqtReport parse_csv_report(std::string_view text, std::string profile, unsigned precision);

}  // namespace mqtlab::mqt
