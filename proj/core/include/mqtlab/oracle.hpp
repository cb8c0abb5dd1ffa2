#pragma once

// Discrepancy study: alternative readings of the published numbers and the
// inputs each published value implies.

#include "mqtlab/bigreal.hpp"
#include "mqtlab/constants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mqtlab::mqt {

struct OracleRow {
  std::string quantity;
  BigReal value;
  std::optional<BigReal> reference;
  std::optional<BigReal> rel_err;
  std::string note;
};

/// Rounded electron anomaly quoted next to psi.
inline constexpr const char* kRoundedMeasuredMoment = "0.001159652";

std::vector<OracleRow> oracle_study(const ConstantsProfile& profile, unsigned precision = kDefaultPrecision);

std::string oracle_table(const std::vector<OracleRow>& rows);

}  // namespace mqtlab::mqt
