#pragma once

#include "mqtlab/constants.hpp"
#include "mqtlab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mqtlab {

struct Check {
  int criterion;
  std::string name;
  std::string computed;
  std::string expected;
  std::string tolerance;
  std::string error;  ///< relative error or other measured deviation, empty for exact checks
  bool pass;
};

struct VerifyOptions {
  mqt::ChainOptions chain;
  /// Count Weyl groups by the regular orbit instead of full enumeration.
  bool weyl_order_only = false;
  std::vector<std::uint64_t> series_ns = {1'000'000, 10'000'000, 100'000'000};
};

struct VerificationResult {
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const;
  /// Criterion numbers with at least one failing check, ascending.
  [[nodiscard]] std::vector<int> failed_criteria() const;
};

/// Every acceptance check against the given profile.
VerificationResult verify_all(const mqt::ConstantsProfile& profile, const VerifyOptions& options = {});

std::string verification_table(const VerificationResult& result);

}  // namespace mqtlab
