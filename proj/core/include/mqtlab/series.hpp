#pragma once

// Brute-force partial sums of 1/sqrt(m^2 - 1) and the fitted constants
// Sigma_N - ln(2N).
//
//   plain    : sum_{k=1..N} 1 / sqrt((k+1)^2 - 1)
//   evenS    : sum_{k=1..N} 2 / sqrt((2k)^2 - 1)
//   oddT     : sum_{k=1..N} 2 / sqrt((2k+1)^2 - 1)
//   splitSum : evenS + oddT

#include "mqtlab/bigreal.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mqtlab::mqt {

enum class SeriesVariant { plain, evenS, oddT, splitSum };

inline constexpr std::array kAllSeriesVariants = {SeriesVariant::plain, SeriesVariant::evenS,
                                                  SeriesVariant::oddT, SeriesVariant::splitSum};

std::string to_string(SeriesVariant variant);
std::optional<SeriesVariant> parse_series_variant(std::string_view text);

inline constexpr std::uint64_t kSeriesGuard = 1'000'000'000;

enum class SummationKernel {
  automatic,          ///< working precision up to kWorkingPrecisionLimit terms, double-double above
  working_precision,  ///< every term and the running sum in BigReal
  double_double,      ///< compensated pair-of-doubles arithmetic, about 31 significant digits
};

inline constexpr std::uint64_t kWorkingPrecisionLimit = 200'000;

/// Throws DomainError for N < 1 and ResourceError beyond kSeriesGuard.
BigReal sigma_series(std::uint64_t n, SeriesVariant variant,
                     SummationKernel kernel = SummationKernel::automatic);

struct SeriesStudyRow {
  SeriesVariant variant;
  std::uint64_t n;
  BigReal sum;
  BigReal fitted;  ///< sum - ln(2N)
};

struct SeriesVariantSummary {
  SeriesVariant variant;
  /// Richardson extrapolation of the fitted constant from the two largest N,
  /// assuming a 1/N correction. Meaningless when log_slope differs from 1.
  BigReal extrapolated;
  /// (Sigma(N2) - Sigma(N1)) / ln(N2 / N1) for the two largest N.
  BigReal log_slope;
  /// |fitted(N2) - fitted(N1)| for the two largest N.
  BigReal last_step;
};

struct SeriesStudy {
  std::vector<SeriesStudyRow> rows;
  std::vector<SeriesVariantSummary> summaries;  ///< empty unless at least two N
};

/// One pass per variant over increasing N; N values are sorted and deduplicated.
SeriesStudy series_study(std::span<const SeriesVariant> variants, std::span<const std::uint64_t> ns);

}  // namespace mqtlab::mqt
