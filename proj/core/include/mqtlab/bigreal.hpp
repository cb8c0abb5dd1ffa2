#pragma once

// Arbitrary-precision decimal reals backed by MPFR.
//
// Precision is a per-thread setting measured in significant decimal digits.
// Every value created while a PrecisionScope is alive carries that precision;
// constants are parsed from decimal strings inside the scope so that the same
// inputs can be re-evaluated at any precision.

#include "mqtlab/exact.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace mqtlab {

using BigReal = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecision = 60;
inline constexpr unsigned kMinPrecision = 50;

class PrecisionScope {
public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  [[nodiscard]] unsigned digits() const noexcept { return digits_; }

private:
  unsigned digits_;
  unsigned previous_;
};

/// Current working precision in decimal digits.
unsigned working_precision();

/// True for an optionally signed decimal with optional exponent, e.g. "6.62e-34".
bool is_decimal_literal(std::string_view text);

/// Parses a decimal literal at the working precision. Throws DomainError.
BigReal parse_decimal(std::string_view text);

/// Scientific notation. digits == 0 emits enough digits to round-trip.
std::string to_decimal(const BigReal& x, unsigned digits = 0);

BigReal from_exact(const ExactScalar& q);
BigReal pi();

/// |a - b| / |b|
BigReal relative_error(const BigReal& a, const BigReal& b);

}  // namespace mqtlab
