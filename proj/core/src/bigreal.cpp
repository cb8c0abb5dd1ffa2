#include "mqtlab/bigreal.hpp"

#include "mqtlab/errors.hpp"

#include <ios>
#include <regex>

namespace mqtlab {

PrecisionScope::PrecisionScope(unsigned digits)
    : digits_(digits), previous_(BigReal::default_precision()) {
  if (digits == 0) throw DomainError("precision must be positive");
  BigReal::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { BigReal::default_precision(previous_); }

unsigned working_precision() { return BigReal::default_precision(); }

bool is_decimal_literal(std::string_view text) {
  static const std::regex pattern(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  return std::regex_match(text.begin(), text.end(), pattern);
}

BigReal parse_decimal(std::string_view text) {
  if (!is_decimal_literal(text))
    throw DomainError("not a decimal number: '" + std::string(text) + "'");
  return BigReal(std::string(text));
}

std::string to_decimal(const BigReal& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

BigReal from_exact(const ExactScalar& q) {
  BigReal out;
  mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigReal pi() {
  BigReal out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

BigReal relative_error(const BigReal& a, const BigReal& b) {
  if (b == 0) throw DomainError("relative error against zero reference");
  return abs(a - b) / abs(b);
}

}  // namespace mqtlab
