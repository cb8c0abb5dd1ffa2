#include "mqtlab/cosh_law.hpp"

namespace mqtlab::qsymbols {

namespace {

// Sum of c_n u^n over n = start, start + 2, ... with c_start = 1 and the ODE
// recurrence. All terms share the sign of u^start, so no cancellation occurs.
BigReal series_from(const BigReal& u, unsigned start) {
  const BigReal eps = pow(BigReal(10), -static_cast<long>(working_precision()) - 5);
  const BigReal u2 = u * u;
  BigReal term = start == 0 ? BigReal(1) : u;
  BigReal sum = term;
  for (unsigned n = start; ; n += 2) {
    term *= u2 / ((n + 1) * BigReal(n + 2));
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
  }
  return sum;
}

}  // namespace

BigReal cosh_law(const BigReal& u) { return series_from(u, 0); }

BigReal cosh_law_slope(const BigReal& u) {
  if (u == 0) return BigReal(0);
  return series_from(u, 1);
}

}  // namespace mqtlab::qsymbols
