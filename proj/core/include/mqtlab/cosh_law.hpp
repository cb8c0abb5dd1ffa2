#pragma once

#include "mqtlab/bigreal.hpp"

namespace mqtlab::qsymbols {

/// Solution of K'' = K with K(0) = 1, K'(0) = 0, evaluated at the working
/// precision from the power series whose coefficients follow from the ODE:
/// c_(n+2) = c_n / ((n+1)(n+2)).
BigReal cosh_law(const BigReal& u);

/// K'(u) from the same series.
BigReal cosh_law_slope(const BigReal& u);

}  // namespace mqtlab::qsymbols
