#pragma once

#include "mqtlab/exact.hpp"
#include "mqtlab/root_system.hpp"

#include <cstdint>

namespace mqtlab::qsymbols {

/// Quadratic Casimir of the (N+1)-dimensional sl2 module: (N+1)^2 - 1.
std::int64_t casimir_sl2(std::int64_t n);

/// Casimir eigenvalue on the module of highest weight lambda:
/// 2 (lambda, lambda + 2 rho) with long roots of norm 2. The factor 2 makes
/// A1 agree with casimir_sl2. Throws DomainError for non-dominant lambda.
ExactScalar casimir_general(const liecore::RootSystem& rs, const RootVector& lambda);

/// Scalar action of the polarised Casimir t = (C_{V(x)W} - C_V - C_W) / 2 on
/// the nu-isotypic part of V(lambda) (x) V(mu).
ExactScalar casimir_polarization(const liecore::RootSystem& rs, const RootVector& lambda,
                                 const RootVector& mu, const RootVector& nu);

bool is_dominant(const liecore::RootSystem& rs, const RootVector& lambda);

}  // namespace mqtlab::qsymbols
