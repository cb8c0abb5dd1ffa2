#include "mqtlab/casimir.hpp"

#include "mqtlab/errors.hpp"

namespace mqtlab::qsymbols {

std::int64_t casimir_sl2(std::int64_t n) {
  if (n < 0) throw DomainError("casimir_sl2 needs N >= 0");
  return (n + 1) * (n + 1) - 1;
}

bool is_dominant(const liecore::RootSystem& rs, const RootVector& lambda) {
  for (const auto& alpha : rs.simple_roots())
    if (liecore::coroot_pairing(lambda, alpha) < 0) return false;
  return true;
}

ExactScalar casimir_general(const liecore::RootSystem& rs, const RootVector& lambda) {
  if (lambda.size() != rs.ambient_dim())
    throw DimensionError("weight has the wrong ambient dimension");
  if (!is_dominant(rs, lambda)) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  const RootVector shifted = lambda + liecore::weyl_vector(rs) * ExactScalar(2);
  return 2 * inner(lambda, shifted);
}

ExactScalar casimir_polarization(const liecore::RootSystem& rs, const RootVector& lambda,
                                 const RootVector& mu, const RootVector& nu) {
  return (casimir_general(rs, nu) - casimir_general(rs, lambda) - casimir_general(rs, mu)) / 2;
}

}  // namespace mqtlab::qsymbols
