#include "mqtlab/lagrangian.hpp"

#include "mqtlab/errors.hpp"

#include <string>

namespace mqtlab::qsymbols {

namespace {

void require_traceless_pair(const SquareMatrix& x, const SquareMatrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
    throw DimensionError("projector needs two square matrices of equal size");
  if (x.rows() < 2) throw DimensionError("projector needs n >= 2");
  if (x.trace() != 0 || y.trace() != 0)
    throw DomainError("projector inputs must lie in the traceless subalgebra");
}

}  // namespace

SquareMatrix lagrangian_projector(const SquareMatrix& x, const SquareMatrix& y) {
  require_traceless_pair(x, y);
  const ExactScalar n(static_cast<long>(x.rows()));
  const SquareMatrix xy = x * y;
  const ExactScalar scalar = ExactScalar(2) / n * xy.trace();
  return xy + y * x - SquareMatrix::identity(x.rows()) * scalar;
}

LagrangianParts decompose_tensor(const SquareMatrix& x, const SquareMatrix& y) {
  require_traceless_pair(x, y);
  const ExactScalar half(1, 2);
  return {(x * y).trace(), (x * y - y * x) * half, lagrangian_projector(x, y) * half};
}

SquareMatrix recombine(const LagrangianParts& parts) {
  const std::size_t n = parts.antisym.rows();
  return parts.antisym + parts.sym_traceless +
         SquareMatrix::identity(n) * (parts.free / ExactScalar(static_cast<long>(n)));
}

}  // namespace mqtlab::qsymbols
