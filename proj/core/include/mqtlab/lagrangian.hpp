#pragma once

#include "mqtlab/exact.hpp"

namespace mqtlab::qsymbols {

/// n x n matrix over the rationals, viewed as an element of gl_n.
using SquareMatrix = ExactMatrix;

/// Split of the product x y into its invariant, adjoint and symmetric
/// traceless components:
///   x y = antisym + sym_traceless + (free / n) Id
struct LagrangianParts {
  ExactScalar free;            ///< trace(x y), the free part
  SquareMatrix antisym;        ///< (x y - y x) / 2
  SquareMatrix sym_traceless;  ///< pi(x (x) y) / 2, the interactive part
};

/// pi(x (x) y) = x y + y x - (2/n) trace(x y) Id
///
/// Inputs must be traceless n x n matrices with n >= 2; throws
/// DimensionError or DomainError otherwise.
SquareMatrix lagrangian_projector(const SquareMatrix& x, const SquareMatrix& y);

LagrangianParts decompose_tensor(const SquareMatrix& x, const SquareMatrix& y);

/// The identity recombination antisym + sym_traceless + (free / n) Id.
SquareMatrix recombine(const LagrangianParts& parts);

}  // namespace mqtlab::qsymbols
