#pragma once

// Truncated infinite-dimensional representations pi_t of the quantised
// function algebra F_eps(SU2) on formal polynomials e_0, e_1, ..., e_K.
//
//   a e_k = (1 - eps^(-2k))^(1/2) e_(k-1)
//   b e_k = -eps^(-k-1) t^(-1) e_k
//   c e_k = eps^(-k) t e_k
//   d e_k = (1 - eps^(-2k-2))^(1/2) e_(k+1)
//
// with t = exp(i theta) on the unit circle. The deformation parameter is
// called def_step here to keep it apart from Planck's constant.

#include "mqtlab/bigreal.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mqtlab::qsymbols {

struct BigComplex {
  BigReal re;
  BigReal im;

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& a) { return {s * a.re, s * a.im}; }
  [[nodiscard]] BigReal modulus() const { return sqrt(re * re + im * im); }
  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
};

struct TruncatedPolySpace {
  std::size_t max_degree = 0;  ///< K; the basis is e_0 ... e_K
  [[nodiscard]] std::size_t dimension() const noexcept { return max_degree + 1; }
};

/// Vector in the truncated space. overflow is set once a component was pushed
/// past e_K (or below e_0) and discarded.
struct PolyVector {
  std::vector<BigComplex> coeffs;
  bool overflow = false;
};

PolyVector basis_vector(const TruncatedPolySpace& space, std::size_t k);

enum class QLabel { a, b, c, d };
std::string to_string(QLabel label);

/// Weighted shift: e_k -> weights[k] e_(k + shift).
class QOperator {
public:
  QOperator(QLabel label, int shift, std::vector<BigComplex> weights)
      : label_(label), shift_(shift), weights_(std::move(weights)) {}

  [[nodiscard]] QLabel label() const noexcept { return label_; }
  [[nodiscard]] int shift() const noexcept { return shift_; }
  [[nodiscard]] const BigComplex& weight(std::size_t k) const { return weights_.at(k); }
  [[nodiscard]] std::size_t dimension() const noexcept { return weights_.size(); }

  [[nodiscard]] PolyVector apply(const PolyVector& v) const;

  /// Dense (K+1) x (K+1) matrix, entry [row][col].
  [[nodiscard]] std::vector<std::vector<BigComplex>> matrix() const;

private:
  QLabel label_;
  int shift_;
  std::vector<BigComplex> weights_;
};

struct Fsu2Representation {
  TruncatedPolySpace space;
  BigReal def_step;
  BigReal theta;
  QOperator a;
  QOperator b;
  QOperator c;
  QOperator d;

  [[nodiscard]] const QOperator& op(QLabel label) const;
};

/// Throws DomainError for def_step <= 1 and for K < 2.
Fsu2Representation fsu2_generators(const BigReal& def_step, const BigReal& theta, std::size_t max_degree);

/// True when every nonzero matrix entry sits at (k + shift, k).
bool respects_degree_shift(const QOperator& op);

enum class QConvention { q_is_def_step, q_is_inverse_def_step };
std::string to_string(QConvention convention);

struct RelationResidual {
  std::string relation;
  BigReal max_residual;
};

struct RelationReport {
  QConvention convention;
  std::vector<RelationResidual> residuals;
  [[nodiscard]] BigReal worst() const;
};

/// Residuals of the defining relations of the quantised function algebra
///   ab = q ba, ac = q ca, bd = q db, cd = q dc, bc = cb,
///   ad - da = (q - 1/q) bc, ad - q bc = 1
/// evaluated on the interior basis vectors e_1 ... e_(K-1).
RelationReport check_relations(const Fsu2Representation& rep, QConvention convention);

struct ConventionVerdict {
  std::vector<RelationReport> reports;
  std::optional<QConvention> unique;  ///< set when exactly one convention passes
};

ConventionVerdict determine_convention(const Fsu2Representation& rep, const BigReal& tolerance);

}  // namespace mqtlab::qsymbols
