#pragma once

// Exact rational scalars, coordinate vectors and small dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mqtlab {

using ExactScalar = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const ExactScalar& x);

/// Parses "p", "p/q" or a finite decimal such as "-0.125".
ExactScalar parse_exact(std::string_view text);

/// Coordinates of a vector in a Euclidean ambient space.
class RootVector {
public:
  RootVector() = default;
  explicit RootVector(std::size_t dim) : coords_(dim, ExactScalar(0)) {}
  explicit RootVector(std::vector<ExactScalar> coords) : coords_(std::move(coords)) {}
  RootVector(std::initializer_list<ExactScalar> coords) : coords_(coords) {}

  [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
  [[nodiscard]] const ExactScalar& operator[](std::size_t i) const { return coords_[i]; }
  ExactScalar& operator[](std::size_t i) { return coords_[i]; }
  [[nodiscard]] std::span<const ExactScalar> coords() const noexcept { return coords_; }

  [[nodiscard]] bool is_zero() const;

  RootVector& operator+=(const RootVector& rhs);
  RootVector& operator-=(const RootVector& rhs);
  RootVector& operator*=(const ExactScalar& s);

  friend RootVector operator+(RootVector lhs, const RootVector& rhs) { return lhs += rhs; }
  friend RootVector operator-(RootVector lhs, const RootVector& rhs) { return lhs -= rhs; }
  friend RootVector operator*(RootVector v, const ExactScalar& s) { return v *= s; }
  friend RootVector operator*(const ExactScalar& s, RootVector v) { return v *= s; }
  friend RootVector operator-(RootVector v) { return v *= ExactScalar(-1); }

  friend bool operator==(const RootVector& a, const RootVector& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates; used for canonical orderings.
  friend bool operator<(const RootVector& a, const RootVector& b);

private:
  std::vector<ExactScalar> coords_;
};

/// "(4, 2, -6)" with rationals as p/q.
std::string to_string(const RootVector& v);

/// Standard Euclidean pairing. Throws DimensionError on length mismatch.
ExactScalar inner(const RootVector& u, const RootVector& v);

/// Row-major dense matrix over the rationals.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ExactScalar(0)) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> data);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const ExactScalar> entries);
  /// Matrix whose columns are the given vectors.
  static ExactMatrix from_columns(std::span<const RootVector> columns);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  [[nodiscard]] ExactScalar trace() const;
  [[nodiscard]] ExactMatrix transpose() const;
  /// Gauss-Jordan inverse. Throws DomainError when singular.
  [[nodiscard]] ExactMatrix inverse() const;
  [[nodiscard]] bool is_zero() const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const ExactScalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend RootVector operator*(const ExactMatrix& a, const RootVector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

std::string to_string(const ExactMatrix& m);

/// Solves A x = b exactly for square nonsingular A.
std::vector<ExactScalar> solve_exact(const ExactMatrix& a, std::span<const ExactScalar> b);

}  // namespace mqtlab
