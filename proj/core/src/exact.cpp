#include "mqtlab/exact.hpp"

#include "mqtlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mqtlab {

std::string to_string(const ExactScalar& x) {
  ExactScalar c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

ExactScalar parse_exact(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw DomainError("empty rational literal");

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool negative = false;
    std::string digits = s;
    if (digits.front() == '-' || digits.front() == '+') {
      negative = digits.front() == '-';
      digits.erase(0, 1);
    }
    const auto d = digits.find('.');
    std::string whole = digits.substr(0, d);
    std::string frac = digits.substr(d + 1);
    if ((whole.empty() && frac.empty()) ||
        !std::all_of(whole.begin(), whole.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
        !std::all_of(frac.begin(), frac.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw DomainError("malformed decimal literal: " + s);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const mpz_class num =
        mpz_class(whole.empty() ? "0" : whole) * scale + mpz_class(frac.empty() ? "0" : frac);
    ExactScalar out(num, scale);
    out.canonicalize();
    return negative ? ExactScalar(-out) : out;
  }

  ExactScalar out;
  if (out.set_str(s, 10) != 0) throw DomainError("malformed rational literal: " + s);
  if (out.get_den() == 0) throw DomainError("zero denominator: " + s);
  out.canonicalize();
  return out;
}

bool RootVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const ExactScalar& c) { return c == 0; });
}

RootVector& RootVector::operator+=(const RootVector& rhs) {
  if (rhs.size() != size()) throw DimensionError("vector length mismatch in addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& rhs) {
  if (rhs.size() != size()) throw DimensionError("vector length mismatch in subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

RootVector& RootVector::operator*=(const ExactScalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const RootVector& a, const RootVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string to_string(const RootVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

ExactScalar inner(const RootVector& u, const RootVector& v) {
  if (u.size() != v.size())
    throw DimensionError("inner product of vectors of length " + std::to_string(u.size()) +
                         " and " + std::to_string(v.size()));
  ExactScalar acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionError("matrix data does not match its shape");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const ExactScalar> entries) {
  ExactMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::span<const RootVector> columns) {
  if (columns.empty()) return {};
  const std::size_t rows = columns.front().size();
  ExactMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("columns of unequal length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ExactScalar ExactMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  ExactScalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix a = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(col, k));
        std::swap(inv(pivot, k), inv(col, k));
      }
    }
    const ExactScalar p = a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) /= p;
      inv(col, k) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const ExactScalar f = a(r, col);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(col, k);
        inv(r, k) -= f * inv(col, k);
      }
    }
  }
  return inv;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const ExactScalar& c) { return c == 0; });
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& f = a(r, k);
      if (f == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += f * b(k, c);
    }
  return out;
}

RootVector operator*(const ExactMatrix& a, const RootVector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RootVector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) out[r] += a(r, c) * v[c];
  return out;
}

std::string to_string(const ExactMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << to_string(m(r, c));
    }
  }
  os << ']';
  return os.str();
}

std::vector<ExactScalar> solve_exact(const ExactMatrix& a, std::span<const ExactScalar> b) {
  if (!a.is_square() || a.rows() != b.size()) throw DimensionError("solve: shape mismatch");
  const ExactMatrix inv = a.inverse();
  std::vector<ExactScalar> x(b.size(), ExactScalar(0));
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) x[r] += inv(r, c) * b[c];
  return x;
}

}  // namespace mqtlab
