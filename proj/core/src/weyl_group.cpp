#include "mqtlab/weyl_group.hpp"

#include "mqtlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace mqtlab::liecore {

namespace {

using Matrix = std::vector<std::int32_t>;

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t r) {
  Matrix out(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      const std::int32_t f = a[i * r + k];
      if (f == 0) continue;
      for (std::size_t j = 0; j < r; ++j) out[i * r + j] += f * b[k * r + j];
    }
  return out;
}

Matrix identity_matrix(std::size_t r) {
  Matrix m(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

}  // namespace

std::vector<std::int32_t> simple_reflection(const RootSystem& rs, std::size_t i) {
  const std::size_t r = rs.rank();
  Matrix m = identity_matrix(r);
  // column j: e_j - A(j, i) e_i
  for (std::size_t j = 0; j < r; ++j) m[i * r + j] -= rs.cartan(j, i);
  return m;
}

WeylGroup weyl_group(const RootSystem& rs, std::size_t element_cap) {
  const std::size_t r = rs.rank();
  std::vector<Matrix> generators;
  for (std::size_t i = 0; i < r; ++i) generators.push_back(simple_reflection(rs, i));

  std::set<Matrix> seen{identity_matrix(r)};
  std::deque<Matrix> frontier{identity_matrix(r)};
  while (!frontier.empty()) {
    const Matrix g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Matrix h = multiply(s, g, r);
      if (seen.contains(h)) continue;
      if (seen.size() >= element_cap)
        throw ResourceError("Weyl group of " + to_string(rs.name()) + " exceeds the cap of " +
                            std::to_string(element_cap) + " elements");
      seen.insert(h);
      frontier.push_back(std::move(h));
    }
  }

  WeylGroup group;
  group.rank_ = r;
  group.elements_.reserve(seen.size() * r * r);
  for (const auto& m : seen) group.elements_.insert(group.elements_.end(), m.begin(), m.end());
  group.identity_ = group.find(identity_matrix(r));
  return group;
}

std::size_t WeylGroup::find(std::span<const std::int32_t> matrix) const {
  const std::size_t stride = rank_ * rank_;
  if (matrix.size() != stride) throw DimensionError("matrix size differs from rank^2");
  std::size_t lo = 0;
  std::size_t hi = order();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto e = element(mid);
    if (std::lexicographical_compare(e.begin(), e.end(), matrix.begin(), matrix.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == order() || !std::equal(matrix.begin(), matrix.end(), element(lo).begin()))
    throw std::out_of_range("matrix is not an element of the Weyl group");
  return lo;
}

std::size_t WeylGroup::compose(std::size_t a, std::size_t b) const {
  const auto ea = element(a);
  const auto eb = element(b);
  return find(multiply(Matrix(ea.begin(), ea.end()), Matrix(eb.begin(), eb.end()), rank_));
}

std::size_t WeylGroup::inverse(std::size_t k) const {
  // w^m = 1 for the order m of w, so w^(m-1) is the inverse.
  std::size_t power = k;
  while (compose(power, k) != identity_) power = compose(power, k);
  return power;
}

std::vector<int> WeylGroup::act(std::size_t k, std::span<const int> simple_coeffs) const {
  if (simple_coeffs.size() != rank_) throw DimensionError("coefficient count differs from rank");
  const auto m = element(k);
  std::vector<int> out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) out[i] += m[i * rank_ + j] * simple_coeffs[j];
  return out;
}

ExactMatrix WeylGroup::ambient_matrix(const RootSystem& rs, std::size_t k) const {
  const ExactMatrix basis = ExactMatrix::from_columns(rs.simple_roots());
  const ExactMatrix gram_inv = rs.gram().inverse();
  ExactMatrix m(rank_, rank_);
  const auto e = element(k);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) = e[i * rank_ + j];
  const ExactMatrix coords = gram_inv * basis.transpose();  // ambient -> simple coefficients
  const ExactMatrix projector = basis * coords;
  return basis * m * coords + ExactMatrix::identity(rs.ambient_dim()) - projector;
}

std::size_t weyl_group_order(const RootSystem& rs) {
  const std::size_t r = rs.rank();
  // Fundamental-weight coordinates: s_i(l)_j = l_j - l_i A(i, j).
  std::set<std::vector<int>> orbit{std::vector<int>(r, 1)};
  std::deque<std::vector<int>> frontier{std::vector<int>(r, 1)};
  while (!frontier.empty()) {
    const std::vector<int> lambda = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<int> image = lambda;
      for (std::size_t j = 0; j < r; ++j) image[j] -= lambda[i] * rs.cartan(i, j);
      if (orbit.insert(image).second) frontier.push_back(std::move(image));
    }
  }
  return orbit.size();
}

}  // namespace mqtlab::liecore
