#pragma once

#include "mqtlab/exact.hpp"
#include "mqtlab/root_system.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mqtlab::liecore {

inline constexpr std::size_t kDefaultWeylElementCap = 100'000;

/// Finite reflection group of a root system, fully enumerated.
///
/// Each element w is stored as the integer matrix M with
/// w(a_j) = sum_i M(i, j) a_i in the simple-root basis, which is an exact
/// representation of the orthogonal transformation on the root span.
/// Elements are kept in lexicographic order of their entries; element 0 is
/// not necessarily the identity, use identity_index().
class WeylGroup {
public:
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size() / (rank_ * rank_); }
  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }

  /// Row-major rank x rank integer matrix of element k.
  [[nodiscard]] std::span<const std::int32_t> element(std::size_t k) const {
    return std::span(elements_).subspan(k * rank_ * rank_, rank_ * rank_);
  }
  [[nodiscard]] std::size_t identity_index() const noexcept { return identity_; }

  /// Index of the product element(a) * element(b), by lookup.
  [[nodiscard]] std::size_t compose(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::size_t inverse(std::size_t k) const;
  /// Index of an element given its matrix; throws std::out_of_range when absent.
  [[nodiscard]] std::size_t find(std::span<const std::int32_t> matrix) const;

  /// Image of a vector given by simple-root coefficients.
  [[nodiscard]] std::vector<int> act(std::size_t k, std::span<const int> simple_coeffs) const;

  /// The element as an ambient orthogonal matrix, acting as the identity on
  /// the orthogonal complement of the root span.
  [[nodiscard]] ExactMatrix ambient_matrix(const RootSystem& rs, std::size_t k) const;

  friend WeylGroup weyl_group(const RootSystem& rs, std::size_t element_cap);

private:
  std::size_t rank_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::int32_t> elements_;
};

/// Breadth-first closure over products with the simple reflections. Throws
/// ResourceError once more than element_cap elements have been found.
WeylGroup weyl_group(const RootSystem& rs, std::size_t element_cap = kDefaultWeylElementCap);

/// Group order without storing the group: the orbit of the Weyl vector is
/// regular, so its size equals |W|.
std::size_t weyl_group_order(const RootSystem& rs);

/// Matrix of the simple reflection s_i in the simple-root basis.
std::vector<std::int32_t> simple_reflection(const RootSystem& rs, std::size_t i);

}  // namespace mqtlab::liecore
