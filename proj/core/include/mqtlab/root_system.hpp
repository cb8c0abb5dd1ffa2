#pragma once

#include "mqtlab/bigreal.hpp"
#include "mqtlab/exact.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mqtlab::liecore {

enum class RootSystemName { A1, A1xA1, A2, D4, F4, G2, E6 };

inline constexpr std::array kAllRootSystems = {
    RootSystemName::A1, RootSystemName::A1xA1, RootSystemName::A2, RootSystemName::D4,
    RootSystemName::F4, RootSystemName::G2,    RootSystemName::E6};

std::string to_string(RootSystemName name);
/// Case-insensitive: "g2", "A1xA1", ...
std::optional<RootSystemName> parse_root_system_name(std::string_view text);

/// Root system realised in a rational Euclidean space, long roots of norm 2.
///
/// Roots are enumerated once at construction by reflection closure of the
/// simple roots. all_roots() lists the positive roots first, ordered by height
/// and then lexicographically on simple-root coefficients, followed by their
/// negatives in the same order.
class RootSystem {
public:
  [[nodiscard]] RootSystemName name() const noexcept { return name_; }
  [[nodiscard]] std::size_t rank() const noexcept { return simple_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return simple_.front().size(); }

  [[nodiscard]] std::span<const RootVector> simple_roots() const noexcept { return simple_; }
  [[nodiscard]] std::span<const RootVector> all_roots() const noexcept { return roots_; }
  [[nodiscard]] std::span<const RootVector> positive_roots() const noexcept {
    return std::span(roots_).first(roots_.size() / 2);
  }
  [[nodiscard]] const RootVector& highest_root() const noexcept { return roots_[roots_.size() / 2 - 1]; }

  /// Coefficients of all_roots()[i] in the simple-root basis.
  [[nodiscard]] std::span<const int> simple_coefficients(std::size_t i) const {
    return std::span(coefficients_).subspan(i * rank(), rank());
  }

  /// A(i, j) = 2 (a_i, a_j) / (a_j, a_j), row-major.
  [[nodiscard]] int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank() + j]; }
  [[nodiscard]] std::span<const int> cartan_matrix() const noexcept { return cartan_; }

  /// Gram matrix of the simple roots.
  [[nodiscard]] const ExactMatrix& gram() const noexcept { return gram_; }

  /// Sum of c_i * a_i.
  [[nodiscard]] RootVector combine(std::span<const ExactScalar> simple_coeffs) const;
  [[nodiscard]] RootVector combine(std::span<const int> simple_coeffs) const;

  friend RootSystem build_root_system(RootSystemName name);

private:
  RootSystem(RootSystemName name, std::vector<RootVector> simple);

  RootSystemName name_;
  std::vector<RootVector> simple_;
  std::vector<int> cartan_;
  ExactMatrix gram_;
  std::vector<RootVector> roots_;
  std::vector<int> coefficients_;
};

RootSystem build_root_system(RootSystemName name);

/// Textbook Cartan matrix for the named type, in the simple-root order used by
/// build_root_system.
std::vector<int> reference_cartan_matrix(RootSystemName name);

/// 2 b / (b, b). Throws DomainError for the zero vector.
RootVector coroot(const RootVector& beta);

/// <v, b^> = 2 (v, b) / (b, b)
ExactScalar coroot_pairing(const RootVector& v, const RootVector& beta);

std::vector<RootVector> positive_roots(const RootSystem& rs);

/// Half the sum of the positive roots.
RootVector weyl_vector(const RootSystem& rs);

/// Cartan element of the principal sl2: the unique f in the root span with
/// (a_i, f) = 2 for every simple root. Equal to the sum of positive coroots.
RootVector principal_sl2_vector(const RootSystem& rs);

/// (f, f) / (theta, theta), theta the highest root.
ExactScalar dynkin_index_principal(const RootSystem& rs);

struct EmbeddingAngle {
  ExactScalar cos2;
  BigReal cos;  ///< positive root of cos2 at the working precision
};

/// Angle between w and the principal sl2 vector.
EmbeddingAngle embedding_angle_cos(const RootSystem& rs, const RootVector& w);

struct DualEmbeddingNorm {
  ExactScalar norm;    ///< 56/3 for G2
  ExactScalar factor;  ///< norm / (f, f) = 1/3
};

/// Norm of the principal vector on the coroot side. Only G2 is defined;
/// other systems throw DomainError.
DualEmbeddingNorm dual_embedding_norm(const RootSystem& rs);

}  // namespace mqtlab::liecore
