#include "mqtlab/root_system.hpp"

#include "mqtlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mqtlab::liecore {

namespace {

ExactScalar q(long num, long den = 1) {
  ExactScalar x(num, den);
  x.canonicalize();
  return x;
}

RootVector unit_difference(std::size_t dim, std::size_t plus, std::size_t minus) {
  RootVector v(dim);
  v[plus] = 1;
  v[minus] = -1;
  return v;
}

std::vector<RootVector> simple_roots_for(RootSystemName name) {
  switch (name) {
    case RootSystemName::A1:
      return {RootVector{q(1), q(-1)}};
    case RootSystemName::A1xA1:
      return {RootVector{q(1), q(-1)}, RootVector{q(1), q(1)}};
    case RootSystemName::A2:
      return {unit_difference(3, 0, 1), unit_difference(3, 1, 2)};
    case RootSystemName::G2:
      // Short root first; long root (1, -1, 0).
      return {RootVector{q(-1, 3), q(2, 3), q(-1, 3)}, RootVector{q(1), q(-1), q(0)}};
    case RootSystemName::D4:
      return {unit_difference(4, 0, 1), unit_difference(4, 1, 2), unit_difference(4, 2, 3),
              RootVector{q(0), q(0), q(1), q(1)}};
    case RootSystemName::F4:
      return {unit_difference(4, 1, 2), unit_difference(4, 2, 3),
              RootVector{q(0), q(0), q(0), q(1)},
              RootVector{q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)}};
    case RootSystemName::E6: {
      // Bourbaki realisation inside R^8.
      RootVector a1{q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2), q(-1, 2), q(-1, 2), q(-1, 2), q(1, 2)};
      RootVector a2(8);
      a2[0] = 1;
      a2[1] = 1;
      return {a1,
              a2,
              unit_difference(8, 1, 0),
              unit_difference(8, 2, 1),
              unit_difference(8, 3, 2),
              unit_difference(8, 4, 3)};
    }
  }
  throw std::logic_error("unhandled root system");
}

}  // namespace

std::string to_string(RootSystemName name) {
  switch (name) {
    case RootSystemName::A1: return "A1";
    case RootSystemName::A1xA1: return "A1xA1";
    case RootSystemName::A2: return "A2";
    case RootSystemName::D4: return "D4";
    case RootSystemName::F4: return "F4";
    case RootSystemName::G2: return "G2";
    case RootSystemName::E6: return "E6";
  }
  return "?";
}

std::optional<RootSystemName> parse_root_system_name(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto name : kAllRootSystems) {
    std::string candidate = to_string(name);
    std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (candidate == lowered) return name;
  }
  return std::nullopt;
}

std::vector<int> reference_cartan_matrix(RootSystemName name) {
  switch (name) {
    case RootSystemName::A1: return {2};
    case RootSystemName::A1xA1: return {2, 0, 0, 2};
    case RootSystemName::A2: return {2, -1, -1, 2};
    case RootSystemName::G2: return {2, -1, -3, 2};
    case RootSystemName::D4:
      return {2, -1, 0, 0, -1, 2, -1, -1, 0, -1, 2, 0, 0, -1, 0, 2};
    case RootSystemName::F4:
      return {2, -1, 0, 0, -1, 2, -2, 0, 0, -1, 2, -1, 0, 0, -1, 2};
    case RootSystemName::E6:
      return {2,  0, -1, 0,  0,  0,  0,  2, 0,  -1, 0,  0,  -1, 0, 2, -1, 0, 0,
              0, -1, -1, 2, -1,  0,  0,  0, 0,  -1, 2, -1, 0,  0, 0, 0,  -1, 2};
  }
  throw std::logic_error("unhandled root system");
}

RootSystem::RootSystem(RootSystemName name, std::vector<RootVector> simple)
    : name_(name), simple_(std::move(simple)) {
  const std::size_t r = simple_.size();
  gram_ = ExactMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram_(i, j) = inner(simple_[i], simple_[j]);

  cartan_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const ExactScalar a = 2 * gram_(i, j) / gram_(j, j);
      if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      cartan_[i * r + j] = static_cast<int>(a.get_num().get_si());
    }
  if (cartan_ != reference_cartan_matrix(name_))
    throw std::logic_error("simple roots of " + to_string(name_) +
                           " do not realise its Cartan matrix");
  (void)gram_.inverse();  // throws on linearly dependent simple roots

  // Reflection closure in simple-root coordinates:
  // s_i(b) = b - <b, a_i^> a_i with <b, a_i^> = sum_j b_j A(j, i).
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    const std::vector<int> beta = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < r; ++j) pairing += beta[j] * cartan_[j * r + i];
      if (pairing == 0) continue;
      std::vector<int> image = beta;
      image[i] -= pairing;
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }

  std::vector<std::vector<int>> positive;
  for (const auto& c : seen)
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positive.push_back(c);
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  if (positive.size() * 2 != seen.size())
    throw std::logic_error("root closure is not symmetric under negation");

  const std::size_t n_pos = positive.size();
  coefficients_.resize(2 * n_pos * r);
  roots_.reserve(2 * n_pos);
  for (std::size_t k = 0; k < n_pos; ++k) {
    std::copy(positive[k].begin(), positive[k].end(), coefficients_.begin() + k * r);
    roots_.push_back(combine(std::span<const int>(positive[k])));
  }
  for (std::size_t k = 0; k < n_pos; ++k) {
    for (std::size_t j = 0; j < r; ++j) coefficients_[(n_pos + k) * r + j] = -positive[k][j];
    roots_.push_back(-roots_[k]);
  }
}

RootVector RootSystem::combine(std::span<const ExactScalar> simple_coeffs) const {
  if (simple_coeffs.size() != rank()) throw DimensionError("coefficient count differs from rank");
  RootVector out(ambient_dim());
  for (std::size_t i = 0; i < rank(); ++i)
    if (simple_coeffs[i] != 0) out += simple_[i] * simple_coeffs[i];
  return out;
}

RootVector RootSystem::combine(std::span<const int> simple_coeffs) const {
  std::vector<ExactScalar> c(simple_coeffs.begin(), simple_coeffs.end());
  return combine(std::span<const ExactScalar>(c));
}

RootSystem build_root_system(RootSystemName name) { return RootSystem(name, simple_roots_for(name)); }

RootVector coroot(const RootVector& beta) {
  if (beta.is_zero()) throw DomainError("coroot of the zero vector");
  return beta * (ExactScalar(2) / inner(beta, beta));
}

ExactScalar coroot_pairing(const RootVector& v, const RootVector& beta) {
  if (beta.is_zero()) throw DomainError("pairing with the coroot of the zero vector");
  return 2 * inner(v, beta) / inner(beta, beta);
}

std::vector<RootVector> positive_roots(const RootSystem& rs) {
  const auto pos = rs.positive_roots();
  return {pos.begin(), pos.end()};
}

RootVector weyl_vector(const RootSystem& rs) {
  RootVector sum(rs.ambient_dim());
  for (const auto& beta : rs.positive_roots()) sum += beta;
  return sum * ExactScalar(1, 2);
}

RootVector principal_sl2_vector(const RootSystem& rs) {
  const std::vector<ExactScalar> twos(rs.rank(), ExactScalar(2));
  const auto coeffs = solve_exact(rs.gram(), twos);
  return rs.combine(std::span<const ExactScalar>(coeffs));
}

ExactScalar dynkin_index_principal(const RootSystem& rs) {
  const RootVector f = principal_sl2_vector(rs);
  return inner(f, f) / inner(rs.highest_root(), rs.highest_root());
}

EmbeddingAngle embedding_angle_cos(const RootSystem& rs, const RootVector& w) {
  if (w.is_zero()) throw DomainError("embedding angle of the zero vector");
  const RootVector f = principal_sl2_vector(rs);
  const ExactScalar wf = inner(w, f);
  ExactScalar cos2 = wf * wf / (inner(w, w) * inner(f, f));
  cos2.canonicalize();
  return {cos2, sqrt(from_exact(cos2))};
}

DualEmbeddingNorm dual_embedding_norm(const RootSystem& rs) {
  if (rs.name() != RootSystemName::G2)
    throw DomainError("dual embedding norm is only defined for G2, not " + to_string(rs.name()));
  // 2 rho measured with the long-root-norm-2 form: (2 rho, 2 rho) = 56/3.
  const RootVector two_rho = weyl_vector(rs) * ExactScalar(2);
  const RootVector f = principal_sl2_vector(rs);
  const ExactScalar norm = inner(two_rho, two_rho);
  ExactScalar factor = norm / inner(f, f);
  factor.canonicalize();
  return {norm, factor};
}

}  // namespace mqtlab::liecore
