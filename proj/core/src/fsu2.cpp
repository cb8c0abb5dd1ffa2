#include "mqtlab/fsu2.hpp"

#include "mqtlab/errors.hpp"

#include <algorithm>
#include <functional>

namespace mqtlab::qsymbols {

namespace {

BigComplex zero() { return {BigReal(0), BigReal(0)}; }
BigComplex real(const BigReal& x) { return {x, BigReal(0)}; }

PolyVector operator-(const PolyVector& u, const PolyVector& v) {
  PolyVector out{u.coeffs, u.overflow || v.overflow};
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = out.coeffs[i] - v.coeffs[i];
  return out;
}

PolyVector operator*(const BigReal& s, const PolyVector& v) {
  PolyVector out = v;
  for (auto& x : out.coeffs) x = s * x;
  return out;
}

BigReal max_modulus(const PolyVector& v) {
  BigReal m = 0;
  for (const auto& x : v.coeffs) m = max(m, x.modulus());
  return m;
}

}  // namespace

PolyVector basis_vector(const TruncatedPolySpace& space, std::size_t k) {
  if (k > space.max_degree) throw DomainError("basis index beyond truncation degree");
  PolyVector v{std::vector<BigComplex>(space.dimension(), zero()), false};
  v.coeffs[k] = real(BigReal(1));
  return v;
}

std::string to_string(QLabel label) {
  switch (label) {
    case QLabel::a: return "a";
    case QLabel::b: return "b";
    case QLabel::c: return "c";
    case QLabel::d: return "d";
  }
  return "?";
}

PolyVector QOperator::apply(const PolyVector& v) const {
  if (v.coeffs.size() != weights_.size()) throw DimensionError("vector size differs from operator size");
  PolyVector out{std::vector<BigComplex>(weights_.size(), zero()), v.overflow};
  const auto n = static_cast<std::ptrdiff_t>(weights_.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const BigComplex& x = v.coeffs[static_cast<std::size_t>(k)];
    if (x.is_zero()) continue;
    const BigComplex image = weights_[static_cast<std::size_t>(k)] * x;
    const std::ptrdiff_t target = k + shift_;
    if (target < 0 || target >= n) {
      if (!image.is_zero()) out.overflow = true;
      continue;
    }
    out.coeffs[static_cast<std::size_t>(target)] = image;
  }
  return out;
}

std::vector<std::vector<BigComplex>> QOperator::matrix() const {
  const auto n = static_cast<std::ptrdiff_t>(weights_.size());
  std::vector<std::vector<BigComplex>> m(weights_.size(), std::vector<BigComplex>(weights_.size(), zero()));
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const std::ptrdiff_t row = k + shift_;
    if (row >= 0 && row < n) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] = weights_[static_cast<std::size_t>(k)];
  }
  return m;
}

const QOperator& Fsu2Representation::op(QLabel label) const {
  switch (label) {
    case QLabel::a: return a;
    case QLabel::b: return b;
    case QLabel::c: return c;
    case QLabel::d: return d;
  }
  return a;
}

Fsu2Representation fsu2_generators(const BigReal& def_step, const BigReal& theta, std::size_t max_degree) {
  if (!(def_step > 1)) throw DomainError("deformation step must exceed 1");
  if (max_degree < 2) throw DomainError("truncation degree must be at least 2");

  const std::size_t n = max_degree + 1;
  const BigComplex t{cos(theta), sin(theta)};
  const BigComplex t_inv{cos(theta), -sin(theta)};
  std::vector<BigComplex> wa, wb, wc, wd;
  wa.reserve(n);
  wb.reserve(n);
  wc.reserve(n);
  wd.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const BigReal kk(static_cast<long>(k));
    wa.push_back({BigReal(sqrt(1 - pow(def_step, -2 * kk))), BigReal(0)});
    wb.push_back(BigReal(-pow(def_step, -kk - 1)) * t_inv);
    wc.push_back(BigReal(pow(def_step, -kk)) * t);
    wd.push_back({BigReal(sqrt(1 - pow(def_step, -2 * kk - 2))), BigReal(0)});
  }
  return {TruncatedPolySpace{max_degree}, def_step, theta,
          QOperator(QLabel::a, -1, std::move(wa)), QOperator(QLabel::b, 0, std::move(wb)),
          QOperator(QLabel::c, 0, std::move(wc)), QOperator(QLabel::d, +1, std::move(wd))};
}

bool respects_degree_shift(const QOperator& op) {
  const auto m = op.matrix();
  const auto n = static_cast<std::ptrdiff_t>(m.size());
  for (std::ptrdiff_t row = 0; row < n; ++row)
    for (std::ptrdiff_t col = 0; col < n; ++col)
      if (!m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero() && row != col + op.shift())
        return false;
  return true;
}

std::string to_string(QConvention convention) {
  return convention == QConvention::q_is_def_step ? "q = eps" : "q = 1/eps";
}

BigReal RelationReport::worst() const {
  BigReal w = 0;
  for (const auto& r : residuals) w = max(w, r.max_residual);
  return w;
}

RelationReport check_relations(const Fsu2Representation& rep, QConvention convention) {
  const BigReal q = convention == QConvention::q_is_def_step ? rep.def_step : BigReal(1 / rep.def_step);
  const BigReal q_diff = q - 1 / q;

  const auto ab = [&](const QOperator& x, const QOperator& y, const PolyVector& v) { return x.apply(y.apply(v)); };
  using Relation = std::function<PolyVector(const PolyVector&)>;
  const std::vector<std::pair<std::string, Relation>> relations = {
      {"ab = q ba", [&](const PolyVector& e) { return ab(rep.a, rep.b, e) - q * ab(rep.b, rep.a, e); }},
      {"ac = q ca", [&](const PolyVector& e) { return ab(rep.a, rep.c, e) - q * ab(rep.c, rep.a, e); }},
      {"bd = q db", [&](const PolyVector& e) { return ab(rep.b, rep.d, e) - q * ab(rep.d, rep.b, e); }},
      {"cd = q dc", [&](const PolyVector& e) { return ab(rep.c, rep.d, e) - q * ab(rep.d, rep.c, e); }},
      {"bc = cb", [&](const PolyVector& e) { return ab(rep.b, rep.c, e) - ab(rep.c, rep.b, e); }},
      {"ad - da = (q - 1/q) bc",
       [&](const PolyVector& e) { return ab(rep.a, rep.d, e) - ab(rep.d, rep.a, e) - q_diff * ab(rep.b, rep.c, e); }},
      {"ad - q bc = 1", [&](const PolyVector& e) { return ab(rep.a, rep.d, e) - q * ab(rep.b, rep.c, e) - e; }},
  };

  RelationReport report{convention, {}};
  for (const auto& [name, residual] : relations) {
    BigReal worst = 0;
    for (std::size_t k = 1; k < rep.space.max_degree; ++k)
      worst = max(worst, max_modulus(residual(basis_vector(rep.space, k))));
    report.residuals.push_back({name, worst});
  }
  return report;
}

ConventionVerdict determine_convention(const Fsu2Representation& rep, const BigReal& tolerance) {
  ConventionVerdict verdict;
  std::vector<QConvention> passing;
  for (auto conv : {QConvention::q_is_def_step, QConvention::q_is_inverse_def_step}) {
    verdict.reports.push_back(check_relations(rep, conv));
    if (verdict.reports.back().worst() < tolerance) passing.push_back(conv);
  }
  if (passing.size() == 1) verdict.unique = passing.front();
  return verdict;
}

}  // namespace mqtlab::qsymbols
