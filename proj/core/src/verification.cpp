#include "mqtlab/verification.hpp"

#include "mqtlab/casimir.hpp"
#include "mqtlab/cosh_law.hpp"
#include "mqtlab/fsu2.hpp"
#include "mqtlab/lagrangian.hpp"
#include "mqtlab/root_system.hpp"
#include "mqtlab/series.hpp"
#include "mqtlab/weyl_group.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace mqtlab {

namespace {

using liecore::RootSystemName;

struct Checks {
  std::vector<Check>& out;
  int criterion;

  void exact(std::string name, const std::string& computed, const std::string& expected) {
    out.push_back({criterion, std::move(name), computed, expected, "exact", "", computed == expected});
  }
  void relative(std::string name, const BigReal& computed, const BigReal& expected, const std::string& expected_text,
                const std::string& tolerance) {
    const BigReal err = relative_error(computed, expected);
    out.push_back({criterion, std::move(name), to_decimal(computed, 15), expected_text, tolerance,
                   to_decimal(err, 2), err <= parse_decimal(tolerance)});
  }
  void bound(std::string name, const BigReal& deviation, const std::string& tolerance, std::string what) {
    out.push_back({criterion, std::move(name), what, "< " + tolerance, tolerance, to_decimal(deviation, 2),
                   deviation < parse_decimal(tolerance)});
  }
};

void g2_geometry(std::vector<Check>& out) {
  Checks c{out, 1};
  const auto g2 = liecore::build_root_system(RootSystemName::G2);
  c.exact("g2 simple root 1", to_string(g2.simple_roots()[0]), "(-1/3, 2/3, -1/3)");
  c.exact("g2 simple root 2", to_string(g2.simple_roots()[1]), "(1, -1, 0)");
  const int six[] = {3, 2};
  c.exact("g2 alpha6 = 3a1 + 2a2", to_string(g2.combine(six)), "(1, 0, -1)");
  c.exact("g2 highest root", to_string(g2.highest_root()), "(1, 0, -1)");
  const RootVector f = liecore::principal_sl2_vector(g2);
  const int f_coeffs[] = {18, 10};
  c.exact("g2 f", to_string(f), "(4, 2, -6)");
  c.exact("g2 f = 18a1 + 10a2", to_string(g2.combine(f_coeffs)), to_string(f));
  c.exact("g2 (f, f)", to_string(inner(f, f)), "56");
  c.exact("g2 cos^2 a", to_string(liecore::embedding_angle_cos(g2, g2.highest_root()).cos2), "25/28");
  c.exact("g2 dual norm", to_string(liecore::dual_embedding_norm(g2).norm), "56/3");
  c.exact("g2 dynkin index", to_string(liecore::dynkin_index_principal(g2)), "28");
  c.exact("nucleon form ratio i", to_string(mqt::nucleon_form_ratio()), "224/9");
}

void weyl_orders(std::vector<Check>& out, bool order_only) {
  Checks c{out, 2};
  const std::pair<RootSystemName, const char*> expected[] = {
      {RootSystemName::A1, "2"},    {RootSystemName::A2, "6"},    {RootSystemName::G2, "12"},
      {RootSystemName::D4, "192"},  {RootSystemName::F4, "1152"}, {RootSystemName::E6, "51840"}};
  for (const auto& [name, order] : expected) {
    const auto rs = liecore::build_root_system(name);
    const std::size_t n = order_only ? liecore::weyl_group_order(rs) : liecore::weyl_group(rs).order();
    c.exact("|W(" + liecore::to_string(name) + ")|", std::to_string(n), order);
  }
}

void root_counts(std::vector<Check>& out) {
  Checks c{out, 3};
  const std::pair<RootSystemName, const char*> expected[] = {
      {RootSystemName::A1, "2"},  {RootSystemName::A1xA1, "4"}, {RootSystemName::A2, "6"},
      {RootSystemName::G2, "12"}, {RootSystemName::D4, "24"},   {RootSystemName::F4, "48"},
      {RootSystemName::E6, "72"}};
  for (const auto& [name, count] : expected) {
    const auto rs = liecore::build_root_system(name);
    c.exact("root count " + liecore::to_string(name), std::to_string(rs.all_roots().size()), count);
    const RootVector f = liecore::principal_sl2_vector(rs);
    bool all_two = true;
    for (const auto& a : rs.simple_roots()) all_two = all_two && inner(a, f) == 2;
    c.exact("(a_i, f) = 2 for " + liecore::to_string(name), all_two ? "true" : "false", "true");
  }
  const auto g2 = liecore::build_root_system(RootSystemName::G2);
  const int rho[] = {5, 3};
  c.exact("rho(G2) = 5a1 + 3a2", to_string(liecore::weyl_vector(g2)), to_string(g2.combine(rho)));
}

void casimir_and_projector(std::vector<Check>& out) {
  Checks c{out, 4};
  c.exact("C(1)", std::to_string(qsymbols::casimir_sl2(1)), "3");
  c.exact("C(2)", std::to_string(qsymbols::casimir_sl2(2)), "8");
  ExactScalar ratio(qsymbols::casimir_sl2(2), qsymbols::casimir_sl2(1));
  ratio.canonicalize();
  c.exact("C(2)/C(1)", to_string(ratio), "8/3");

  // sl2 basis e, f, h: the projector vanishes on every pair.
  const std::vector<ExactMatrix> sl2 = {
      ExactMatrix(2, 2, {0, 1, 0, 0}), ExactMatrix(2, 2, {0, 0, 1, 0}), ExactMatrix(2, 2, {1, 0, 0, -1})};
  bool zero = true;
  for (const auto& x : sl2)
    for (const auto& y : sl2) zero = zero && qsymbols::lagrangian_projector(x, y).is_zero();
  c.exact("projector vanishes for n = 2", zero ? "true" : "false", "true");

  const ExactMatrix x(3, 3, {1, 2, 0, -1, 3, 5, 4, 0, -4});
  const ExactMatrix y(3, 3, {mpq_class(1, 2), 0, 7, 2, -3, 1, -1, 1, mpq_class(5, 2)});
  const ExactMatrix reconstructed = qsymbols::recombine(qsymbols::decompose_tensor(x, y));
  c.exact("decomposition reconstructs x y", reconstructed == x * y ? "true" : "false", "true");
}

void numeric_rows(std::vector<Check>& out, const mqt::MqtReport& report) {
  for (const auto& ref : mqt::reference_values()) {
    if (ref.criterion < 5) continue;
    Checks c{out, ref.criterion};
    c.relative(std::string(ref.quantity), report.row(ref.quantity).computed, parse_decimal(ref.literal),
               std::string(ref.literal), std::string(ref.tolerance));
  }
}

void fsu2_properties(std::vector<Check>& out) {
  Checks c{out, 15};
  const BigReal tolerance = parse_decimal("1e-25");
  for (const char* eps : {"1.1", "2.0"}) {
    const auto rep = qsymbols::fsu2_generators(parse_decimal(eps), parse_decimal("0.7"), 64);
    bool shifts = true;
    for (auto label : {qsymbols::QLabel::a, qsymbols::QLabel::b, qsymbols::QLabel::c, qsymbols::QLabel::d})
      shifts = shifts && qsymbols::respects_degree_shift(rep.op(label));
    c.exact(std::string("degree shift, eps = ") + eps, shifts ? "true" : "false", "true");
    const auto verdict = qsymbols::determine_convention(rep, tolerance);
    c.exact(std::string("unique q convention, eps = ") + eps,
            verdict.unique ? qsymbols::to_string(*verdict.unique) : "none",
            qsymbols::to_string(qsymbols::QConvention::q_is_inverse_def_step));
  }
}

void cosh_properties(std::vector<Check>& out) {
  Checks c{out, 16};
  PrecisionScope scope(100);
  const BigReal h = parse_decimal("1e-20");
  BigReal ode(0), identity(0);
  for (int k = 1; k <= 30; ++k) {
    const BigReal u = BigReal(k) / 10;
    const BigReal value = qsymbols::cosh_law(u);
    const BigReal second = (qsymbols::cosh_law(u + h) - 2 * value + qsymbols::cosh_law(u - h)) / (h * h);
    const BigReal slope = qsymbols::cosh_law_slope(u);
    ode = std::max(ode, BigReal(abs(second - value)));
    identity = std::max(identity, BigReal(abs(value * value - slope * slope - 1)));
  }
  c.bound("max |K'' - K| on u = 0.1 .. 3.0", ode, "1e-30", "30 points");
  c.bound("max |K^2 - K'^2 - 1| on u = 0.1 .. 3.0", identity, "1e-30", "30 points");
}

void series_convergence(std::vector<Check>& out, const std::vector<std::uint64_t>& ns) {
  Checks c{out, 17};
  const auto study = mqt::series_study(mqt::kAllSeriesVariants, ns);
  for (const auto& s : study.summaries) {
    const auto last = std::find_if(study.rows.rbegin(), study.rows.rend(),
                                   [&](const mqt::SeriesStudyRow& r) { return r.variant == s.variant; });
    c.bound("series " + mqt::to_string(s.variant) + " fitted-constant step", s.last_step, "1e-3",
            "C(" + std::to_string(last->n) + ") = " + to_decimal(last->fitted, 12) + " vs " +
                mqt::kSigmaAsymptoteConstant);
  }
}

void precision_robustness(std::vector<Check>& out, const mqt::ConstantsProfile& profile,
                          const mqt::ChainOptions& options) {
  Checks c{out, 18};
  mqt::ChainOptions low = options, high = options;
  low.precision = 50;
  high.precision = 80;
  const auto a = mqt::run_full_chain(profile, low);
  const auto b = mqt::run_full_chain(profile, high);
  PrecisionScope scope(80);
  BigReal worst(0);
  std::string worst_row = "-";
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const BigReal& x = a.rows[i].computed;
    const BigReal& y = b.rows[i].computed;
    const BigReal diff = y == 0 ? BigReal(abs(x)) : BigReal(abs(x - y) / abs(y));
    if (diff > worst || worst_row == "-") {
      worst = diff;
      worst_row = a.rows[i].quantity;
    }
  }
  c.bound("50 vs 80 digits, worst row", worst, "1e-40", worst_row);
}

}  // namespace

bool VerificationResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<int> VerificationResult::failed_criteria() const {
  std::set<int> failed;
  for (const auto& c : checks)
    if (!c.pass) failed.insert(c.criterion);
  return {failed.begin(), failed.end()};
}

VerificationResult verify_all(const mqt::ConstantsProfile& profile, const VerifyOptions& options) {
  VerificationResult result;
  auto& out = result.checks;
  g2_geometry(out);
  weyl_orders(out, options.weyl_order_only);
  root_counts(out);
  casimir_and_projector(out);
  numeric_rows(out, mqt::run_full_chain(profile, options.chain));
  {
    PrecisionScope scope(options.chain.precision);
    fsu2_properties(out);
  }
  cosh_properties(out);
  if (options.series_ns.size() >= 2) series_convergence(out, options.series_ns);
  precision_robustness(out, profile, options.chain);
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.criterion < b.criterion; });
  return result;
}

std::string verification_table(const VerificationResult& result) {
  std::ostringstream out;
  for (const auto& c : result.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.criterion << "] " << c.name << ": computed "
        << c.computed << ", expected " << c.expected;
    if (c.tolerance != "exact") out << ", tol " << c.tolerance;
    if (!c.error.empty()) out << ", err " << c.error;
    out << '\n';
  }
  const auto failed = result.failed_criteria();
  out << (failed.empty() ? "all criteria pass" : std::to_string(failed.size()) + " criteria failing:");
  for (int f : failed) out << ' ' << f;
  out << '\n';
  return out.str();
}

}  // namespace mqtlab
