#include "mqtlab/errors.hpp"
#include "mqtlab/report.hpp"

#include <doctest.h>

using namespace mqtlab;
using namespace mqtlab::mqt;

namespace {

// Independent mpmath evaluation at 80 digits (tests/oracles/chain_oracle.py).
const std::pair<const char*, const char*> kFrozenChain[] = {
    {"alpha", "0.00729735307963012677855246710790773785381728674"},
    {"inverse_alpha", "137.035989500275892213059442279758300185748416"},
    {"anomalous_moment_calc", "0.00115961131710158530032654386666666666666666667"},
    {"qft_second_order_gap", "6.60568690552955711162283993565128566489299027e-10"},
    {"psi", "1.00151565118521801770528616221702928452178413"},
    {"position_2N", "70843280468031629419392897052028042543.9155065"},
    {"h_over_c2", "7.37250327649050777977714925087526022914587628e-51"},
    {"electron_period_s", "8.09330606382441203464158416296344541974065017e-21"},
    {"universe_age_s", "573356351393133917.04707605787695599530737143"},
    {"universe_age_years", "18168566411.6768676023232456801834105035671734"},
    {"newton_lhs", "2.06019465393858712848544313648489973282415359e-40"},
    {"newton_rhs", "2.06016652191878593003429283466262549891108277e-40"},
    {"newton_ratio", "1.00001365521646036506502133655524476755388615"},
    {"G_solved", "6.67268111566080126732921072008516068353238517e-11"},
    {"g2_cos_a", "0.94491118252306806803629134058545015203937828"},
    {"neutron_lag", "0.386181207478148091518754889627121226803144928"},
    {"neutron_mass_kg", "1.67488838130321063406321686370095231214179593e-27"},
    {"proton_lag", "0.386766554629918249720914047028965005054582178"},
    {"proton_mass_kg", "1.67273260202259649518948882501620531183237962e-27"},
    {"muon_lag", "2.80668872793259576667499020495715444197422786"},
    {"muon_mass_GeV", "0.105931407327746806836314684464716766765180121"},
    {"tau_lag", "2.80744599993785356195976494883669549472618598"},
    {"tau_mass_GeV", "1.82146930309149635698231814419487649379934805"},
};

const char* kFrozenProtonPrinted = "1.67780700292306301061685401351520895579586476e-27";
const char* kFrozenDerivedEmMass = "0.439981644465593488638824234471661272104842047";

}  // namespace

TEST_CASE("full chain matches the independent oracle to 1e-35") {
  const auto report = run_full_chain(paper_profile());
  PrecisionScope scope(60);
  for (const auto& [quantity, value] : kFrozenChain) {
    CAPTURE(quantity);
    CHECK(relative_error(report.row(quantity).computed, parse_decimal(value)) < parse_decimal("1e-35"));
  }
}

TEST_CASE("exact rows") {
  const auto report = run_full_chain(paper_profile());
  PrecisionScope scope(60);
  CHECK(report.row("g2_dynkin_index").computed == 28);
  CHECK(report.row("g2_cos2_a").computed == from_exact(ExactScalar(25, 28)));
  CHECK(report.row("nucleon_form_ratio").computed == from_exact(ExactScalar(224, 9)));
  CHECK(nucleon_form_ratio() == ExactScalar(224, 9));
}

TEST_CASE("proton placement option and derived electromagnetic mass") {
  ChainOptions options;
  options.proton_placement = ProtonPsiPlacement::printed_formula;
  const auto report = run_full_chain(paper_profile(), options);
  PrecisionScope scope(60);
  CHECK(relative_error(report.row("proton_mass_kg").computed, parse_decimal(kFrozenProtonPrinted)) <
        parse_decimal("1e-35"));
  CHECK(relative_error(derived_em_mass_GeV(paper_profile()), parse_decimal(kFrozenDerivedEmMass)) <
        parse_decimal("1e-35"));
}

TEST_CASE("psi from the calculated moment") {
  ChainOptions options;
  options.psi_source = PsiSource::calculated;
  const auto report = run_full_chain(paper_profile(), options);
  PrecisionScope scope(60);
  const BigReal expected = paper_profile().alpha_prime.value() / report.row("anomalous_moment_calc").computed;
  CHECK(report.row("psi").computed == expected);
}

TEST_CASE("trivial and boundary values") {
  PrecisionScope scope(60);
  const BigReal tiny = parse_decimal("1e-50");
  CHECK(lepton_lag(BigReal(1)) == 0);
  CHECK(lepton_mass(BigReal(0), paper_profile(), Lepton::mu) == 2 * paper_profile().m_e_GeV_em.value());
  CHECK(abs(prime_from_alpha(alpha_from_prime(parse_decimal("0.001"))) - parse_decimal("0.001")) < tiny);
  CHECK(newton_lhs(BigReal(0), BigReal(5)) == 0);
  CHECK(nucleon_lag(BigReal(1), parse_decimal("0.007"), ExactScalar(224, 9)) == 0);
  CHECK_THROWS_AS(solve_position(BigReal(1)), DomainError);
  CHECK_THROWS_AS(solve_position(BigReal(0)), DomainError);
  CHECK_THROWS_AS(nucleon_lag(BigReal(0), parse_decimal("0.007"), ExactScalar(224, 9)), DomainError);
  CHECK_THROWS_AS(lepton_lag(parse_decimal("2")), DomainError);
  CHECK_THROWS_AS(psi(BigReal(1), BigReal(0)), DomainError);
}

TEST_CASE("solve_position is strictly decreasing and inverts the asymptote") {
  PrecisionScope scope(60);
  BigReal previous = solve_position(parse_decimal("0.001"));
  for (int k = 2; k <= 40; ++k) {
    const BigReal alpha = BigReal(k) / 1000;
    const BigReal n = solve_position(alpha);
    CHECK(n < previous);
    previous = n;
    // sigma_asymptote(2N / 2) = (2/pi) sqrt(1/alpha^2 - 1)
    const BigReal lhs = sigma_asymptote(n / 2);
    CHECK(abs(lhs - 2 / pi() * sqrt(1 / (alpha * alpha) - 1)) < parse_decimal("1e-30"));
  }
}

TEST_CASE("solve_G closes the Newton check") {
  const auto report = run_full_chain(paper_profile());
  PrecisionScope scope(60);
  auto profile = paper_profile();
  const BigReal g = report.row("G_solved").computed;
  profile.G_measured = DecimalConstant(to_decimal(g));
  const BigReal rhs = newton_rhs(profile, report.row("psi").computed, profile.alpha_prime.value());
  CHECK(relative_error(rhs, report.row("newton_lhs").computed) < parse_decimal("1e-30"));
}

TEST_CASE("nucleon mass with psi = 1 degenerates to the neutron formula") {
  PrecisionScope scope(60);
  const auto& p = paper_profile();
  const BigReal ap = p.alpha_prime.value();
  const BigReal alpha = alpha_from_prime(ap);
  const BigReal t = parse_decimal("0.3861");
  for (auto placement : {ProtonPsiPlacement::duality, ProtonPsiPlacement::printed_formula})
    CHECK(nucleon_mass(t, p, ap, alpha, BigReal(1), placement) == nucleon_mass(t, p, ap, alpha));
  CHECK(nucleon_lag(g2_embedding_cos(), alpha, nucleon_form_ratio(), BigReal(1)) ==
        nucleon_lag(g2_embedding_cos(), alpha, nucleon_form_ratio()));
}

TEST_CASE("errors name the failing quantity") {
  auto profile = paper_profile();
  profile.alpha_prime = DecimalConstant("0.5");
  try {
    run_full_chain(profile);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("position_2N") != std::string::npos);
  }
  CHECK_THROWS_AS(run_full_chain(paper_profile(), {40}), DomainError);
}

TEST_CASE("precision robustness: 50 vs 80 digits agree to 40 digits") {
  const auto low = run_full_chain(paper_profile(), {50});
  const auto high = run_full_chain(paper_profile(), {80});
  REQUIRE(low.rows.size() == high.rows.size());
  PrecisionScope scope(80);
  for (std::size_t i = 0; i < low.rows.size(); ++i) {
    CAPTURE(low.rows[i].quantity);
    CHECK(low.rows[i].quantity == high.rows[i].quantity);
    CHECK(relative_error(low.rows[i].computed, high.rows[i].computed) < parse_decimal("1e-40"));
  }
}

TEST_CASE("perturbed alpha' moves 2N and every mass out of tolerance") {
  auto profile = paper_profile();
  PrecisionScope scope(60);
  profile.alpha_prime = DecimalConstant(to_decimal(profile.alpha_prime.value() * parse_decimal("1.01")));
  const auto report = run_full_chain(profile);
  for (const char* q : {"position_2N", "neutron_mass_kg", "proton_mass_kg", "muon_mass_GeV", "tau_mass_GeV"}) {
    CAPTURE(q);
    const auto& row = report.row(q);
    CHECK(*row.rel_err_paper > parse_decimal(find_reference(q)->tolerance));
  }
}
