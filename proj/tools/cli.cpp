#include "cli.hpp"

#include "mqtlab/errors.hpp"
#include "mqtlab/oracle.hpp"
#include "mqtlab/report.hpp"
#include "mqtlab/root_system.hpp"
#include "mqtlab/series.hpp"
#include "mqtlab/verification.hpp"
#include "mqtlab/version.hpp"
#include "mqtlab/weyl_group.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace mqtlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string profile = "paper";
  unsigned precision = kDefaultPrecision;
  std::string format = "table";
  std::string out_path;
  std::string psi_source = "measured";
  std::string proton_psi = "duality";
};

struct State {
  Config config;
  std::string system;
  std::string query;
  bool enumerate = false;
  bool order_only = false;
  std::vector<std::string> variants;
  std::vector<std::uint64_t> ns;
  std::vector<std::uint64_t> verify_ns = {1'000'000, 10'000'000, 100'000'000};
  std::function<int(State&, std::ostream&, std::ostream&)> action;
};

const std::vector<std::string> kRootQueries = {"simple", "positive", "highest", "rho",
                                               "principal", "index", "weyl-order"};

void add_precision(CLI::App* app, Config& c) {
  app->add_option("--precision", c.precision, "Working precision in decimal digits")
      ->check(CLI::Range(kMinPrecision, 100000u))
      ->capture_default_str();
}

void add_profile(CLI::App* app, Config& c) {
  app->add_option("--profile", c.profile, "Builtin profile name (paper, codata) or profile file path")
      ->capture_default_str();
}

void add_format(CLI::App* app, Config& c, std::vector<std::string> formats) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(formats)))->capture_default_str();
}

void add_out(CLI::App* app, Config& c) { app->add_option("--out", c.out_path, "Write output to this file"); }

void add_chain_flags(CLI::App* app, Config& c) {
  app->add_option("--psi-source", c.psi_source, "Moment used for psi = alpha'/p")
      ->check(CLI::IsMember({"measured", "calculated"}))
      ->capture_default_str();
  app->add_option("--proton-psi", c.proton_psi, "Placement of psi in the proton mass prefactor")
      ->check(CLI::IsMember({"duality", "printed"}))
      ->capture_default_str();
}

mqt::ChainOptions chain_options(const Config& c) {
  return {c.precision, c.psi_source == "measured" ? mqt::PsiSource::measured : mqt::PsiSource::calculated,
          c.proton_psi == "duality" ? mqt::ProtonPsiPlacement::duality : mqt::ProtonPsiPlacement::printed_formula};
}

void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw ConfigError("--out", "cannot open output file " + c.out_path);
  file << text;
  if (!file) throw ConfigError("--out", "failed writing output file " + c.out_path);
}

std::string coefficient_text(std::span<const int> coeffs) {
  std::ostringstream s;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    s << (first ? (coeffs[i] < 0 ? "-" : "") : (coeffs[i] < 0 ? " - " : " + "));
    if (std::abs(coeffs[i]) != 1) s << std::abs(coeffs[i]);
    s << 'a' << i + 1;
    first = false;
  }
  return first ? "0" : s.str();
}

int cmd_roots(State& st, std::ostream& out, std::ostream& err) {
  const auto name = liecore::parse_root_system_name(st.system);
  if (!name) {
    err << "error: unknown root system '" << st.system << "'\n";
    return kExitUsage;
  }
  const auto rs = liecore::build_root_system(*name);
  const bool json = st.config.format == "json";
  std::ostringstream text;
  Json j;
  j["system"] = liecore::to_string(*name);
  j["query"] = st.query;

  if (st.query == "simple") {
    j["roots"] = Json::array();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      text << 'a' << i + 1 << " = " << to_string(rs.simple_roots()[i]) << '\n';
      j["roots"].push_back(to_string(rs.simple_roots()[i]));
    }
  } else if (st.query == "positive") {
    j["roots"] = Json::array();
    for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
      const std::string coeffs = coefficient_text(rs.simple_coefficients(i));
      text << to_string(rs.positive_roots()[i]) << " = " << coeffs << '\n';
      j["roots"].push_back({{"vector", to_string(rs.positive_roots()[i])}, {"simple", coeffs}});
    }
  } else if (st.query == "highest") {
    const std::size_t i = rs.positive_roots().size() - 1;
    const std::string coeffs = coefficient_text(rs.simple_coefficients(i));
    text << to_string(rs.highest_root()) << " = " << coeffs << '\n';
    j["vector"] = to_string(rs.highest_root());
    j["simple"] = coeffs;
  } else if (st.query == "rho") {
    const auto rho = liecore::weyl_vector(rs);
    text << to_string(rho) << ", norm " << to_string(inner(rho, rho)) << '\n';
    j["vector"] = to_string(rho);
    j["norm"] = to_string(inner(rho, rho));
  } else if (st.query == "principal") {
    const auto f = liecore::principal_sl2_vector(rs);
    PrecisionScope scope(st.config.precision);
    const auto angle = liecore::embedding_angle_cos(rs, rs.highest_root());
    text << to_string(f) << ", norm " << to_string(inner(f, f)) << '\n';
    j["vector"] = to_string(f);
    j["norm"] = to_string(inner(f, f));
    j["cos2_highest"] = to_string(angle.cos2);
    j["cos_highest"] = to_decimal(angle.cos, 30);
  } else if (st.query == "index") {
    const auto index = liecore::dynkin_index_principal(rs);
    text << to_string(index) << '\n';
    j["index"] = to_string(index);
  } else {
    const std::size_t order = st.enumerate ? liecore::weyl_group(rs).order() : liecore::weyl_group_order(rs);
    text << order << '\n';
    j["order"] = order;
  }
  emit(st.config, out, json ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

int cmd_mqt_run(State& st, std::ostream& out, std::ostream&) {
  const auto profile = mqt::resolve_profile(st.config.profile);
  const auto report = mqt::run_full_chain(profile, chain_options(st.config));
  const std::string& f = st.config.format;
  emit(st.config, out, f == "json" ? mqt::to_json(report) : f == "csv" ? mqt::to_csv(report) : mqt::to_table(report));
  return kExitOk;
}

int cmd_mqt_oracle(State& st, std::ostream& out, std::ostream&) {
  const auto profile = mqt::resolve_profile(st.config.profile);
  const auto rows = mqt::oracle_study(profile, st.config.precision);
  if (st.config.format != "json") {
    emit(st.config, out, mqt::oracle_table(rows));
    return kExitOk;
  }
  PrecisionScope scope(st.config.precision);
  Json j;
  j["meta"] = {{"profile", profile.name}, {"precision", st.config.precision}, {"version", kVersion}};
  j["rows"] = Json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"quantity", r.quantity},
                         {"value", to_decimal(r.value)},
                         {"reference", r.reference ? Json(to_decimal(*r.reference)) : Json(nullptr)},
                         {"rel_err", r.rel_err ? Json(to_decimal(*r.rel_err)) : Json(nullptr)},
                         {"note", r.note}});
  }
  emit(st.config, out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(State& st, std::ostream& out, std::ostream&) {
  const auto profile = mqt::resolve_profile(st.config.profile);
  VerifyOptions options;
  options.chain = chain_options(st.config);
  options.weyl_order_only = st.order_only;
  options.series_ns = st.verify_ns;
  const auto result = verify_all(profile, options);
  if (st.config.format == "json") {
    Json j;
    j["meta"] = {{"profile", profile.name}, {"precision", st.config.precision}, {"version", kVersion}};
    j["passed"] = result.passed();
    j["failed_criteria"] = result.failed_criteria();
    j["checks"] = Json::array();
    for (const auto& c : result.checks)
      j["checks"].push_back({{"criterion", c.criterion},
                             {"name", c.name},
                             {"computed", c.computed},
                             {"expected", c.expected},
                             {"tolerance", c.tolerance},
                             {"error", c.error},
                             {"pass", c.pass}});
    emit(st.config, out, j.dump(2) + "\n");
  } else {
    emit(st.config, out, verification_table(result));
  }
  return result.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_series(State& st, std::ostream& out, std::ostream& err) {
  std::vector<mqt::SeriesVariant> variants;
  for (const auto& v : st.variants) {
    const auto parsed = mqt::parse_series_variant(v);
    if (!parsed) {
      err << "error: unknown series variant '" << v << "'\n";
      return kExitUsage;
    }
    if (std::find(variants.begin(), variants.end(), *parsed) == variants.end()) variants.push_back(*parsed);
  }
  if (variants.empty()) variants.assign(mqt::kAllSeriesVariants.begin(), mqt::kAllSeriesVariants.end());
  if (st.ns.empty()) st.ns = {1'000'000, 10'000'000};

  PrecisionScope scope(st.config.precision);
  const auto study = mqt::series_study(variants, st.ns);
  const BigReal paper = parse_decimal(mqt::kSigmaAsymptoteConstant);
  const std::string& f = st.config.format;
  std::ostringstream text;
  if (f == "json") {
    Json j;
    j["meta"] = {{"precision", st.config.precision}, {"version", kVersion}, {"paper_constant", mqt::kSigmaAsymptoteConstant}};
    j["rows"] = Json::array();
    for (const auto& r : study.rows)
      j["rows"].push_back(
          {{"variant", mqt::to_string(r.variant)}, {"n", r.n}, {"sum", to_decimal(r.sum, 30)}, {"fitted", to_decimal(r.fitted, 30)}});
    j["summaries"] = Json::array();
    for (const auto& s : study.summaries)
      j["summaries"].push_back({{"variant", mqt::to_string(s.variant)},
                                {"extrapolated", to_decimal(s.extrapolated, 20)},
                                {"log_slope", to_decimal(s.log_slope, 12)},
                                {"last_step", to_decimal(s.last_step, 6)},
                                {"minus_paper", to_decimal(s.extrapolated - paper, 6)}});
    text << j.dump(2) << '\n';
  } else if (f == "csv") {
    text << "variant,n,sum,fitted\n";
    for (const auto& r : study.rows)
      text << mqt::to_string(r.variant) << ',' << r.n << ',' << to_decimal(r.sum, 30) << ',' << to_decimal(r.fitted, 30)
           << '\n';
  } else {
    text << std::left << std::setw(10) << "variant" << std::setw(12) << "N" << std::setw(40) << "sum"
         << "sum - ln(2N)\n";
    for (const auto& r : study.rows)
      text << std::left << std::setw(10) << mqt::to_string(r.variant) << std::setw(12) << r.n << std::setw(40)
           << to_decimal(r.sum, 30) << to_decimal(r.fitted, 30) << '\n';
    if (!study.summaries.empty()) {
      text << '\n'
           << std::left << std::setw(10) << "variant" << std::setw(28) << "extrapolated" << std::setw(20)
           << "log slope" << std::setw(14) << "last step" << "minus " << mqt::kSigmaAsymptoteConstant << '\n';
      for (const auto& s : study.summaries)
        text << std::left << std::setw(10) << mqt::to_string(s.variant) << std::setw(28)
             << to_decimal(s.extrapolated, 20) << std::setw(20) << to_decimal(s.log_slope, 12) << std::setw(14)
             << to_decimal(s.last_step, 3) << to_decimal(s.extrapolated - paper, 3) << '\n';
    }
  }
  emit(st.config, out, text.str());
  return kExitOk;
}

int cmd_constants_show(State& st, std::ostream& out, std::ostream&) {
  emit(st.config, out, mqt::serialize_profile(mqt::resolve_profile(st.config.profile)));
  return kExitOk;
}

int cmd_constants_list(State& st, std::ostream& out, std::ostream&) {
  std::string text;
  for (const auto& n : mqt::builtin_profile_names()) text += n + "\n";
  emit(st.config, out, text);
  return kExitOk;
}

void build_app(CLI::App& app, State& st) {
  app.description("Lie-algebraic toolkit and mass-quantification calculation chain");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.\n"
      "Numbers in json and csv output are decimal strings that round-trip at the stated precision.");

  auto* roots = app.add_subcommand("roots", "Query a root system");
  roots->add_option("system", st.system, "A1, A1xA1, A2, D4, F4, G2 or E6 (case-insensitive)")->required();
  roots->add_option("query", st.query, "What to print")->required()->check(CLI::IsMember(kRootQueries));
  roots->add_flag("--enumerate", st.enumerate, "weyl-order: enumerate the group instead of counting the rho orbit");
  add_precision(roots, st.config);
  add_format(roots, st.config, {"table", "json"});
  add_out(roots, st.config);
  roots->callback([&] { st.action = cmd_roots; });

  auto* mqt = app.add_subcommand("mqt", "Mass-quantification calculation chain");
  mqt->require_subcommand(1);
  auto* run = mqt->add_subcommand("run", "Evaluate the full chain and emit the report");
  add_profile(run, st.config);
  add_precision(run, st.config);
  add_format(run, st.config, {"table", "json", "csv"});
  add_out(run, st.config);
  add_chain_flags(run, st.config);
  run->callback([&] { st.action = cmd_mqt_run; });
  auto* oracle = mqt->add_subcommand("oracle", "Discrepancy study of the published values");
  add_profile(oracle, st.config);
  add_precision(oracle, st.config);
  add_format(oracle, st.config, {"table", "json"});
  add_out(oracle, st.config);
  oracle->callback([&] { st.action = cmd_mqt_oracle; });

  auto* verify = app.add_subcommand("verify", "Evaluate every acceptance check; exit 1 if any fails");
  add_profile(verify, st.config);
  add_precision(verify, st.config);
  add_format(verify, st.config, {"table", "json"});
  add_out(verify, st.config);
  add_chain_flags(verify, st.config);
  verify->add_flag("--order-only", st.order_only, "Count Weyl groups by the rho orbit instead of enumerating");
  verify->add_option("--series-n", st.verify_ns, "N values for the series convergence check")
      ->check(CLI::Range(std::uint64_t{1}, mqt::kSeriesGuard))
      ->capture_default_str();
  verify->callback([&] { st.action = cmd_verify; });

  auto* series = app.add_subcommand("series", "Brute-force partial sums and fitted constants");
  series->add_option("--variant", st.variants, "plain, evenS, oddT or splitSum; repeatable (default all)");
  series->add_option("--n", st.ns, "N values (default 1000000 10000000)");
  add_precision(series, st.config);
  add_format(series, st.config, {"table", "json", "csv"});
  add_out(series, st.config);
  series->callback([&] { st.action = cmd_series; });

  auto* constants = app.add_subcommand("constants", "Constants profiles");
  constants->require_subcommand(1);
  auto* show = constants->add_subcommand("show", "Print a profile in the key-value file format");
  add_profile(show, st.config);
  add_out(show, st.config);
  show->callback([&] { st.action = cmd_constants_show; });
  auto* export_cmd = constants->add_subcommand("export", "Write a profile to --out");
  add_profile(export_cmd, st.config);
  export_cmd->add_option("--out", st.config.out_path, "Destination file")->required();
  export_cmd->callback([&] { st.action = cmd_constants_show; });
  auto* list = constants->add_subcommand("list", "List builtin profiles");
  list->callback([&] { st.action = cmd_constants_list; });

  auto* man = app.add_subcommand("man", "Print the manual");
  man->callback([&] {
    st.action = [](State&, std::ostream& out, std::ostream&) {
      out << manual();
      return kExitOk;
    };
  });
}

void append_help(const CLI::App* app, std::ostringstream& text, const std::string& path) {
  text << "==== " << path << " ====\n" << app->help(path) << '\n';
  for (const auto* sub : app->get_subcommands({}))
    append_help(sub, text, path + " " + sub->get_name());
}

}  // namespace

std::string manual() {
  CLI::App app{"", "mqtlab"};
  State st;
  build_app(app, st);
  std::ostringstream text;
  text << "mqtlab " << kVersion << "\n\n";
  append_help(&app, text, "mqtlab");
  return text.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"", "mqtlab"};
  State st;
  build_app(app, st);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return st.action(st, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what();
    if (!e.key().empty()) err << " (key: " << e.key() << ")";
    err << '\n';
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace mqtlab::cli
