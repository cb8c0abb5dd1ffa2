#include "mqtlab/constants.hpp"

#include "mqtlab/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mqtlab::mqt {

namespace {

using Member = DecimalConstant ConstantsProfile::*;

constexpr std::array<std::pair<std::string_view, Member>, 14> kMembers = {{
    {"alpha_prime", &ConstantsProfile::alpha_prime},
    {"m_e_kg", &ConstantsProfile::m_e_kg},
    {"m_e_kg_nucleon", &ConstantsProfile::m_e_kg_nucleon},
    {"m_e_GeV_em", &ConstantsProfile::m_e_GeV_em},
    {"c", &ConstantsProfile::c},
    {"planck_h", &ConstantsProfile::planck_h},
    {"planck_h_newton", &ConstantsProfile::planck_h_newton},
    {"G_measured", &ConstantsProfile::G_measured},
    {"p_measured", &ConstantsProfile::p_measured},
    {"m_n_measured", &ConstantsProfile::m_n_measured},
    {"m_p_measured", &ConstantsProfile::m_p_measured},
    {"m_mu_measured", &ConstantsProfile::m_mu_measured},
    {"m_tau_measured", &ConstantsProfile::m_tau_measured},
    {"electronvolt_J", &ConstantsProfile::electronvolt_J},
}};

Member member_for(std::string_view key) {
  for (const auto& [name, member] : kMembers)
    if (name == key) return member;
  throw ConfigError(std::string(key), "unknown constants key '" + std::string(key) + "'");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

ConstantsProfile make_paper() {
  ConstantsProfile p;
  p.name = "paper";
  p.alpha_prime = DecimalConstant("0.00116140981411");
  p.m_e_kg = DecimalConstant("9.109384e-31");
  p.m_e_kg_nucleon = DecimalConstant("9.10938215e-31");
  p.m_e_GeV_em = DecimalConstant("0.440023544386");
  p.c = DecimalConstant("299792458");
  p.planck_h = DecimalConstant("6.6260755e-34");
  p.planck_h_newton = DecimalConstant("6.626176e-34");
  p.G_measured = DecimalConstant("6.67259e-11");
  // Unrounded measured anomaly behind the quoted 0.001159652.
  p.p_measured = DecimalConstant("0.0011596521859");
  p.m_n_measured = DecimalConstant("1.67492729e-27");
  p.m_p_measured = DecimalConstant("1.672621637e-27");
  p.m_mu_measured = DecimalConstant("0.1056");
  p.m_tau_measured = DecimalConstant("1.784");
  p.electronvolt_J = DecimalConstant("1.60217653e-19");
  return p;
}

ConstantsProfile make_codata() {
  ConstantsProfile p;
  p.name = "codata";
  p.alpha_prime = DecimalConstant("0.0011614097328884377145");
  p.m_e_kg = DecimalConstant("9.1093837015e-31");
  p.m_e_kg_nucleon = DecimalConstant("9.1093837015e-31");
  p.m_e_GeV_em = DecimalConstant("0.43998163226094244940");
  p.c = DecimalConstant("299792458");
  p.planck_h = DecimalConstant("6.62607015e-34");
  p.planck_h_newton = DecimalConstant("6.62607015e-34");
  p.G_measured = DecimalConstant("6.67430e-11");
  p.p_measured = DecimalConstant("0.00115965218128");
  p.m_n_measured = DecimalConstant("1.67492749804e-27");
  p.m_p_measured = DecimalConstant("1.67262192369e-27");
  p.m_mu_measured = DecimalConstant("0.1056583755");
  p.m_tau_measured = DecimalConstant("1.77686");
  p.electronvolt_J = DecimalConstant("1.602176634e-19");
  return p;
}

}  // namespace

DecimalConstant::DecimalConstant(std::string text) : text_(std::move(text)) {
  if (!is_decimal_literal(text_)) throw DomainError("not a decimal literal: '" + text_ + "'");
  PrecisionScope scope(kMinPrecision);
  if (!(parse_decimal(text_) > 0)) throw DomainError("constant must be strictly positive: " + text_);
}

const DecimalConstant& field(const ConstantsProfile& profile, std::string_view key) {
  return profile.*member_for(key);
}

DecimalConstant& field(ConstantsProfile& profile, std::string_view key) { return profile.*member_for(key); }

const ConstantsProfile& paper_profile() {
  static const ConstantsProfile profile = make_paper();
  return profile;
}

const ConstantsProfile& codata_profile() {
  static const ConstantsProfile profile = make_codata();
  return profile;
}

std::optional<ConstantsProfile> builtin_profile(std::string_view name) {
  if (name == "paper") return paper_profile();
  if (name == "codata") return codata_profile();
  return std::nullopt;
}

std::vector<std::string> builtin_profile_names() { return {"paper", "codata"}; }

ConstantsProfile parse_profile(std::string_view text, std::string default_name) {
  ConstantsProfile profile;
  profile.name = std::move(default_name);
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(key, "duplicate constants key '" + key + "'");
    if (key == "name") {
      if (value.empty()) throw ConfigError(key, "empty profile name");
      profile.name = value;
      continue;
    }
    const Member member = member_for(key);
    try {
      profile.*member = DecimalConstant(value);
    } catch (const DomainError& e) {
      throw ConfigError(key, "invalid value for '" + key + "': " + e.what());
    }
  }
  for (const auto key : kProfileNumericKeys)
    if (!seen.contains(std::string(key)))
      throw ConfigError(std::string(key), "missing constants key '" + std::string(key) + "'");
  return profile;
}

ConstantsProfile load_profile_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open constants profile '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str(), path.stem().string());
}

ConstantsProfile resolve_profile(std::string_view name_or_path) {
  if (auto builtin = builtin_profile(name_or_path)) return *builtin;
  return load_profile_file(std::filesystem::path(std::string(name_or_path)));
}

std::string serialize_profile(const ConstantsProfile& profile) {
  std::ostringstream out;
  out << "name = " << profile.name << '\n';
  for (const auto key : kProfileNumericKeys) out << key << " = " << field(profile, key).literal() << '\n';
  return out.str();
}

}  // namespace mqtlab::mqt
