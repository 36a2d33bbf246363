#include "lcpol/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "lcpol/cech_oracle.hpp"
#include "lcpol/io.hpp"
#include "lcpol/polarization.hpp"
#include "lcpol/takayama.hpp"
#include "lcpol/verifier.hpp"

namespace lcpol::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input = "-";
  std::string field = "q";
  std::string format = "text";
  std::string degree;
  bool chain = false;
  bool depth_shift = false;
  bool no_oracle = false;
  std::size_t trials = 20;
  std::size_t n = 3;
  int max_exp = 3;
  std::size_t gens = 4;
  std::uint64_t seed = 1;
};

MonomialIdeal read_ideal(const Config& cfg, std::istream& in) {
  std::string text;
  if (cfg.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw UsageError("cannot open '" + cfg.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_ideal(text);
}

void emit_table(const LCTable& table, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << table_to_json(table).dump(2) << '\n';
  else if (format == "tsv")
    out << table_to_tsv(table);
  else
    out << table_to_text(table);
}

int emit_report(const VerificationReport& report, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << report_to_json(report).dump(2) << '\n';
  else
    out << report_to_text(report);
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_parse(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto ideal = read_ideal(cfg, in);
  if (cfg.format == "json")
    out << ideal_to_json(ideal).dump(2) << '\n';
  else
    out << format_ideal(ideal);
  return kExitOk;
}

int cmd_polarize(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto ideal = read_ideal(cfg, in);
  const auto polarized = polarize_ideal(ideal);
  if (cfg.format == "json") {
    auto j = ideal_to_json(polarized.ideal);
    j["origin_vars"] = ideal.var_names();
    j["origin_rho"] = polarized.rho;
    out << j.dump(2) << '\n';
  } else {
    out << format_ideal(polarized.ideal);
  }
  return kExitOk;
}

int cmd_complex(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto ideal = read_ideal(cfg, in);
  MultiDegree a;
  try {
    a = parse_degree(cfg.degree);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.size() != ideal.num_vars())
    throw UsageError("--degree has " + std::to_string(a.size()) + " entries, ideal has " +
                     std::to_string(ideal.num_vars()) + " variables");
  const auto complex = takayama_complex(ideal, a);
  if (cfg.format == "json") {
    auto j = complex_to_json(complex, ideal.var_names());
    j["vars"] = ideal.var_names();
    j["degree"] = a.entries();
    nlohmann::ordered_json lc = nlohmann::ordered_json::object();
    for (auto [i, h] : lc_dims(ideal, a, parse_field(cfg.field))) lc[std::to_string(i)] = h;
    j["local_cohomology"] = lc;
    out << j.dump(2) << '\n';
  } else {
    out << format_complex(complex, ideal.var_names()) << '\n';
  }
  return kExitOk;
}

int cmd_table(const Config& cfg, std::istream& in, std::ostream& out, bool oracle) {
  const auto ideal = read_ideal(cfg, in);
  const auto field = parse_field(cfg.field);
  const LCTable table =
      oracle ? build_table(ideal, field, cech_cohomology_dims) : lc_table(ideal, field);
  emit_table(table, cfg.format, out);
  return kExitOk;
}

int cmd_depth(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto ideal = read_ideal(cfg, in);
  if (ideal.is_unit()) throw UsageError("depth is undefined for the unit ideal (zero ring)");
  const auto dd = depth_and_dim(ideal, parse_field(cfg.field));
  if (cfg.format == "json") {
    out << nlohmann::ordered_json{{"depth", dd.depth}, {"dim", dd.dim}, {"cohen_macaulay", dd.cohen_macaulay()}}
               .dump(2)
        << '\n';
  } else {
    out << "depth " << dd.depth << "\ndim " << dd.dim << "\ncohen_macaulay "
        << (dd.cohen_macaulay() ? "true" : "false") << '\n';
  }
  return kExitOk;
}

VerificationReport full_verification(const MonomialIdeal& ideal, const FieldSpec& field,
                                     const Config& cfg) {
  const VerifyOptions options{!cfg.no_oracle};
  VerificationReport report = verify_main_theorem(ideal, field, options);
  if (cfg.chain) report.merge(verify_reduction_chain_box(ideal, field, options));
  if (cfg.depth_shift && !ideal.is_unit()) report.merge(verify_depth_shift(ideal, field));
  return report;
}

int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto ideal = read_ideal(cfg, in);
  if (cfg.depth_shift && ideal.is_unit())
    throw UsageError("--depth-shift is undefined for the unit ideal");
  return emit_report(full_verification(ideal, parse_field(cfg.field), cfg), cfg.format, out);
}

int cmd_fuzz(const Config& cfg, std::ostream& out) {
  if (cfg.n < 1 || cfg.max_exp < 1) throw UsageError("fuzz needs --n >= 1 and --max-exp >= 1");
  const auto field = parse_field(cfg.field);
  nlohmann::ordered_json failing = nlohmann::ordered_json::array();
  std::size_t checked = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto ideal = random_ideal(cfg.n, cfg.max_exp, cfg.gens, cfg.seed + t);
    const auto report = full_verification(ideal, field, cfg);
    ++checked;
    if (!report.passed()) failing.push_back(report_to_json(report));
  }
  const bool pass = failing.empty();
  if (cfg.format == "json") {
    out << nlohmann::ordered_json{{"trials", checked}, {"field", field.to_string()}, {"failures", failing},
                          {"pass", pass}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& f : failing) out << "FAIL " << f["ideal"].get<std::string>() << '\n';
    out << checked << " trials over " << field.to_string() << ", " << failing.size()
        << " failing\n"
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Graded local cohomology of monomial quotient rings and their polarizations"};
  app.require_subcommand(1);
  app.add_option("--field", cfg.field, "Coefficient field: q or gf:p")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Ideal file, or - for stdin");
    sub->add_option("--field", cfg.field, "Coefficient field: q or gf:p");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    return sub;
  };
  auto* parse = with_input(app.add_subcommand("parse", "Parse and print the minimalized ideal"));
  auto* polarize = with_input(app.add_subcommand("polarize", "Print the polarization"));
  auto* complex = with_input(app.add_subcommand("complex", "Print the Takayama complex at a degree"));
  complex->add_option("--degree", cfg.degree, "Comma-separated degree a_1,...,a_n")
      ->required()
      ->allow_extra_args(false);
  auto* table = with_input(app.add_subcommand("table", "Local cohomology table over the canonical box"));
  auto* oracle = with_input(app.add_subcommand("oracle", "Same table computed from the Čech complex"));
  auto* depth = with_input(app.add_subcommand("depth", "Depth and dimension"));
  auto* verify = with_input(app.add_subcommand("verify", "Check the polarization isomorphism"));
  verify->add_flag("--chain", cfg.chain, "Also check the reduction steps at every box degree");
  verify->add_flag("--depth-shift", cfg.depth_shift, "Also check the depth/dim shift");
  verify->add_flag("--no-oracle", cfg.no_oracle, "Skip the Čech cross-check");
  auto* fuzz = app.add_subcommand("fuzz", "Verify random ideals");
  fuzz->add_option("--field", cfg.field, "Coefficient field: q or gf:p");
  fuzz->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  fuzz->add_option("--trials", cfg.trials, "Number of ideals")->capture_default_str();
  fuzz->add_option("--n", cfg.n, "Number of variables")->capture_default_str();
  fuzz->add_option("--max-exp", cfg.max_exp, "Largest exponent")->capture_default_str();
  fuzz->add_option("--gens", cfg.gens, "Candidate generators per ideal")->capture_default_str();
  fuzz->add_option("--seed", cfg.seed, "Seed of the first trial")->capture_default_str();
  fuzz->add_flag("--chain", cfg.chain, "Also check the reduction steps");
  fuzz->add_flag("--depth-shift", cfg.depth_shift, "Also check the depth/dim shift");
  fuzz->add_flag("--no-oracle", cfg.no_oracle, "Skip the Čech cross-check");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    parse_field(cfg.field);
    if (*parse) return cmd_parse(cfg, in, out);
    if (*polarize) return cmd_polarize(cfg, in, out);
    if (*complex) return cmd_complex(cfg, in, out);
    if (*table) return cmd_table(cfg, in, out, false);
    if (*oracle) return cmd_table(cfg, in, out, true);
    if (*depth) return cmd_depth(cfg, in, out);
    if (*verify) return cmd_verify(cfg, in, out);
    if (*fuzz) return cmd_fuzz(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace lcpol::cli
