// hypercert: exact verification sweeps over Dist(U_r) and U(F_q).
//
// Exit status: 0 every check passed, 1 a mathematical check failed,
// 2 the configuration or command line is invalid.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypercert/errors.hpp"
#include "hypercert/field.hpp"
#include "hypercert/hyperalgebra.hpp"
#include "hypercert/module_io.hpp"
#include "hypercert/suites.hpp"

namespace {

constexpr int kConfigError = 2;

int write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write " << path << '\n';
    return kConfigError;
  }
  return 0;
}

hypercert::RationalModule build_module(const std::string& family, const std::string& tag_name, std::uint32_t p,
                                       std::uint32_t r, std::uint32_t s, std::uint32_t degree) {
  using namespace hypercert;
  const RootSystemTag tag = RootSystemTag::from_name(tag_name);
  const FieldPtr f = build_field(p, r * s);
  if (family == "trivial") return trivial_module(f, tag, r);
  if (family == "regular") {
    const auto a = tag.kind() == RootKind::A1 ? line_algebra(p, r, f) : heisenberg_algebra(p, r, f);
    return regular_module(a);
  }
  if (tag.kind() != RootKind::A1) throw ConfigError("family '" + family + "' exists only for A1");
  if (family == "natural") return natural_sl2(f, r);
  if (family == "sym") return sym_power(f, r, degree);
  const RationalModule st = steinberg(f, p, r);
  if (family == "steinberg") return st;
  if (family == "pullback") {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) q *= p;
    return pullback_additive(st, AdditivePolynomial::lang_type(f, q));
  }
  throw ConfigError("unknown module family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for projectivity over Frobenius kernels and finite unipotent groups"};
  app.require_subcommand(1);

  std::string target_name, format = "table", output;
  std::vector<std::string> tags, families;
  std::vector<std::uint32_t> ps, rs;
  std::uint32_t ext = 1;
  std::uint64_t seed = 1;
  bool override_guard = false;

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a report");
  verify->add_option("target", target_name, "lemma-span | borel-basis | counterexample | section3 | algebra-laws | all")
      ->required();
  verify->add_option("--p", ps, "Comma-separated primes")->delimiter(',');
  verify->add_option("--r", rs, "Comma-separated Frobenius levels")->delimiter(',');
  verify->add_option("--tag", tags, "A1 and/or A2_unipotent")->delimiter(',');
  verify->add_option("--module", families, "natural,sym,steinberg,regular,pullback,direct_sums")->delimiter(',');
  verify->add_option("--ext-degree", ext, "Work over GF(p^(r*s)) for this s")->check(CLI::Range(1u, 64u));
  verify->add_option("--format", format, "table | structured")->check(CLI::IsMember({"table", "structured"}));
  verify->add_option("--seed", seed, "Seed for randomized property checks");
  verify->add_flag("--override-size-guard", override_guard, "Allow objects above dimension 10000");
  verify->add_option("--output", output, "Write the report to this file instead of stdout");

  std::string family, tag_name = "A1";
  std::uint32_t mp = 2, mr = 1, ms = 1, degree = 1;
  auto* exportm = app.add_subcommand("export-module", "Print a module in the hypercert.module/1 JSON format");
  exportm->add_option("family", family, "trivial | natural | sym | steinberg | regular | pullback")->required();
  exportm->add_option("--tag", tag_name, "A1 or A2_unipotent");
  exportm->add_option("--p", mp, "Prime")->required();
  exportm->add_option("--r", mr, "Frobenius level");
  exportm->add_option("--ext-degree", ms, "Extension degree s")->check(CLI::Range(1u, 64u));
  exportm->add_option("--degree", degree, "Degree d for the sym family");
  exportm->add_option("--output", output, "Write to this file instead of stdout");

  std::string module_file;
  auto* checkm = app.add_subcommand("check-module", "Validate a module file and report its projectivity verdicts");
  checkm->add_option("file", module_file, "Module in the hypercert.module/1 JSON format")->required();
  checkm->add_option("--format", format, "table | structured")->check(CLI::IsMember({"table", "structured"}));
  checkm->add_option("--seed", seed, "Seed for sampled checks");
  checkm->add_option("--output", output, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*exportm) return write_out(hypercert::serialize_module(build_module(family, tag_name, mp, mr, ms, degree)), output);

    const auto fmt = format == "structured" ? hypercert::ReportFormat::Structured : hypercert::ReportFormat::Table;
    if (*checkm) {
      std::ifstream in(module_file, std::ios::binary);
      if (!in) throw hypercert::ConfigError("cannot read " + module_file);
      const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const hypercert::Report report = hypercert::check_module(hypercert::parse_module(text), seed);
      if (const int rc = write_out(hypercert::emit_report(report, fmt), output)) return rc;
      return hypercert::exit_status(report);
    }

    const auto target = hypercert::parse_target(target_name);
    if (!target) throw hypercert::ConfigError("unknown target '" + target_name + "'");
    hypercert::SweepConfig cfg = hypercert::make_config(tags, ps, rs, families);
    cfg.ext_degree = ext;
    cfg.seed = seed;
    cfg.override_size_guard = override_guard;
    cfg.format = fmt;
    const hypercert::Report report = hypercert::run_verify(*target, cfg);
    if (const int rc = write_out(hypercert::emit_report(report, cfg.format), output)) return rc;
    return hypercert::exit_status(report);
  } catch (const hypercert::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
