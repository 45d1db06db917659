// Command-line front end: field selection, subcommand dispatch, and
// machine-readable reports. Exit codes: 0 success, 1 discrepancy, 2 usage.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "diffspec/decompose.hpp"
#include "diffspec/equation.hpp"
#include "diffspec/field.hpp"
#include "diffspec/report.hpp"
#include "diffspec/spectrum.hpp"
#include "diffspec/verify.hpp"

namespace {

using namespace diffspec;

struct CliConfig {
  unsigned n = 0;
  std::string modulus_hex;
  std::string format = "table";
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  bool timings = false;
};

std::optional<std::uint64_t> parse_modulus(const std::string& hex) {
  if (hex.empty()) return std::nullopt;
  std::size_t used = 0;
  std::uint64_t value = std::stoull(hex, &used, 16);
  if (used != hex.size()) throw std::invalid_argument("malformed modulus: " + hex);
  return value;
}

RunReport run_spectrum(const Field& field, const CliConfig& cfg,
                       const std::optional<std::uint64_t>& d) {
  if (d) {
    SpectrumHistogram h = brute_spectrum(field, *d, cfg.jobs);
    return make_spectrum_report(field, h, false, "", {});
  }
  SpectrumHistogram closed = closed_form_spectrum(field);
  const unsigned n = field.quartic_n();
  if (n > 3) {
    return make_spectrum_report(field, closed, false,
                                "oracle skipped: brute-force cross-check needs n <= 3", {});
  }
  SpectrumHistogram brute = brute_spectrum(field, closed.d, cfg.jobs);
  std::vector<std::string> discrepancies;
  if (!(brute == closed))
    discrepancies.push_back("closed-form spectrum differs from brute force");
  return make_spectrum_report(field, closed, true, "", std::move(discrepancies));
}

RunReport run_solve(const Field& field, const CliConfig& cfg, const std::string& b_hex,
                    const std::string& method) {
  (void)cfg;
  const FieldElement b = field.parse_hex(b_hex);
  const BClass cls = classify_b(b);
  const std::uint64_t predicted = count_solutions(b);
  const unsigned n = field.quartic_n();

  std::optional<SolutionSet> sols;
  std::string note;
  if (method == "brute") {
    sols = brute_force_solutions(b);
  } else if (method == "constructive") {
    if (cls == BClass::Lambda)
      sols = solve_constructive(b);
    else if (cls == BClass::One || cls == BClass::MuQ1NotOne)
      sols = solve_mu_case(b);
    else
      throw std::invalid_argument("class NONE has no constructive route");
  } else {  // auto
    switch (cls) {
      case BClass::Lambda:
        sols = solve_constructive(b);
        break;
      case BClass::One:
      case BClass::MuQ1NotOne:
        if (n <= 8)
          sols = solve_mu_case(b);
        else
          note = "solution list omitted: it grows as q^2 and needs n <= 8";
        break;
      case BClass::None:
        if (n <= 4)
          sols = brute_force_solutions(b);
        else
          note = "no solutions (closed form); brute verification needs n <= 4";
        break;
    }
  }
  return make_solve_report(field, b, cls, predicted, sols, note);
}

RunReport run_lambda(const Field& field, bool enumerate) {
  const std::uint64_t q = field.q();
  const std::uint64_t closed = q * q * q * (q - 1) / 2;
  std::optional<std::vector<FieldElement>> elements;
  if (enumerate) elements = lambda_enumerate(field);
  return make_lambda_report(field, closed, elements);
}

RunReport run_decompose(const Field& field, const std::string& x_hex) {
  const FieldElement x = field.parse_hex(x_hex);
  return make_decompose_report(field, x, decompose(x));
}

RunReport run_verify(const Field& field, const CliConfig& cfg, bool inject_fault) {
  VerifyOptions opts;
  opts.jobs = cfg.jobs;
  opts.seed = cfg.seed;
  opts.inject_fault = inject_fault;
  opts.progress = field.quartic_n() >= 4;
  return make_verify_report(field, run_full_verification(field, opts));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary-field differential spectrum and equation toolkit"};
  app.set_config("--config", "", "key=value file mirroring the global flags");

  CliConfig cfg;
  app.add_option("--n", cfg.n, "extension parameter: the field is GF(2^(4n)), q = 2^n")
      ->check(CLI::Range(1u, 15u))
      ->required();
  app.add_option("--modulus", cfg.modulus_hex,
                 "modulus override as hex (bit i = coefficient of x^i)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads for full-field scans (0 = auto)")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized spot checks")
      ->capture_default_str();
  app.add_flag("--timings", cfg.timings, "include elapsed_ms in json/csv output");

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "differential spectrum (closed form, or brute force for --d)");
  std::optional<std::uint64_t> d_opt;
  spectrum_cmd->add_option("--d", d_opt, "exponent for a brute-force spectrum");

  auto* solve_cmd = app.add_subcommand("solve", "solve x^d + (x+1)^d = b");
  std::string b_hex, method = "auto";
  solve_cmd->add_option("--b", b_hex, "right-hand side as hex")->required();
  solve_cmd->add_option("--method", method, "solver choice")
      ->check(CLI::IsMember({"auto", "brute", "constructive"}))
      ->capture_default_str();

  auto* lambda_cmd = app.add_subcommand("lambda", "size (and elements) of the Lambda set");
  bool enumerate = false;
  lambda_cmd->add_flag("--enumerate", enumerate, "scan the field and list the elements");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "multiplicative decomposition x = x1 x2 x3");
  std::string x_hex;
  decompose_cmd->add_option("--x", x_hex, "element to decompose, as hex")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  bool inject_fault = false;
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");  // self-check hook, hidden

  app.require_subcommand(1);
  for (CLI::App* sub : {spectrum_cmd, solve_cmd, lambda_cmd, decompose_cmd, verify_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    const Field field = make_field(cfg.n, parse_modulus(cfg.modulus_hex));
    const OutputFormat format = parse_output_format(cfg.format);

    const auto started = std::chrono::steady_clock::now();
    RunReport report;
    if (spectrum_cmd->parsed())
      report = run_spectrum(field, cfg, d_opt);
    else if (solve_cmd->parsed())
      report = run_solve(field, cfg, b_hex, method);
    else if (lambda_cmd->parsed())
      report = run_lambda(field, enumerate);
    else if (decompose_cmd->parsed())
      report = run_decompose(field, x_hex);
    else
      report = run_verify(field, cfg, inject_fault);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();

    const bool timing = cfg.timings || format == OutputFormat::Table;
    std::cout << render_report(report, format, timing);
    return report.exit_code();
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
