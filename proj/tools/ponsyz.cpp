// Command-line front end: syzygies, splitting types, Poncelet hypersurfaces
// and the verification suites.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "ponsyz/cli/commands.hpp"
#include "ponsyz/io.hpp"

namespace {

using ponsyz::cli::Outcome;

int emit(const Outcome& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.report.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygies of binary forms and Poncelet hypersurfaces, in exact arithmetic"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 0;
  int trials = 5;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for randomized constructions");
  app.add_option("--trials", trials, "Number of randomized trials")->check(CLI::PositiveNumber);

  std::string system_path;
  std::size_t degree = 1;
  auto* syzygy = app.add_subcommand("syzygy", "Syzygies of degree d of a linear system");
  syzygy->add_option("--system", system_path, "System file")->required();
  syzygy->add_option("-d,--degree", degree, "Syzygy degree")->required();

  auto* splitting = app.add_subcommand("splitting", "Splitting type of the kernel bundle");
  splitting->add_option("--system", system_path, "System file")->required();

  std::string points_text;
  auto* basepoints = app.add_subcommand("basepoints", "Factor the Poncelet polynomial along base points");
  basepoints->add_option("--system", system_path, "System file")->required();
  basepoints->add_option("--points", points_text, "Base points as a:b pairs (detected when omitted)");

  std::string compare_path;
  auto* poncelet = app.add_subcommand("poncelet", "Poncelet matrix and hypersurface equation");
  poncelet->add_option("--system", system_path, "System file")->required();
  poncelet->add_option("--compare", compare_path, "Polynomial or matrix file to compare up to scalar");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  // Suites accept the global flags after their own name as well.
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Seed for randomized constructions");
    sub->add_option("--trials", trials, "Number of randomized trials")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  long k = 0;
  long n = 0;
  long r = 1;
  long d = 1;
  auto* dime = verify->add_subcommand("dime", "Stratum codimension: expected vs tangent vs h1");
  dime->add_option("-k", k, "Projective dimension of the system")->required();
  dime->add_option("-n", n, "Degree of the forms")->required();
  dime->add_option("-r", r, "Number of syzygies")->required();
  dime->add_option("-d", d, "Syzygy degree")->required();
  add_globals(dime);

  auto* teorema = verify->add_subcommand("teorema", "Lines and singular vertices of systems with a linear syzygy");
  teorema->add_option("-n", n, "Degree of the forms")->required();
  teorema->add_option("-k", k, "Projective dimension of the system")->required();
  teorema->add_option("--points", points_text, "n-1 distinct a:b parameters")->required();
  add_globals(teorema);

  std::optional<std::size_t> base_degree;
  auto* tpenc = verify->add_subcommand("tpenc", "Factorization of Poncelet polynomials with base points");
  tpenc->add_option("-n", n, "Degree of the forms")->required();
  tpenc->add_option("-k", k, "Projective dimension of the system")->required();
  tpenc->add_option("--base-degree", base_degree, "Degree of the planted base divisor");
  add_globals(tpenc);

  std::size_t probes = 100;
  auto* prozero = verify->add_subcommand("prozero", "Zero loci of Schwarzenberger sections");
  prozero->add_option("-n", n, "Degree of the section")->required();
  prozero->add_option("-k", k, "Projective dimension")->required();
  prozero->add_option("--points", points_text, "n distinct a:b roots of the section (random when omitted)");
  prozero->add_option("--probes", probes, "Random probes comparing the two membership tests");
  add_globals(prozero);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; every other parse failure is a usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : ponsyz::cli::kUsageError;
  }

  std::string command;
  try {
    if (syzygy->parsed()) {
      command = "syzygy";
      return emit(ponsyz::cli::cmd_syzygy(ponsyz::read_system_file(system_path), degree), format);
    }
    if (splitting->parsed()) {
      command = "splitting";
      return emit(ponsyz::cli::cmd_splitting(ponsyz::read_system_file(system_path)), format);
    }
    if (basepoints->parsed()) {
      command = "basepoints";
      std::optional<std::vector<ponsyz::Param>> roots;
      if (!points_text.empty()) roots = ponsyz::parse_params(points_text);
      return emit(ponsyz::cli::cmd_basepoints(ponsyz::read_system_file(system_path), roots), format);
    }
    if (poncelet->parsed()) {
      command = "poncelet";
      const auto system = ponsyz::read_system_file(system_path);
      std::optional<ponsyz::MPoly> compare;
      if (!compare_path.empty())
        compare = ponsyz::parse_polynomial_or_matrix(ponsyz::detail::read_file(compare_path), system.k() + 2);
      return emit(ponsyz::cli::cmd_poncelet(system, compare), format);
    }
    if (k < 0 || n < 0) throw ponsyz::Error(ponsyz::ErrorKind::InvalidArgument, "n and k must be non-negative");
    const auto nn = static_cast<std::size_t>(n);
    const auto kk = static_cast<std::size_t>(k);
    if (dime->parsed()) {
      command = "verify dime";
      return emit(ponsyz::cli::cmd_verify_dime(k, n, r, d, trials, seed), format);
    }
    if (teorema->parsed()) {
      command = "verify teorema";
      return emit(ponsyz::cli::cmd_verify_teorema(nn, kk, ponsyz::parse_params(points_text), seed), format);
    }
    if (tpenc->parsed()) {
      command = "verify tpenc";
      return emit(ponsyz::cli::cmd_verify_tpenc(nn, kk, base_degree, trials, seed), format);
    }
    if (prozero->parsed()) {
      command = "verify prozero";
      std::optional<std::vector<ponsyz::Param>> roots;
      if (!points_text.empty()) roots = ponsyz::parse_params(points_text);
      return emit(ponsyz::cli::cmd_verify_prozero(nn, kk, roots, probes, seed), format);
    }
  } catch (const ponsyz::Error& e) {
    const Outcome out = ponsyz::cli::error_outcome(command, e);
    if (format == "json") {
      std::cout << out.report.dump(2) << "\n";
    } else {
      std::cerr << out.text;
    }
    return out.exit_code;
  }
  return ponsyz::cli::kUsageError;
}
