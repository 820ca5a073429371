#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "dq/config.hpp"
#include "dq/errors.hpp"

namespace {

void add_common(CLI::App* sub, dq::cli::Options& o) {
  sub->add_option("config", o.config, "problem file (TOML subset)")->required();
  sub->add_option("--order", o.order, "monomial order: lex, grlex, grevlex");
  sub->add_option("--trunc,-N", o.trunc, "truncation order N (work mod h^N)")->check(CLI::PositiveNumber);
  sub->add_option("--degree,-d", o.degree, "degree bound d");
  sub->add_option("--jobs,-j", o.jobs, "threads for parallel sweeps (1 = serial, 0 = auto)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--json", o.json_out, "write the JSON report here ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dq::cli;
  CLI::App app{"deformq: truncated star products, presentations and deformed quotients"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run the Poisson and star-product checks");
  add_common(check, o);
  auto* star = app.add_subcommand("star", "print f * g mod h^N");
  add_common(star, o);
  star->add_option("f", o.f)->required();
  star->add_option("g", o.g)->required();
  auto* present = app.add_subcommand("present", "generators and relations up to degree d");
  add_common(present, o);
  auto* quotient = app.add_subcommand("quotient", "deformed quotient by the configured ideal");
  add_common(quotient, o);
  quotient->add_option("--table-degree", o.table_degree, "basis degree for the multiplication table");
  auto* verify = app.add_subcommand("verify", "star-basis inverse and round-trip checks");
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (star->parsed()) return cmd_star(o);
    if (present->parsed()) return cmd_present(o);
    if (quotient->parsed()) return cmd_quotient(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const dq::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const dq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const dq::TruncationError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const dq::PreconditionError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kFail;
  } catch (const dq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
