// Command-line front end: exact graded dimensions of free Lie algebras and
// their surface-relation quotients, eigenspace/lattice bound tables, and the
// crossover degree of the assembled inequality.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// exceeded.

#include "liedim/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

void add_format_flags(CLI::App* cmd, liedim::RunConfig& cfg) {
  cmd->add_flag_callback("--json", [&cfg] { cfg.format = liedim::OutputFormat::json; },
                         "emit JSON instead of TSV");
  cmd->add_flag_callback("--tsv", [&cfg] { cfg.format = liedim::OutputFormat::tsv; },
                         "emit TSV (default)");
}

void add_budget_flags(CLI::App* cmd, liedim::RunConfig& cfg) {
  cmd->add_option("--budget-alphabet", cfg.budget.max_alphabet,
                  "largest alphabet the oracle will materialize (default 6)");
  cmd->add_option("--budget-degree", cfg.budget.max_degree,
                  "largest degree the oracle will materialize (default 8)");
}

void add_pairing_flag(CLI::App* cmd, liedim::RunConfig& cfg) {
  cmd->add_option_function<std::string>(
      "--pairing",
      [&cfg](const std::string& v) {
        if (v == "consecutive") cfg.pairing = liedim::SymplecticPairing::consecutive;
        else if (v == "split") cfg.pairing = liedim::SymplecticPairing::split;
        else throw CLI::ValidationError("--pairing must be consecutive or split");
      },
      "symplectic pairing of the generators: consecutive (default) or split");
}

}  // namespace

int main(int argc, char** argv) {
  liedim::RunConfig cfg;
  std::string range = "2..4";
  std::string b_text, c0_text = "0", m_text, a_text, aprime_text;

  CLI::App app{"exact graded dimensions of free Lie algebras and surface quotients"};
  app.require_subcommand(1);

  CLI::App* hall = app.add_subcommand("hall", "generate the leveled Hall basis");
  hall->add_option("--k", cfg.k, "alphabet size (>= 2)")->required();
  hall->add_option("--max-degree", cfg.max_degree, "largest degree to generate")->required();
  add_format_flags(hall, cfg);

  CLI::App* dims = app.add_subcommand("dims", "oracle dimensions vs closed forms per degree");
  dims->add_option("--g", cfg.g, "genus (alphabet is 2g)")->required();
  dims->add_option("--n", range, "degree range a..b (a >= 2)")->required();
  add_format_flags(dims, cfg);
  add_budget_flags(dims, cfg);
  add_pairing_flag(dims, cfg);

  CLI::App* bounds = app.add_subcommand("bounds", "eigenspace and flag bound tables per degree");
  bounds->add_option("--g", cfg.g, "genus (>= 2)")->required();
  bounds->add_option("--n", range, "degree range a..b (a >= 2)")->required();
  add_format_flags(bounds, cfg);

  CLI::App* zeros = app.add_subcommand("zeros", "multi-index fibers under an exponent matrix");
  zeros->add_option("--g", cfg.g, "genus (matrix must have 2g rows)")->required();
  zeros->add_option("--n", cfg.n, "degree (indices have weight <= n-2)")->required();
  zeros->add_option("--matrix", cfg.matrix_file, "exponent matrix, CSV or JSON")->required();
  zeros->add_option("--profile", cfg.profile_file, "annihilator root profile, JSON");
  add_format_flags(zeros, cfg);

  CLI::App* crossover = app.add_subcommand("crossover", "locate the bound crossover degree");
  crossover->add_option("--g", cfg.g, "genus (>= 2)")->required();
  crossover->add_option("--B", b_text, "direct obstruction coefficient (rational p/q)");
  crossover->add_option("--m", m_text, "per-zero multiplicity (with --A/--Aprime)");
  crossover->add_option("--A", a_text, "zero-count slope (rational p/q)");
  crossover->add_option("--Aprime", aprime_text, "non-vanishing slope (rational p/q)");
  crossover->add_option("--c0", c0_text, "constant absorbing degrees 1 and 2");
  crossover->add_option("--horizon", cfg.horizon, "last degree scanned (default 200)");
  add_format_flags(crossover, cfg);

  CLI::App* verify = app.add_subcommand("verify", "full formula-vs-oracle suite within budget");
  verify->add_option("--g", cfg.g, "genus")->required();
  verify->add_option("--max-n", cfg.max_n, "largest degree checked by the oracle")->required();
  add_format_flags(verify, cfg);
  add_budget_flags(verify, cfg);
  add_pairing_flag(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the error message
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (dims->parsed() || bounds->parsed()) {
      const auto [lo, hi] = liedim::parse_range(range);
      cfg.n_lo = lo;
      cfg.n_hi = hi;
    }
    if (hall->parsed()) cfg.cmd = liedim::Command::hall;
    if (dims->parsed()) cfg.cmd = liedim::Command::dims;
    if (bounds->parsed()) cfg.cmd = liedim::Command::bounds;
    if (zeros->parsed()) cfg.cmd = liedim::Command::zeros;
    if (crossover->parsed()) {
      cfg.cmd = liedim::Command::crossover;
      cfg.c0 = liedim::BigCount(c0_text);
      if (!b_text.empty() && !m_text.empty())
        throw std::invalid_argument("crossover: --B and --m/--A/--Aprime are exclusive");
      if (!m_text.empty()) {
        if (a_text.empty() || aprime_text.empty())
          throw std::invalid_argument("crossover: --m requires --A and --Aprime");
        liedim::ObstructionParams::Split split;
        split.m = liedim::BigCount(m_text);
        split.A = liedim::parse_rational(a_text);
        split.Aprime = liedim::parse_rational(aprime_text);
        cfg.obstruction.split = split;
      } else {
        cfg.obstruction.direct = b_text.empty() ? liedim::Rat(0) : liedim::parse_rational(b_text);
      }
    }
    if (verify->parsed()) cfg.cmd = liedim::Command::verify;
    return liedim::run(cfg, std::cout);
  } catch (const liedim::BudgetError& e) {
    std::cout.flush();
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
