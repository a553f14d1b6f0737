#include "app/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using ghyp::cli::Command;
  ghyp::cli::RunConfig cfg;
  double zero_tol = 0.0;

  CLI::App app{"ghyp: matrix-symbol analysis of invariant operators on T^d and SU(2)"};
  app.set_version_flag("--version", ghyp::cli::version());
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--cutoff", cfg.cutoff, "eigenvalue cutoff on <xi> = sqrt(1 + nu)");
    sub->add_option("--lmax", cfg.lmax, "largest ell (su2) or |n| (torus), instead of --cutoff");
    sub->add_option("--out", cfg.out_path, "output directory")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for random sampling")->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "worker threads for per-xi work (0 = all cores)")->capture_default_str();
  };
  auto judging = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.judge.exceptional_budget, "exceptional frequencies allowed")->capture_default_str();
    sub->add_option("--zero-tol", zero_tol, "values below this count as zero (default relative to the median)");
    sub->add_option("--tail", cfg.judge.tail_fraction, "fraction of largest <xi> used in the fit")->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "profile, fit and verdict; writes report.json and profile.csv");
  analyze->add_option("--spec", cfg.spec_path, "operator spec JSON")->required();
  common(analyze);
  judging(analyze);
  analyze->callback([&] { cfg.command = Command::Analyze; });

  auto* profile = app.add_subcommand("profile", "lambda_min / m_xi profile only; writes profile.csv");
  profile->add_option("--spec", cfg.spec_path, "operator spec JSON")->required();
  common(profile);
  profile->callback([&] { cfg.command = Command::Profile; });

  auto* counter = app.add_subcommand("counterexample", "coefficients of a non-smooth u with Du smooth");
  counter->add_option("--spec", cfg.spec_path, "operator spec JSON")->required();
  counter->add_option("--count", cfg.count, "number of bad frequencies")->capture_default_str();
  common(counter);
  counter->callback([&] { cfg.command = Command::Counterexample; });

  auto* transform = app.add_subcommand("transform", "Fourier round trip of a CSV grid function");
  transform->add_option("--group", cfg.group, "su2 or torus:d")->required();
  transform->add_option("--input", cfg.input_path, "grid function CSV");
  transform->add_option("--emit-sample", cfg.emit_sample, "write a random band-limited sample CSV first");
  common(transform);
  transform->callback([&] { cfg.command = Command::Transform; });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");
  selftest->add_option("--out", cfg.out_path, "scratch directory")->capture_default_str();
  selftest->add_option("--seed", cfg.seed, "seed for random sampling")->capture_default_str();
  selftest->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  selftest->callback([&] { cfg.command = Command::Selftest; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : ghyp::cli::kExitError;
  }
  if (analyze->count("--zero-tol") > 0) cfg.judge.zero_tol = zero_tol;
  return ghyp::cli::run(cfg, std::cout, std::cerr);
}
