#include "cli.hpp"

#include "report.hpp"
#include "../selftest/battery.hpp"

#include "ghyp/fourier.hpp"
#include "ghyp/quadrature.hpp"
#include "ghyp/spec_io.hpp"
#include "ghyp/subelliptic.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace ghyp::cli {

namespace fs = std::filesystem;

const char* version() { return "1.0.0"; }

namespace {

fs::path prepare_out(const RunConfig& c) {
  fs::path dir(c.out_path.empty() ? "." : c.out_path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) throw Error("cannot create output directory '" + dir.string() + "'");
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << text;
  if (!f) throw Error("write failed for '" + path.string() + "'");
}

OptionsEcho echo_for(const RunConfig& c, const char* command, double cutoff) {
  OptionsEcho e{command, c.spec_path, cutoff, {}};
  e.extra["budget"] = static_cast<long long>(c.judge.exceptional_budget);
  if (c.judge.zero_tol) e.extra["zero_tol"] = *c.judge.zero_tol;
  else e.extra["zero_tol"] = std::string("default");
  e.extra["tail"] = c.judge.tail_fraction;
  e.extra["seed"] = static_cast<long long>(c.seed);
  return e;
}

Profile compute_profile(const AnalysisSpec& spec, double cutoff, int jobs) {
  if (spec.bundle) return profile_bundle(*spec.bundle, cutoff, jobs);
  if (spec.homogeneous) return profile_homogeneous(*spec.symbol, cutoff, jobs);
  return profile_group(*spec.symbol, cutoff, jobs);
}

int do_analyze(const RunConfig& c, std::ostream& out, bool report) {
  if (c.spec_path.empty()) throw Error("--spec is required");
  const AnalysisSpec spec = load_analysis_spec(c.spec_path);
  const double cutoff = resolve_cutoff(c, spec.group);
  const fs::path dir = prepare_out(c);
  const Profile p = compute_profile(spec, cutoff, c.jobs);

  std::ostringstream csv;
  write_profile_csv(csv, p);
  write_file(dir / "profile.csv", csv.str());
  if (!report) {
    out << "profile: " << p.entries.size() << " entries -> " << (dir / "profile.csv").string() << '\n';
    return kExitOk;
  }

  const AnalysisReport r = fit_and_judge(p, c.judge);
  std::optional<SubellipticBoundResult> bound;
  std::optional<DominationCheck> dom;
  if (spec.estimate) {
    std::vector<DualIndex> duals;
    for (const auto& e : p.entries) duals.push_back(e.xi);
    bound = bound_from_estimate(spec.estimate->C, spec.estimate->r, duals);
    dom = check_domination(p, *bound, std::pow(2.0 * spec.estimate->C, spec.estimate->r / 2.0));
  }
  write_file(dir / "report.json", report_json(echo_for(c, "analyze", cutoff), spec, p, r, bound, dom));
  out << "verdict: " << to_string(r.verdict) << " (k = " << r.fitted_k << ", C = " << r.fitted_C
      << ", exceptional = " << r.exceptional.size() << ")\n";
  out << "report: " << (dir / "report.json").string() << '\n';
  return r.verdict == Verdict::NOT_GH_EVIDENCE ? kExitNotGH : kExitOk;
}

int do_counterexample(const RunConfig& c, std::ostream& out) {
  if (c.spec_path.empty()) throw Error("--spec is required");
  if (c.count < 1) throw Error("--count must be positive");
  const AnalysisSpec spec = load_analysis_spec(c.spec_path);
  if (spec.homogeneous) throw Error("counterexample: the s2 analysis is not supported, use the group symbol");
  const double cutoff = resolve_cutoff(c, spec.group);
  const fs::path dir = prepare_out(c);
  const Counterexample ce = spec.bundle ? build_counterexample(*spec.bundle, c.count, cutoff)
                                        : build_counterexample(*spec.symbol, c.count, cutoff);
  OptionsEcho echo = echo_for(c, "counterexample", cutoff);
  echo.extra["count"] = static_cast<long long>(c.count);
  write_file(dir / "counterexample.json", counterexample_json(echo, ce));
  for (const auto& e : ce.certificate)
    out << "k=" << e.k << " xi=" << e.xi.label() << " lambda=" << e.lambda << " bound=" << e.bound << '\n';
  out << "counterexample: " << (dir / "counterexample.json").string() << '\n';
  return kExitOk;
}

GroupId transform_group(const RunConfig& c) {
  if (c.group.empty()) throw Error("--group is required for transform");
  return GroupId::parse(c.group);
}

int do_transform(const RunConfig& c, std::ostream& out) {
  const GroupId group = transform_group(c);
  const double band = resolve_cutoff(c, group);
  auto grid = std::make_shared<const QuadratureGrid>(build_grid(group, band));
  const auto duals = enumerate_dual(group, band);
  const RepTable table(*grid, duals);

  if (!c.emit_sample.empty()) {
    std::mt19937_64 rng(c.seed);
    std::normal_distribution<double> g(0.0, 1.0);
    FourierCoefficients hat(group);
    for (const auto& xi : duals) {
      Matrix m(xi.dim(), xi.dim());
      for (Eigen::Index p = 0; p < m.rows(); ++p)
        for (Eigen::Index q = 0; q < m.cols(); ++q) m(p, q) = Complex(g(rng), g(rng));
      hat.set(xi, m);
    }
    const GridFunction f = inverse_on_grid(hat, grid);
    std::ofstream file(c.emit_sample);
    if (!file) throw Error("cannot write '" + c.emit_sample + "'");
    write_grid_function_csv(file, f);
    out << "sample: " << grid->size() << " nodes -> " << c.emit_sample << '\n';
    if (c.input_path.empty()) return kExitOk;
  }

  if (c.input_path.empty()) throw Error("--input is required for transform");
  std::ifstream in(c.input_path);
  if (!in) throw Error("cannot read '" + c.input_path + "'");
  GridFunction f;
  try {
    f = read_grid_function_csv(in, grid);
  } catch (const ParseError& e) {
    throw ParseError(c.input_path + ": " + e.what());
  }
  const auto hats = forward_vector(f, table);
  const GridFunction back = inverse_on_grid(hats, grid);
  const double roundtrip = (back.values - f.values).cwiseAbs().maxCoeff();
  const double gn = grid_l2_norm(f);
  double fn_sq = 0.0;
  for (const auto& h : hats) fn_sq += std::pow(plancherel_norm(h), 2);
  const double fn = std::sqrt(fn_sq);
  const double planch = std::abs(gn - fn);

  const fs::path dir = prepare_out(c);
  OptionsEcho echo = echo_for(c, "transform", band);
  echo.extra["group"] = group.name();
  echo.extra["input"] = c.input_path;
  write_file(dir / "transform.json", transform_json(echo, roundtrip, planch, gn, fn, grid->size(), duals.size()));
  std::ofstream csv(dir / "roundtrip.csv");
  write_grid_function_csv(csv, back);
  out << "roundtrip residual: " << roundtrip << '\n';
  out << "plancherel residual: " << planch << '\n';
  return kExitOk;
}

int do_selftest(const RunConfig& c, std::ostream& out) {
  selftest::BatteryOptions opts;
  opts.seed = c.seed;
  opts.jobs = c.jobs;
  opts.scratch_dir = (prepare_out(c) / "selftest-scratch").string();
  const auto results = selftest::run_battery(opts);
  selftest::print_results(out, results);
  for (const auto& r : results)
    if (!r.pass) return kExitError;
  return kExitOk;
}

}  // namespace

double resolve_cutoff(const RunConfig& c, const GroupId& group) {
  if (c.cutoff && c.lmax) throw Error("give either --cutoff or --lmax, not both");
  double cutoff = 0.0;
  if (c.cutoff) {
    cutoff = *c.cutoff;
  } else if (c.lmax) {
    const double l = *c.lmax;
    if (!(l >= 0.0)) throw Error("--lmax must be nonnegative");
    if (group.is_su2()) {
      if (2.0 * l != std::round(2.0 * l)) throw Error("--lmax must be a half-integer for su2");
      cutoff = su2_cutoff_for_ell(l);
    } else {
      cutoff = std::sqrt(1.0 + l * l);
    }
  } else {
    throw Error("one of --cutoff or --lmax is required");
  }
  if (!(cutoff >= 1.0) || !std::isfinite(cutoff)) throw Error("cutoff must be a finite number >= 1");
  return cutoff;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Analyze: return do_analyze(config, out, true);
      case Command::Profile: return do_analyze(config, out, false);
      case Command::Counterexample: return do_counterexample(config, out);
      case Command::Transform: return do_transform(config, out);
      case Command::Selftest: return do_selftest(config, out);
    }
  } catch (const InsufficientBadFrequencies& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const BandLimitError& e) {
    err << "band-limit error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace ghyp::cli
