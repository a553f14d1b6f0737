#include "battery.hpp"

#include "oracles.hpp"
#include "../app/cli.hpp"

#include "ghyp/analyzer.hpp"
#include "ghyp/bundles.hpp"
#include "ghyp/fourier.hpp"
#include "ghyp/linalg.hpp"
#include "ghyp/quadrature.hpp"
#include "ghyp/symbols.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace ghyp::selftest {

namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << std::scientific << v;
  return s.str();
}

std::string fix(double v, int digits = 4) {
  std::ostringstream s;
  s << std::setprecision(digits) << std::fixed << v;
  return s.str();
}

// Random band-limited coefficients at every xi of the list.
FourierCoefficients random_coefficients(const GroupId& group, const std::vector<DualIndex>& duals,
                                        std::mt19937_64& rng) {
  FourierCoefficients hat(group);
  for (const auto& xi : duals) hat.set(xi, oracle::random_matrix(rng, xi.dim(), xi.dim()));
  return hat;
}

struct Corpus {
  std::shared_ptr<const QuadratureGrid> grid;
  std::vector<DualIndex> duals;
  std::vector<FourierCoefficients> hats;
  std::vector<GridFunction> samples;
};

Corpus make_corpus(const GroupId& group, double band, int count, std::mt19937_64& rng) {
  Corpus c;
  c.grid = std::make_shared<const QuadratureGrid>(build_grid(group, band));
  c.duals = enumerate_dual(group, band);
  for (int n = 0; n < count; ++n) {
    c.hats.push_back(random_coefficients(group, c.duals, rng));
    c.samples.push_back(inverse_on_grid(c.hats.back(), c.grid));
  }
  return c;
}

std::vector<Corpus> transform_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Corpus> out;
  out.push_back(make_corpus(GroupId::su2(), su2_cutoff_for_ell(3), 50, rng));
  out.push_back(make_corpus(GroupId::torus(1), std::sqrt(1.0 + 64.0), 50, rng));
  return out;
}

Outcome c1_roundtrip(const BatteryOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  double coeff_err = 0.0, sample_err = 0.0;
  for (const auto& c : transform_corpus(o.seed)) {
    const RepTable table(*c.grid, c.duals);
    for (std::size_t n = 0; n < c.hats.size(); ++n) {
      const FourierCoefficients back = forward(c.samples[n], table);
      for (const auto& xi : c.duals)
        coeff_err = std::max(coeff_err, (back.at(xi) - c.hats[n].at(xi)).cwiseAbs().maxCoeff());
      const GridFunction again = inverse_on_grid(back, c.grid);
      sample_err = std::max(sample_err, (again.values - c.samples[n].values).cwiseAbs().maxCoeff());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double err = std::max(coeff_err, sample_err);
  return {err < 1e-10 && secs < 30.0, "100 functions (su2 l<=3, T^1 |n|<=8), max coefficient error " + sci(coeff_err) +
                                          ", max sample error " + sci(sample_err) + " (< 1e-10), " + fix(secs, 2) +
                                          " s (< 30 s)"};
}

Outcome c2_plancherel(const BatteryOptions& o) {
  double worst = 0.0;
  for (const auto& c : transform_corpus(o.seed)) {
    for (std::size_t n = 0; n < c.hats.size(); ++n)
      worst = std::max(worst, std::abs(grid_l2_norm(c.samples[n]) - plancherel_norm(c.hats[n])));
  }
  return {worst < 1e-10, "max |grid L2 - Fourier L2| = " + sci(worst) + " (< 1e-10)"};
}

Outcome c3_hs_lower_bound(const BatteryOptions& o) {
  std::mt19937_64 rng(o.seed + 3);
  std::uniform_int_distribution<int> size(1, 6);
  int violations = 0, oracle_violations = 0;
  for (int n = 0; n < 500; ++n) {
    const int m = size(rng), k = size(rng), p = size(rng);
    const Matrix a = oracle::random_matrix(rng, m, k);
    // Mix in rank deficiency now and then.
    Matrix b = oracle::random_matrix(rng, k, p);
    if (n % 5 == 0) b.col(0).setZero();
    const HsLowerBoundCheck c = check_hs_lower_bound(a, b);
    if (!c.holds) ++violations;
    const double rhs = oracle::min_singular_value(a) * b.norm();
    if (c.lhs < rhs - 1e-12 * std::max({1.0, c.lhs, rhs})) ++oracle_violations;
  }
  return {violations == 0 && oracle_violations == 0,
          "500 random pairs up to 6x6: " + std::to_string(violations) + " violations, " +
              std::to_string(oracle_violations) + " against the quad-precision oracle"};
}

Outcome c4_neutral(const BatteryOptions& o) {
  std::ostringstream d;
  bool pass = true;

  const Profile p03 = profile_group(neutral_plus_c(0.3), su2_cutoff_for_ell(30), o.jobs);
  const AnalysisReport r03 = fit_and_judge(p03);
  const bool ok03 = r03.verdict == Verdict::GH_EVIDENCE && std::abs(r03.min_value - 0.2) <= 1e-12 &&
                    r03.fitted_k >= -0.05 && r03.fitted_k <= 0.05;
  pass = pass && ok03;
  d << "c=0.3: " << to_string(r03.verdict) << ", min " << fix(r03.min_value, 12) << ", k " << sci(r03.fitted_k);

  const Profile p05 = profile_group(neutral_plus_c(0.5), su2_cutoff_for_ell(40), o.jobs);
  const AnalysisReport r05 = fit_and_judge(p05);
  // Zero set by brute force over the diagonal: min_j |1/2 + j| = 0.
  bool zeros_match = true;
  int zeros = 0;
  for (const auto& e : p05.entries) {
    bool has_zero = false;
    for (int j2 = -e.xi.two_ell(); j2 <= e.xi.two_ell(); j2 += 2) has_zero = has_zero || (1 + j2 == 0);
    const bool half = !e.xi.integer_ell();
    zeros_match = zeros_match && (has_zero == half) && ((e.value == 0.0) == half);
    zeros += e.value == 0.0;
  }
  const bool ok05 = r05.verdict == Verdict::NOT_GH_EVIDENCE && zeros_match && zeros == 40;
  pass = pass && ok05;
  d << "; c=1/2: " << to_string(r05.verdict) << ", " << zeros << " zeros, at half-integer l only: "
    << (zeros_match ? "yes" : "no") << ", trend";
  for (const auto& z : r05.zero_count_trend) d << ' ' << z.count;
  return {pass, d.str()};
}

Outcome c5_bessel(const BatteryOptions& o) {
  std::ostringstream d;
  bool pass = true;
  for (const GroupId& g : {GroupId::torus(1), GroupId::su2()}) {
    for (double s : {-2.0, 1.0, 2.0}) {
      const AnalysisReport r = fit_and_judge(profile_group(bessel_potential(g, s), 50.0, o.jobs));
      const bool ok = r.verdict == Verdict::GH_EVIDENCE && std::abs(r.fitted_k - s) <= 0.1;
      pass = pass && ok;
      d << g.name() << " s=" << s << ": k=" << fix(r.fitted_k, 6) << (ok ? "" : " FAIL") << "; ";
    }
  }
  return {pass, d.str()};
}

Outcome c6_sphere(const BatteryOptions& o) {
  const Profile p = profile_homogeneous(s2_laplacian_lift(), su2_cutoff_for_ell(40), o.jobs);
  bool exact = p.entries.size() == 41;
  for (const auto& e : p.entries) {
    const double l = e.xi.ell();
    exact = exact && e.xi.integer_ell() && e.value == l * l + l;
  }
  const CertificateCheck c = check_certificate(p, 1.0, 1.0);
  const bool only_zero = c.violations.size() == 1 && c.violations[0] == DualIndex::su2_twice(0);
  return {exact && only_zero, std::to_string(p.entries.size()) + " entries l=0..40, values == l^2+l: " +
                                  (exact ? "yes" : "no") + "; (C,k)=(1,1) violations: " +
                                  std::to_string(c.violations.size()) + (only_zero ? " (l=0 only)" : "")};
}

Outcome c7_bundle(const BatteryOptions& o) {
  std::mt19937_64 rng(o.seed + 7);
  std::uniform_int_distribution<int> fib(1, 3), twice(0, 4);
  double worst_oracle = 0.0, worst_dom = 0.0;
  bool reduction_exact = true;
  for (int n = 0; n < 100; ++n) {
    const int dt = fib(rng), dw = fib(rng);
    const DualIndex xi = DualIndex::su2_twice(twice(rng));
    std::vector<BundleBlock> blocks;
    for (int i = 0; i < dt; ++i)
      for (int r = 0; r < dw; ++r) blocks.push_back({xi, i, r, oracle::random_matrix(rng, xi.dim(), xi.dim())});
    const BundleSymbol sym = explicit_bundle(GroupId::su2(), dt, dw, blocks, std::vector<DualIndex>{xi});
    const double m = m_xi(sym, xi);
    const Matrix stacked = sym.stacked(xi);
    worst_oracle = std::max(worst_oracle, std::abs(m - oracle::min_singular_value(stacked)));
    worst_dom = std::max(worst_dom, m - oracle::sampled_min_norm(stacked, 1000, rng));
  }
  for (int n = 0; n < 100; ++n) {
    const DualIndex xi = DualIndex::su2_twice(twice(rng));
    const Matrix a = oracle::random_matrix(rng, xi.dim(), xi.dim());
    const BundleSymbol sym = explicit_bundle(GroupId::su2(), 1, 1, {{xi, 0, 0, a}}, std::nullopt);
    reduction_exact = reduction_exact && m_xi(sym, xi) == lambda_min(a);
  }
  const bool pass = worst_oracle <= 1e-10 && worst_dom <= 1e-3 && reduction_exact;
  return {pass, "100 random bundle symbols: max |m_xi - oracle| " + sci(worst_oracle) +
                    " (<= 1e-10), max excess over sampled minimum " + sci(std::max(0.0, worst_dom)) +
                    " (<= 1e-3); d_tau=d_omega=1 matches lambda_min exactly: " + (reduction_exact ? "yes" : "no")};
}

Outcome c8_counterexample(const BatteryOptions&) {
  const InvariantSymbol sym = neutral_plus_c(0.5);
  const Counterexample ce = build_counterexample(sym, 5, su2_cutoff_for_ell(10));
  const FourierCoefficients image = apply_multiplier(sym, ce.coefficients[0]);
  bool pass = ce.certificate.size() == 5;
  std::ostringstream d;
  d << "xi_k =";
  double dims = 0.0;
  for (std::size_t k = 0; k < ce.certificate.size(); ++k) {
    const auto& e = ce.certificate[k];
    d << ' ' << e.xi.label();
    const double coeff = hs_norm(ce.coefficients[0].at(e.xi));
    const double img = hs_norm(image.at(e.xi));
    pass = pass && e.xi == DualIndex::su2_twice(static_cast<int>(2 * k + 1));
    pass = pass && coeff == 1.0 && img == 0.0 && img < e.bound;
    dims += e.xi.dim();
    const double sob = sobolev_partial_norm(ce.coefficients[0], 0.0, e.xi.eigenvalue());
    pass = pass && sob == std::sqrt(dims);
  }
  d << "; |uhat| == 1, image == 0 < 2^-k <xi_k>^-k, s=0 partial norms == sqrt(sum d): " << (pass ? "yes" : "no");
  return {pass, d.str()};
}

Outcome c9_weyl(const BatteryOptions&) {
  const GroupId g = GroupId::su2();
  double s2[3], s1[3];
  const double cut[3] = {20, 40, 80};
  for (int n = 0; n < 3; ++n) {
    s2[n] = weyl_partial_sum(g, 2.0, su2_cutoff_for_ell(cut[n]));
    s1[n] = weyl_partial_sum(g, 1.0, su2_cutoff_for_ell(cut[n]));
  }
  const double d1 = s2[1] - s2[0], d2 = s2[2] - s2[1];
  const double q1 = s1[1] / s1[0], q2 = s1[2] / s1[1];
  const bool pass = std::abs(d1) < 0.2 && std::abs(d2) < 0.2 && std::abs(q1 / 2.0 - 1.0) <= 0.2 &&
                    std::abs(q2 / 2.0 - 1.0) <= 0.2;
  return {pass, "l cutoffs 20/40/80: t=2 sums " + fix(s2[0]) + ", " + fix(s2[1]) + ", " + fix(s2[2]) +
                    " (steps " + fix(d1) + ", " + fix(d2) + " < 0.2); t=1 ratios " + fix(q1, 3) + ", " +
                    fix(q2, 3) + " (linear: 2 +/- 20%)"};
}

Outcome c10_determinism(const BatteryOptions& o) {
  const fs::path dir = o.scratch_dir.empty() ? fs::temp_directory_path() / "ghyp-selftest" : fs::path(o.scratch_dir);
  fs::create_directories(dir);
  const fs::path spec = dir / "neutral.json";
  {
    std::ofstream f(spec);
    f << R"({"group": "su2", "symbol": {"builtin": "neutral_plus_c", "params": {"c": 0.3}}})" << '\n';
  }
  auto once = [&](const std::string& sub, int jobs) {
    cli::RunConfig c;
    c.command = cli::Command::Analyze;
    c.spec_path = spec.string();
    c.lmax = 30;
    c.jobs = jobs;
    c.out_path = (dir / sub).string();
    std::ostringstream out, err;
    const int code = cli::run(c, out, err);
    if (code != cli::kExitOk) throw Error("analyze exited with " + std::to_string(code) + ": " + err.str());
    std::ifstream in(dir / sub / "report.json", std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    return bytes.str();
  };
  const std::string a = once("run1", 1), b = once("run2", 1), c = once("run3", std::max(2, o.jobs));
  const bool pass = !a.empty() && a == b && a == c;
  return {pass, "two identical analyze runs " + std::string(a == b ? "byte-identical" : "DIFFER") +
                    ", multi-threaded run " + (a == c ? "byte-identical" : "DIFFERS") + " (" +
                    std::to_string(a.size()) + " bytes)"};
}

}  // namespace

std::vector<CriterionResult> run_battery(const BatteryOptions& opts) {
  struct Item {
    const char* title;
    Outcome (*fn)(const BatteryOptions&);
  };
  const Item items[] = {
      {"Peter-Weyl round trip", c1_roundtrip},
      {"Plancherel identity", c2_plancherel},
      {"HS lower bound |AB| >= lambda_min(A)|B|", c3_hs_lower_bound},
      {"neutral operator plus c classification", c4_neutral},
      {"Bessel potential growth exponents", c5_bessel},
      {"S^2 Laplacian homogeneous profile", c6_sphere},
      {"bundle m_xi against oracles", c7_bundle},
      {"counterexample certificate", c8_counterexample},
      {"Weyl sum dichotomy on SU(2)", c9_weyl},
      {"analyze report determinism", c10_determinism},
  };
  std::vector<CriterionResult> out;
  int id = 1;
  for (const auto& it : items) {
    CriterionResult r;
    r.id = id++;
    r.title = it.title;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = it.fn(opts);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results) {
  int passed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << ": " << r.detail << " ["
        << fix(r.seconds, 2) << " s]\n";
    passed += r.pass;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
}

}  // namespace ghyp::selftest
