#include <doctest.h>

#include "ghyp/analyzer.hpp"
#include "ghyp/fourier.hpp"
#include "selftest/oracles.hpp"

#include <map>
#include <random>

#include <cmath>

using namespace ghyp;

namespace {

const double kSu2Cut = su2_cutoff_for_ell(20);

}  // namespace

TEST_CASE("identity has flat growth") {
  for (const GroupId& g : {GroupId::su2(), GroupId::torus(1), GroupId::torus(2)}) {
    const auto rep = fit_and_judge(profile_group(identity_symbol(g), g.is_su2() ? kSu2Cut : 20.0));
    CHECK(rep.verdict == Verdict::GH_EVIDENCE);
    CHECK(std::abs(rep.fitted_k) < 0.05);
    CHECK(rep.fitted_C >= 0.99);
    CHECK(rep.exceptional.empty());
  }
}

TEST_CASE("bessel potential exponent on the circle") {
  const auto rep = fit_and_judge(profile_group(bessel_potential(GroupId::torus(1), 2.0), 200.0));
  CHECK(rep.fitted_k >= 1.9);
  CHECK(rep.fitted_k <= 2.1);
}

TEST_CASE("scaling a symbol scales C and keeps k") {
  const auto base = bessel_potential(GroupId::su2(), 1.0);
  const auto r1 = fit_and_judge(profile_group(base, kSu2Cut));
  for (double a : {0.25, 3.0}) {
    InvariantSymbol scaled{base.group, [&](const DualIndex& xi) -> Matrix { return a * base(xi); }, "scaled"};
    const auto r2 = fit_and_judge(profile_group(scaled, kSu2Cut));
    CHECK(r2.fitted_k == doctest::Approx(r1.fitted_k).epsilon(1e-10));
    CHECK(r2.fitted_C == doctest::Approx(a * r1.fitted_C).epsilon(1e-10));
    CHECK(r2.verdict == r1.verdict);
  }
}

TEST_CASE("neutral plus c verdicts") {
  const auto good = fit_and_judge(profile_group(neutral_plus_c(0.3), kSu2Cut));
  CHECK(good.verdict == Verdict::GH_EVIDENCE);
  CHECK(good.min_value == doctest::Approx(0.2).epsilon(1e-12));

  const auto bad = fit_and_judge(profile_group(neutral_plus_c(0.5), kSu2Cut));
  CHECK(bad.verdict == Verdict::NOT_GH_EVIDENCE);
  REQUIRE(bad.zero_count_trend.size() == 3);
  CHECK(bad.zero_count_trend[0].count < bad.zero_count_trend[1].count);
  CHECK(bad.zero_count_trend[1].count < bad.zero_count_trend[2].count);
}

TEST_CASE("a finite exceptional set is tolerated up to the budget") {
  // Laplacian vanishes only at the trivial representation.
  const auto rep = fit_and_judge(profile_group(laplacian(GroupId::su2()), kSu2Cut));
  CHECK(rep.verdict == Verdict::GH_EVIDENCE);
  REQUIRE(rep.exceptional.size() == 1);
  CHECK(rep.exceptional[0] == DualIndex::su2_twice(0));
  CHECK(rep.fitted_k == doctest::Approx(2.0).epsilon(0.05));

  JudgeOptions none;
  none.exceptional_budget = 0;
  CHECK(fit_and_judge(profile_group(laplacian(GroupId::su2()), kSu2Cut), none).verdict == Verdict::INCONCLUSIVE);
}

TEST_CASE("proof inequality replay on random symbols and coefficients") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> spread(0.2, 2.0);
  const double cutoff = su2_cutoff_for_ell(6);
  const auto duals = enumerate_dual(GroupId::su2(), cutoff);
  int replayed = 0;
  for (int trial = 0; trial < 20; ++trial) {
    // random invertible blocks scaled by <xi>^a for a random exponent a
    const double a = spread(rng) - 1.0;
    std::map<DualIndex, Matrix> entries;
    for (const auto& xi : duals)
      entries.emplace(xi, (oracle::random_matrix(rng, xi.dim(), xi.dim()) + 3.0 * Matrix::Identity(xi.dim(), xi.dim())) *
                              std::pow(xi.eigenvalue(), a));
    const auto sym = explicit_symbol(GroupId::su2(), entries);
    const auto rep = fit_and_judge(profile_group(sym, cutoff));
    if (rep.verdict != Verdict::GH_EVIDENCE || !rep.exceptional.empty()) continue;
    ++replayed;
    std::map<DualIndex, Matrix> coeffs;
    for (const auto& xi : duals) coeffs.emplace(xi, oracle::random_matrix(rng, xi.dim(), xi.dim()));
    for (double s : {-2.0, 0.0, 2.0}) {
      std::vector<double> lhs, rhs;
      for (const auto& xi : duals) {
        const double d = xi.dim(), e = xi.eigenvalue();
        lhs.push_back(d * std::pow(e, 2 * s) * (sym(xi) * coeffs.at(xi)).squaredNorm());
        rhs.push_back(rep.fitted_C * rep.fitted_C * d * std::pow(e, 2 * (s + rep.fitted_k)) * coeffs.at(xi).squaredNorm());
      }
      const double l = pairwise_sum(std::span<const double>(lhs)), r = pairwise_sum(std::span<const double>(rhs));
      CHECK(l >= r * (1 - 1e-12));
    }
  }
  CHECK(replayed >= 15);
}

TEST_CASE("certificate audit lists violations") {
  const auto p = profile_group(laplacian(GroupId::su2()), su2_cutoff_for_ell(5));
  const auto c = check_certificate(p, 0.4, 2.0);
  CHECK(!c.holds);
  REQUIRE(c.violations.size() == 1);
  CHECK(c.violations[0] == DualIndex::su2_twice(0));
  CHECK(check_certificate(p, 0.0, 0.0).holds);
}

TEST_CASE("profiles do not depend on the worker count") {
  const auto sym = neutral_plus_c(Complex(0.3, 0.1));
  const auto a = profile_group(sym, kSu2Cut, 1);
  for (int jobs : {2, 3, 0}) {
    const auto b = profile_group(sym, kSu2Cut, jobs);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].xi == b.entries[i].xi);
      CHECK(a.entries[i].value == b.entries[i].value);
    }
  }
}

TEST_CASE("homogeneous profile of the S^2 Laplacian") {
  const auto p = profile_homogeneous(s2_laplacian_lift(), su2_cutoff_for_ell(10));
  REQUIRE(p.entries.size() == 11);
  for (const auto& e : p.entries) {
    const double l = e.xi.ell();
    CHECK(e.value == l * l + l);
  }
}

TEST_CASE("bundle profile and lambda_min agree for rank one") {
  const auto sym = neutral_plus_c(0.3);
  const auto a = profile_group(sym, su2_cutoff_for_ell(6));
  const auto b = profile_bundle(bundle_from_symbol(sym), su2_cutoff_for_ell(6));
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].value == b.entries[i].value);
}

TEST_CASE("counterexample construction") {
  const auto ce = build_counterexample(neutral_plus_c(0.5), 5, su2_cutoff_for_ell(20));
  REQUIRE(ce.certificate.size() == 5);
  for (const auto& e : ce.certificate) {
    CHECK(e.lambda < e.bound);
    CHECK(e.coeff_hs == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.image_hs <= e.bound);
  }
  for (std::size_t i = 1; i < ce.certificate.size(); ++i) CHECK(ce.certificate[i - 1].xi < ce.certificate[i].xi);

  try {
    build_counterexample(identity_symbol(GroupId::su2()), 3, kSu2Cut);
    FAIL("expected InsufficientBadFrequencies");
  } catch (const InsufficientBadFrequencies& e) {
    CHECK(e.achieved() == 0);
  }
  CHECK_THROWS_AS(build_counterexample(neutral_plus_c(0.5), 40, su2_cutoff_for_ell(3)), InsufficientBadFrequencies);
}

TEST_CASE("bundle counterexample") {
  const DualIndex xi = DualIndex::su2_twice(3);
  std::vector<BundleBlock> blocks;
  for (int t = 0; t <= 12; ++t) {
    const DualIndex eta = DualIndex::su2_twice(t);
    Matrix m = Matrix::Identity(eta.dim(), eta.dim());
    if (t % 2 == 1) m(0, 0) = 0.0;
    blocks.push_back({eta, 0, 0, m});
    blocks.push_back({eta, 1, 0, Matrix::Zero(eta.dim(), eta.dim())});
  }
  (void)xi;
  // d_tau = 2 > d_omega = 1: every stacked matrix is wide, so m_xi = 0 everywhere.
  const auto sym = explicit_bundle(GroupId::su2(), 2, 1, blocks, std::nullopt);
  const auto ce = build_counterexample(sym, 3, su2_cutoff_for_ell(6));
  REQUIRE(ce.coefficients.size() == 2);
  REQUIRE(ce.certificate.size() == 3);
  for (const auto& e : ce.certificate) {
    CHECK(e.lambda == doctest::Approx(0.0).scale(1.0));
    CHECK(e.image_hs < 1e-14);
  }
}

TEST_CASE("judge validation") {
  CHECK_THROWS_AS(fit_and_judge(Profile{}), Error);
  const auto p = profile_group(identity_symbol(GroupId::su2()), 3.0);
  JudgeOptions bad;
  bad.tail_fraction = 0.0;
  CHECK_THROWS_AS(fit_and_judge(p, bad), Error);
  bad = {};
  bad.exceptional_budget = -1;
  CHECK_THROWS_AS(fit_and_judge(p, bad), Error);
}
