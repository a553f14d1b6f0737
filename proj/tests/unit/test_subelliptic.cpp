#include <doctest.h>

#include "ghyp/subelliptic.hpp"

#include <cmath>

using namespace ghyp;

TEST_CASE("bound formula") {
  const DualIndex one = DualIndex::su2_twice(2);  // <xi> = sqrt 3
  const auto b = bound_from_estimate(1.0, 1.0, std::vector<DualIndex>{one});
  REQUIRE(b.entries.size() == 1);
  REQUIRE(b.entries[0].bound.has_value());
  CHECK(*b.entries[0].bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  // radicand exactly zero at the trivial representation
  const auto z = bound_from_estimate(1.0, 1.0, std::vector<DualIndex>{DualIndex::su2_twice(0)});
  REQUIRE(z.entries[0].bound.has_value());
  CHECK(*z.entries[0].bound == 0.0);

  const auto none = bound_from_estimate(4.0, 2.0, std::vector<DualIndex>{one});
  CHECK(!none.entries[0].bound.has_value());
}

TEST_CASE("preconditions") {
  const std::vector<DualIndex> d{DualIndex::su2_twice(1)};
  CHECK_THROWS_AS(bound_from_estimate(0.0, 1.0, d), Error);
  CHECK_THROWS_AS(bound_from_estimate(-1.0, 1.0, d), Error);
  CHECK_THROWS_AS(bound_from_estimate(1.0, 0.5, d), Error);
  CHECK_THROWS_AS(bound_from_estimate(std::nan(""), 1.0, d), Error);
}

TEST_CASE("sub-Laplacian model is dominated by its bound") {
  const double cutoff = su2_cutoff_for_ell(40);
  const auto duals = enumerate_dual(GroupId::su2(), cutoff);
  for (double kappa : {1.0, 2.0, 3.0}) {
    const double C = 1.0;
    const auto p = profile_group(su2_sublaplacian_model(kappa), cutoff);
    const auto b = bound_from_estimate(C, kappa, duals);
    const auto dom = check_domination(p, b, std::pow(2.0 * C, kappa / 2.0));
    CHECK(dom.compared > 0);
    CHECK(dom.violations.empty());
  }
}

TEST_CASE("sub-Laplacian model grows like <xi>^{1/kappa}") {
  for (double kappa : {1.0, 2.0, 3.0}) {
    const auto rep = fit_and_judge(profile_group(su2_sublaplacian_model(kappa), su2_cutoff_for_ell(60)));
    CHECK(rep.verdict == Verdict::GH_EVIDENCE);
    CHECK(std::abs(rep.fitted_k - 1.0 / kappa) < 0.1);
  }
}

TEST_CASE("domination detects a violation") {
  const double cutoff = su2_cutoff_for_ell(10);
  const auto p = profile_group(identity_symbol(GroupId::su2()), cutoff);
  const auto b = bound_from_estimate(1.0, 1.0, enumerate_dual(GroupId::su2(), cutoff));
  const auto dom = check_domination(p, b, 0.0);
  CHECK(!dom.violations.empty());
}
