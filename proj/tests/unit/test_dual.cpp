#include <doctest.h>

#include "ghyp/dual.hpp"
#include "selftest/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace ghyp;

namespace {

constexpr double kPi = std::numbers::pi;

GroupPoint random_su2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return GroupPoint::euler(2 * kPi * u(rng), std::acos(1 - 2 * u(rng)), 4 * kPi * u(rng));
}

}  // namespace

TEST_CASE("enumerate_dual small cutoffs") {
  auto su = enumerate_dual(GroupId::su2(), 1.0);
  REQUIRE(su.size() == 1);
  CHECK(su[0] == DualIndex::su2_twice(0));

  su = enumerate_dual(GroupId::su2(), 2.0);
  REQUIRE(su.size() == 3);
  CHECK(su[1] == DualIndex::su2_twice(1));
  CHECK(su[2] == DualIndex::su2_twice(2));
  CHECK(su[1].eigenvalue() == doctest::Approx(std::sqrt(7.0 / 4.0)).epsilon(1e-15));

  const auto t = enumerate_dual(GroupId::torus(1), 2.5);
  REQUIRE(t.size() == 5);
  std::vector<int> n;
  for (const auto& xi : t) n.push_back(xi.frequencies()[0]);
  std::sort(n.begin(), n.end());
  CHECK(n == std::vector<int>{-2, -1, 0, 1, 2});
}

TEST_CASE("enumerate_dual agrees with brute force and is sorted") {
  for (const GroupId& g : {GroupId::su2(), GroupId::torus(1), GroupId::torus(2), GroupId::torus(3)}) {
    for (double c : {1.0, 2.0, 3.7, 7.5}) {
      auto mine = enumerate_dual(g, c);
      auto ref = oracle::brute_dual(g, c);
      CHECK(std::is_sorted(mine.begin(), mine.end()));
      std::sort(ref.begin(), ref.end());
      CHECK(mine == ref);
      for (std::size_t k = 1; k < mine.size(); ++k) CHECK(mine[k - 1].eigenvalue() <= mine[k].eigenvalue());
    }
  }
}

TEST_CASE("enumerate_dual is monotone in the cutoff") {
  for (const GroupId& g : {GroupId::su2(), GroupId::torus(2)}) {
    const auto small = enumerate_dual(g, 4.0), big = enumerate_dual(g, 9.0);
    REQUIRE(small.size() <= big.size());
    CHECK(std::equal(small.begin(), small.end(), big.begin()));
  }
}

TEST_CASE("su2_cutoff_for_ell admits exactly ell <= L") {
  for (int twice = 0; twice <= 40; ++twice) {
    const auto d = enumerate_dual(GroupId::su2(), su2_cutoff_for_ell(0.5 * twice));
    REQUIRE(!d.empty());
    CHECK(d.back().two_ell() == twice);
  }
}

TEST_CASE("dimensions and eigenvalues") {
  CHECK(rep_dim(DualIndex::torus({7})) == 1);
  CHECK(rep_dim(DualIndex::su2_twice(0)) == 1);
  CHECK(rep_dim(DualIndex::su2_twice(3)) == 4);
  CHECK(eigenvalue(DualIndex::torus({0})) == 1.0);
  CHECK(eigenvalue(DualIndex::su2_twice(2)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(eigenvalue(DualIndex::torus({3, 4})) == doctest::Approx(std::sqrt(26.0)).epsilon(1e-15));
  CHECK(DualIndex::su2_twice(4).nu() == 6.0);
  CHECK(DualIndex::torus({3, 4}).eigenvalue_pow(2.0) == 26.0);
}

TEST_CASE("labels round trip") {
  const GroupId t2 = GroupId::torus(2);
  for (const auto& xi : enumerate_dual(t2, 4.0)) CHECK(DualIndex::parse(t2, xi.label()) == xi);
  for (const auto& xi : enumerate_dual(GroupId::su2(), 8.0))
    CHECK(DualIndex::parse(GroupId::su2(), xi.label()) == xi);
  CHECK(DualIndex::su2_twice(3).label() == "3/2");
  CHECK(DualIndex::torus({1, -2}).label() == "1:-2");
  CHECK_THROWS_AS(DualIndex::parse(GroupId::su2(), "1/3"), Error);
  CHECK_THROWS_AS(DualIndex::parse(GroupId::su2(), "-1"), Error);
  CHECK_THROWS_AS(DualIndex::parse(t2, "1"), Error);
  CHECK(GroupId::parse("torus:3") == GroupId::torus(3));
  CHECK_THROWS_AS(GroupId::parse("so3"), Error);
}

TEST_CASE("wigner small d against closed forms") {
  for (double beta : {0.0, 0.3, 1.1, 2.0, kPi}) {
    CHECK((wigner_small_d(1, beta) - oracle::wigner_half(beta)).norm() < 1e-14);
    CHECK((wigner_small_d(2, beta) - oracle::wigner_one(beta)).norm() < 1e-14);
  }
  for (int twice = 0; twice <= 20; ++twice)
    CHECK((wigner_small_d(twice, 0.0) - Eigen::MatrixXd::Identity(twice + 1, twice + 1)).norm() < 1e-14);
}

TEST_CASE("wigner small d is orthogonal beyond the factorial table") {
  for (int twice : {40, 61, 80, 200}) {
    const Eigen::MatrixXd d = wigner_small_d(twice, 0.7);
    CHECK((d * d.transpose() - Eigen::MatrixXd::Identity(twice + 1, twice + 1)).norm() < 1e-12);
  }
}

TEST_CASE("rep_eval examples") {
  std::mt19937_64 rng(1);
  CHECK(std::abs(rep_eval(DualIndex::su2_twice(0), random_su2(rng))(0, 0) - Complex(1, 0)) < 1e-15);
  const double th = 0.9;
  const Matrix t = rep_eval(DualIndex::su2_twice(1), GroupPoint::euler(0, th, 0));
  Matrix expect(2, 2);
  expect << std::cos(th / 2), -std::sin(th / 2), std::sin(th / 2), std::cos(th / 2);
  CHECK((t - expect).norm() < 1e-15);
  CHECK(std::abs(rep_eval(DualIndex::torus({2}), GroupPoint::torus({kPi / 2}))(0, 0) - Complex(-1, 0)) < 1e-15);
}

TEST_CASE("representations are unitary") {
  std::mt19937_64 rng(2);
  const auto duals = enumerate_dual(GroupId::su2(), 15.0);
  std::uniform_int_distribution<std::size_t> pick(0, duals.size() - 1);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const auto& xi = duals[pick(rng)];
    const Matrix t = rep_eval(xi, random_su2(rng));
    worst = std::max(worst, (t * t.adjoint() - Matrix::Identity(xi.dim(), xi.dim())).norm());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("representations are homomorphisms") {
  std::mt19937_64 rng(3);
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const GroupPoint x = random_su2(rng), y = random_su2(rng);
    const GroupPoint xy = multiply(x, y);
    xy.validate();
    for (int twice : {1, 2, 3, 6, 11}) {
      const DualIndex xi = DualIndex::su2_twice(twice);
      worst = std::max(worst, (rep_eval(xi, xy) - rep_eval(xi, x) * rep_eval(xi, y)).norm());
    }
  }
  CHECK(worst < 1e-9);

  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  const GroupPoint a = GroupPoint::torus({u(rng), u(rng)}), b = GroupPoint::torus({u(rng), u(rng)});
  const DualIndex n = DualIndex::torus({3, -5});
  CHECK((rep_eval(n, multiply(a, b)) - rep_eval(n, a) * rep_eval(n, b)).norm() < 1e-12);
}

TEST_CASE("su2 matrix and Euler angles round trip") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 100; ++n) {
    const GroupPoint x = random_su2(rng);
    const GroupPoint y = su2_point(su2_matrix(x));
    CHECK((su2_matrix(y) - su2_matrix(x)).norm() < 1e-12);
  }
  CHECK((su2_matrix(GroupPoint::identity(GroupId::su2())) - Eigen::Matrix2cd::Identity()).norm() == 0.0);
}

TEST_CASE("point validation") {
  CHECK_THROWS_AS(GroupPoint::euler(-0.1, 0.0, 0.0).validate(), Error);
  CHECK_THROWS_AS(GroupPoint::euler(0.0, 3.5, 0.0).validate(), Error);
  CHECK_THROWS_AS(GroupPoint::torus({7.0}).validate(), Error);
  CHECK_NOTHROW(GroupPoint::euler(0.0, kPi, 4 * kPi - 1e-9).validate());
}
