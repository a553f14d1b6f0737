#include <doctest.h>

#include "ghyp/linalg.hpp"
#include "ghyp/symbols.hpp"
#include "selftest/oracles.hpp"

#include <cmath>
#include <random>

using namespace ghyp;

namespace {

Matrix diag(std::initializer_list<Complex> v) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (auto x : v) m(k, k) = x, ++k;
  return m;
}

FourierCoefficients random_hat(const GroupId& g, double band, std::mt19937_64& rng) {
  FourierCoefficients hat(g);
  for (const auto& xi : enumerate_dual(g, band)) hat.set(xi, oracle::random_matrix(rng, xi.dim(), xi.dim()));
  return hat;
}

}  // namespace

TEST_CASE("builtin symbol values") {
  CHECK((neutral_plus_c(0.0)(DualIndex::su2_twice(2)) - diag({-1, 0, 1})).norm() == 0.0);
  CHECK((neutral_plus_c(0.5)(DualIndex::su2_twice(1)) - diag({0, 1})).norm() == 0.0);
  CHECK((s2_laplacian_lift()(DualIndex::su2_twice(4)) - diag({0, 0, 6, 0, 0})).norm() == 0.0);
  CHECK(s2_laplacian_lift()(DualIndex::su2_twice(3)).norm() == 0.0);
  CHECK(bessel_potential(GroupId::torus(1), 2.0)(DualIndex::torus({1}))(0, 0) == Complex(2, 0));
  CHECK(laplacian(GroupId::su2())(DualIndex::su2_twice(3))(0, 0) == Complex(3.75, 0));
  CHECK((identity_symbol(GroupId::torus(2))(DualIndex::torus({1, 1})) - Matrix::Identity(1, 1)).norm() == 0.0);
}

TEST_CASE("sub-Laplacian model spans <xi>^{1/kappa} to <xi>") {
  const auto sym = su2_sublaplacian_model(2.0);
  for (int twice : {0, 1, 5, 20}) {
    const DualIndex xi = DualIndex::su2_twice(twice);
    const Matrix m = sym(xi);
    const double e = xi.eigenvalue();
    CHECK(std::abs(m(0, 0)) == doctest::Approx(std::sqrt(e)).epsilon(1e-14));
    CHECK(std::abs(m(twice, twice)) == doctest::Approx(twice > 0 ? e : std::sqrt(e)).epsilon(1e-14));
    CHECK(m(0, 0).real() < 0);
    CHECK(lambda_min(m) == doctest::Approx(std::sqrt(e)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(su2_sublaplacian_model(0.0), Error);
}

TEST_CASE("diagonal formulas") {
  const auto f = diagonal_formula(GroupId::su2(), "0.5 + j");
  for (int twice : {0, 1, 2, 7}) {
    const DualIndex xi = DualIndex::su2_twice(twice);
    CHECK((f(xi) - neutral_plus_c(0.5)(xi)).norm() == 0.0);
  }
  const auto b = diagonal_formula(GroupId::torus(1), "1 + n^2");
  CHECK(b(DualIndex::torus({-3}))(0, 0) == Complex(10, 0));
  const auto t2 = diagonal_formula(GroupId::torus(2), "n1 - n2 + nu");
  CHECK(t2(DualIndex::torus({2, 1}))(0, 0) == Complex(6, 0));
  CHECK_THROWS_AS(diagonal_formula(GroupId::su2(), "c + j"), ParseError);
}

TEST_CASE("explicit symbols") {
  std::map<DualIndex, Matrix> m;
  m.emplace(DualIndex::su2_twice(1), diag({1, 2}));
  const auto sym = explicit_symbol(GroupId::su2(), m);
  CHECK((sym(DualIndex::su2_twice(1)) - diag({1, 2})).norm() == 0.0);
  CHECK(sym(DualIndex::su2_twice(2)).norm() == 0.0);
  std::map<DualIndex, Matrix> bad;
  bad.emplace(DualIndex::su2_twice(1), Matrix::Identity(3, 3));
  CHECK_THROWS_AS(explicit_symbol(GroupId::su2(), bad), Error);
}

TEST_CASE("builtin_symbol rejects incompatible groups") {
  OperatorSpec s;
  s.group = GroupId::torus(1);
  for (const char* kind : {"neutral_plus_c", "su2_sublaplacian_model", "s2_laplacian_lift"}) {
    s.kind = kind;
    CHECK_THROWS_AS(builtin_symbol(s), Error);
  }
  s.kind = "nonsense";
  CHECK_THROWS_AS(builtin_symbol(s), Error);
  s.kind = "bessel_potential";
  s.s = 2.0;
  CHECK(builtin_symbol(s)(DualIndex::torus({2}))(0, 0) == Complex(5, 0));
}

TEST_CASE("symbols reject indices of another group") {
  CHECK_THROWS_AS(laplacian(GroupId::su2())(DualIndex::torus({1})), Error);
}

TEST_CASE("apply_multiplier examples") {
  std::mt19937_64 rng(21);
  const auto hat = random_hat(GroupId::su2(), 4.0, rng);
  const auto same = apply_multiplier(identity_symbol(GroupId::su2()), hat);
  for (const auto& [xi, m] : hat.stored()) CHECK((same.at(xi) - m).norm() == 0.0);

  FourierCoefficients t00(GroupId::su2());
  Matrix e = Matrix::Zero(3, 3);
  e(1, 1) = 1.0 / 3.0;
  t00.set(DualIndex::su2_twice(2), e);
  CHECK((apply_multiplier(laplacian(GroupId::su2()), t00).at(DualIndex::su2_twice(2)) - 2.0 * e).norm() < 1e-15);

  FourierCoefficients half(GroupId::su2());
  Matrix col = Matrix::Zero(2, 2);
  col(0, 0) = 1.0;
  half.set(DualIndex::su2_twice(1), col);
  CHECK(apply_multiplier(neutral_plus_c(0.5), half).at(DualIndex::su2_twice(1)).norm() == 0.0);

  CHECK_THROWS_AS(apply_multiplier(laplacian(GroupId::torus(1)), hat), Error);
}

TEST_CASE("composition") {
  std::mt19937_64 rng(22);
  const GroupId g = GroupId::su2();
  const auto hat = random_hat(g, 5.0, rng);
  const auto a = neutral_plus_c(Complex(0.3, 0.1)), b = su2_sublaplacian_model(3.0);
  const auto ab = apply_multiplier(compose(a, b), hat);
  const auto a_b = apply_multiplier(a, apply_multiplier(b, hat));
  for (const auto& [xi, m] : hat.stored()) CHECK((ab.at(xi) - a_b.at(xi)).norm() < 1e-12 * std::max(1.0, ab.at(xi).norm()));

  const auto inv = compose(bessel_potential(g, 1.7), bessel_potential(g, -1.7));
  for (const auto& xi : enumerate_dual(g, 20.0))
    CHECK((inv(xi) - Matrix::Identity(xi.dim(), xi.dim())).norm() < 1e-12);

  const auto sq = compose(laplacian(g), laplacian(g));
  const DualIndex l3 = DualIndex::su2_twice(6);
  CHECK((sq(l3) - 144.0 * Matrix::Identity(7, 7)).norm() == 0.0);

  const auto s = s2_laplacian_lift();
  CHECK((compose(identity_symbol(g), s)(l3) - s(l3)).norm() == 0.0);
  CHECK_THROWS_AS(compose(laplacian(g), laplacian(GroupId::torus(1))), Error);
}

TEST_CASE("multipliers on rules") {
  const auto ones = FourierCoefficients::from_rule(
      GroupId::su2(), [](const DualIndex& xi) -> Matrix { return Matrix::Identity(xi.dim(), xi.dim()); });
  const auto lap = apply_multiplier(laplacian(GroupId::su2()), ones);
  CHECK(lap.has_rule());
  CHECK(lap.at(DualIndex::su2_twice(4))(0, 0) == Complex(6, 0));
}

TEST_CASE("diagonal symbols: lambda_min is the smallest diagonal modulus") {
  for (const auto& xi : enumerate_dual(GroupId::su2(), 12.0)) {
    const Matrix m = neutral_plus_c(Complex(0.3, -0.2))(xi);
    double best = INFINITY;
    for (int p = 0; p < xi.dim(); ++p) best = std::min(best, std::abs(m(p, p)));
    CHECK(lambda_min(m) == best);
  }
}

TEST_CASE("extract_symbol recovers multipliers") {
  const GroupId g = GroupId::su2();
  const auto duals = enumerate_dual(g, su2_cutoff_for_ell(1));
  auto grid = std::make_shared<const QuadratureGrid>(build_grid(g, 2.0 * su2_cutoff_for_ell(1)));

  const auto id = extract_symbol([](const GridFunction& f) { return f; }, duals, grid);
  for (const auto& xi : duals) CHECK((id.symbol(xi) - Matrix::Identity(xi.dim(), xi.dim())).norm() < 1e-8);

  const auto twice = extract_symbol(
      [](const GridFunction& f) {
        GridFunction out = f;
        out.values *= 2.0;
        return out;
      },
      duals, grid);
  for (const auto& xi : duals) CHECK((twice.symbol(xi) - 2.0 * Matrix::Identity(xi.dim(), xi.dim())).norm() < 1e-8);

  const auto sub = su2_sublaplacian_model(2.0);
  const auto rec = extract_symbol(grid_operator(compose(sub, neutral_plus_c(0.25))), duals, grid);
  CHECK(rec.max_deviation < 1e-8);
  for (const auto& xi : duals) CHECK((rec.symbol(xi) - sub(xi) * neutral_plus_c(0.25)(xi)).norm() < 1e-8);
}

TEST_CASE("extract_symbol on the circle: spectral Laplacian") {
  const GroupId g = GroupId::torus(1);
  const auto duals = enumerate_dual(g, std::sqrt(1.0 + 9.0));
  auto grid = std::make_shared<const QuadratureGrid>(build_grid(g, 2.0 * std::sqrt(1.0 + 9.0)));
  const auto rec = extract_symbol(grid_operator(laplacian(g)), duals, grid);
  for (const auto& xi : duals) {
    const double n = xi.frequencies()[0];
    CHECK(std::abs(rec.symbol(xi)(0, 0) - Complex(n * n, 0)) < 1e-8);
  }
}

TEST_CASE("extract_symbol rejects non-multipliers and small grids") {
  const GroupId g = GroupId::torus(1);
  const auto duals = enumerate_dual(g, 2.0);
  auto grid = std::make_shared<const QuadratureGrid>(build_grid(g, 4.0));
  // multiplication by cos(x) is not translation invariant
  const GridOperator mult = [](const GridFunction& f) {
    GridFunction out = f;
    for (std::size_t j = 0; j < f.grid->size(); ++j) out.values(static_cast<Eigen::Index>(j), 0) *= 1.0 + 0.5 * std::cos(f.grid->nodes[j].coords[0]);
    return out;
  };
  CHECK_THROWS_AS(extract_symbol(mult, duals, grid), NotAMultiplierError);
  auto small = std::make_shared<const QuadratureGrid>(build_grid(g, 2.0));
  CHECK_THROWS_AS(extract_symbol([](const GridFunction& f) { return f; }, duals, small), Error);
}
