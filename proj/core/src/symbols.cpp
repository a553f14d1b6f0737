#include "ghyp/symbols.hpp"

#include "ghyp/expression.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace ghyp {

namespace {

void require_su2(const GroupId& group, const std::string& what) {
  if (!group.is_su2()) throw Error(what + " is only defined on SU(2), not " + group.name());
}

void require_group(const DualIndex& xi, const GroupId& group, const std::string& name) {
  if (!(xi.group() == group)) throw Error("symbol '" + name + "' evaluated at an index of another group");
}

}  // namespace

Matrix InvariantSymbol::operator()(const DualIndex& xi) const {
  require_group(xi, group, name);
  Matrix m = rule(xi);
  if (m.rows() != xi.dim() || m.cols() != xi.dim())
    throw Error("symbol '" + name + "' returned a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                " matrix at " + xi.label() + ", expected " + std::to_string(xi.dim()) + "x" + std::to_string(xi.dim()));
  return m;
}

InvariantSymbol identity_symbol(const GroupId& group) {
  return {group, [](const DualIndex& xi) -> Matrix { return Matrix::Identity(xi.dim(), xi.dim()); }, "identity"};
}

InvariantSymbol neutral_plus_c(Complex c) {
  return {GroupId::su2(),
          [c](const DualIndex& xi) -> Matrix {
            const int d = xi.dim();
            Matrix m = Matrix::Zero(d, d);
            for (int p = 0; p < d; ++p) m(p, p) = c + (p - xi.ell());
            return m;
          },
          "neutral_plus_c"};
}

InvariantSymbol laplacian(const GroupId& group) {
  return {group, [](const DualIndex& xi) -> Matrix { return xi.nu() * Matrix::Identity(xi.dim(), xi.dim()); },
          "laplacian"};
}

InvariantSymbol bessel_potential(const GroupId& group, double s) {
  return {group,
          [s](const DualIndex& xi) -> Matrix { return xi.eigenvalue_pow(s) * Matrix::Identity(xi.dim(), xi.dim()); },
          "bessel_potential"};
}

InvariantSymbol su2_sublaplacian_model(double kappa) {
  if (!(kappa > 0.0)) throw Error("su2_sublaplacian_model: kappa must be positive");
  return {GroupId::su2(),
          [kappa](const DualIndex& xi) -> Matrix {
            const int d = xi.dim();
            Matrix m = Matrix::Zero(d, d);
            const double low = 1.0 / kappa;
            for (int p = 0; p < d; ++p) {
              const double t = d > 1 ? static_cast<double>(p) / (d - 1) : 0.0;
              const double exponent = low + (1.0 - low) * t;
              m(p, p) = -xi.eigenvalue_pow(exponent);
            }
            return m;
          },
          "su2_sublaplacian_model"};
}

InvariantSymbol s2_laplacian_lift() {
  return {GroupId::su2(),
          [](const DualIndex& xi) -> Matrix {
            const int d = xi.dim();
            Matrix m = Matrix::Zero(d, d);
            if (xi.integer_ell()) {
              const double ell = xi.ell();
              m(d / 2, d / 2) = ell * ell + ell;
            }
            return m;
          },
          "s2_laplacian_lift"};
}

InvariantSymbol diagonal_formula(const GroupId& group, const std::string& expression) {
  std::vector<std::string> vars;
  if (group.is_su2()) {
    vars = {"l", "j", "nu", "eig", "d"};
  } else if (group.torus_dim == 1) {
    vars = {"n", "nu", "eig", "d", "j"};
  } else {
    for (int k = 1; k <= group.torus_dim; ++k) vars.push_back("n" + std::to_string(k));
    for (const char* v : {"nu", "eig", "d", "j"}) vars.emplace_back(v);
  }
  auto expr = std::make_shared<const Expression>(Expression::parse(expression, vars));
  return {group,
          [expr, group](const DualIndex& xi) -> Matrix {
            const int d = xi.dim();
            Matrix m = Matrix::Zero(d, d);
            std::vector<Complex> values;
            if (group.is_su2()) {
              for (int p = 0; p < d; ++p) {
                values = {xi.ell(), p - xi.ell(), xi.nu(), xi.eigenvalue(), static_cast<double>(d)};
                m(p, p) = expr->evaluate(values);
              }
            } else {
              values.clear();
              for (int n : xi.frequencies()) values.emplace_back(n, 0.0);
              values.emplace_back(xi.nu());
              values.emplace_back(xi.eigenvalue());
              values.emplace_back(1.0);
              values.emplace_back(0.0);
              m(0, 0) = expr->evaluate(values);
            }
            return m;
          },
          "diagonal_formula(" + expression + ")"};
}

InvariantSymbol explicit_symbol(const GroupId& group, std::map<DualIndex, Matrix> entries) {
  for (const auto& [xi, m] : entries) {
    if (!(xi.group() == group)) throw Error("explicit symbol: entry " + xi.label() + " belongs to another group");
    if (m.rows() != xi.dim() || m.cols() != xi.dim())
      throw Error("explicit symbol: matrix at " + xi.label() + " must be " + std::to_string(xi.dim()) + "x" +
                  std::to_string(xi.dim()));
  }
  auto table = std::make_shared<const std::map<DualIndex, Matrix>>(std::move(entries));
  return {group,
          [table](const DualIndex& xi) -> Matrix {
            if (auto it = table->find(xi); it != table->end()) return it->second;
            return Matrix::Zero(xi.dim(), xi.dim());
          },
          "explicit"};
}

InvariantSymbol builtin_symbol(const OperatorSpec& spec) {
  const std::string& k = spec.kind;
  if (k == "identity") return identity_symbol(spec.group);
  if (k == "laplacian") return laplacian(spec.group);
  if (k == "bessel_potential") {
    if (!std::isfinite(spec.s)) throw Error("bessel_potential: s must be finite");
    return bessel_potential(spec.group, spec.s);
  }
  if (k == "neutral_plus_c") {
    require_su2(spec.group, "neutral_plus_c");
    return neutral_plus_c(spec.c);
  }
  if (k == "su2_sublaplacian_model") {
    require_su2(spec.group, "su2_sublaplacian_model");
    return su2_sublaplacian_model(spec.kappa);
  }
  if (k == "s2_laplacian_lift") {
    require_su2(spec.group, "s2_laplacian_lift");
    return s2_laplacian_lift();
  }
  if (k == "diagonal_formula") return diagonal_formula(spec.group, spec.expression);
  if (k == "explicit") return explicit_symbol(spec.group, spec.explicit_entries);
  throw Error("unknown builtin symbol '" + k + "'");
}

FourierCoefficients apply_multiplier(const InvariantSymbol& sym, const FourierCoefficients& coeffs) {
  if (!(sym.group == coeffs.group())) throw Error("apply_multiplier: symbol and coefficients on different groups");
  FourierCoefficients out = coeffs.has_rule()
                                ? FourierCoefficients::from_rule(
                                      coeffs.group(),
                                      [sym, coeffs](const DualIndex& xi) -> Matrix { return sym(xi) * coeffs.at(xi); },
                                      coeffs.fiber_index())
                                : FourierCoefficients(coeffs.group(), coeffs.fiber_index());
  for (const auto& [xi, hat] : coeffs.stored()) {
    const Matrix s = sym(xi);
    if (s.cols() != hat.rows()) throw Error("apply_multiplier: shape mismatch at " + xi.label());
    out.set(xi, s * hat);
  }
  return out;
}

InvariantSymbol compose(const InvariantSymbol& a, const InvariantSymbol& b) {
  if (!(a.group == b.group)) throw Error("compose: symbols on different groups");
  return {a.group, [a, b](const DualIndex& xi) -> Matrix { return a(xi) * b(xi); }, a.name + "*" + b.name};
}

GridOperator grid_operator(const InvariantSymbol& sym) {
  return [sym](const GridFunction& f) -> GridFunction {
    const auto duals = enumerate_dual(f.grid->group, f.grid->band_limit);
    const RepTable table(*f.grid, duals);
    auto components = forward_vector(f, table);
    for (auto& c : components) c = apply_multiplier(sym, c);
    return inverse_on_grid(components, f.grid);
  };
}

ExtractedSymbol extract_symbol(const GridOperator& op, std::span<const DualIndex> duals,
                               std::shared_ptr<const QuadratureGrid> grid, double tolerance) {
  const GroupId group = grid->group;
  double max_eig = 1.0;
  for (const auto& xi : duals) {
    if (!(xi.group() == group)) throw Error("extract_symbol: dual index of another group");
    max_eig = std::max(max_eig, xi.eigenvalue());
  }
  if (grid->band_limit < 2.0 * max_eig * (1.0 - 1e-12))
    throw Error("extract_symbol: grid band limit " + std::to_string(grid->band_limit) + " below 2 * max <xi> = " +
                std::to_string(2.0 * max_eig));

  const auto all_duals = enumerate_dual(group, grid->band_limit);
  const RepTable table(*grid, all_duals);

  // Probe points: the identity, then five fixed pseudo-random points.
  std::vector<GroupPoint> probes{GroupPoint::identity(group)};
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (int k = 0; k < 5; ++k) {
    if (group.is_su2()) {
      probes.push_back(GroupPoint::euler(kTwoPi * unit(rng), std::acos(1.0 - 2.0 * unit(rng)), 2.0 * kTwoPi * unit(rng)));
    } else {
      std::vector<double> x(static_cast<std::size_t>(group.torus_dim));
      for (auto& a : x) a = kTwoPi * unit(rng);
      probes.push_back(GroupPoint::torus(std::move(x)));
    }
  }
  std::vector<std::vector<Matrix>> probe_reps(probes.size());
  for (std::size_t q = 0; q < probes.size(); ++q)
    for (const auto& xi : all_duals) probe_reps[q].push_back(rep_eval(xi, probes[q]));

  std::map<DualIndex, Matrix> extracted;
  double max_dev = 0.0;
  for (const auto& xi : duals) {
    const auto pos = static_cast<std::size_t>(std::lower_bound(all_duals.begin(), all_duals.end(), xi) - all_duals.begin());
    const int d = xi.dim();
    // image[q](u, v) = (A xi_uv)(probe_q)
    std::vector<Matrix> image(probes.size(), Matrix::Zero(d, d));
    for (int u = 0; u < d; ++u)
      for (int v = 0; v < d; ++v) {
        std::vector<Complex> samples(grid->size());
        for (std::size_t j = 0; j < grid->size(); ++j) samples[j] = table.at(pos, j)(u, v);
        const GridFunction out = op(GridFunction::scalar(grid, samples));
        if (out.grid->size() != grid->size() || out.fiber_dim() != 1)
          throw Error("extract_symbol: operator changed the grid or fiber shape");
        const FourierCoefficients hat = forward(out, table);
        for (std::size_t q = 0; q < probes.size(); ++q) {
          std::vector<Complex> terms;
          std::size_t p = 0;
          for (const auto& [eta, h] : hat.stored()) {
            terms.push_back(static_cast<double>(eta.dim()) * (probe_reps[q][p].cwiseProduct(h.transpose())).sum());
            ++p;
          }
          image[q](u, v) = pairwise_sum(std::span<const Complex>(terms));
        }
      }
    const Matrix sigma0 = probe_reps[0][pos].adjoint() * image[0];
    const double scale = std::max(1.0, sigma0.norm());
    for (std::size_t q = 1; q < probes.size(); ++q) {
      const Matrix sigma_q = probe_reps[q][pos].adjoint() * image[q];
      max_dev = std::max(max_dev, (sigma_q - sigma0).norm() / scale);
    }
    extracted.emplace(xi, sigma0);
  }
  if (max_dev > tolerance)
    throw NotAMultiplierError("not a multiplier: symbol depends on x (relative deviation " + std::to_string(max_dev) +
                              " > " + std::to_string(tolerance) + ")");
  ExtractedSymbol result{explicit_symbol(group, std::move(extracted)), max_dev};
  result.symbol.name = "extracted";
  return result;
}

}  // namespace ghyp
