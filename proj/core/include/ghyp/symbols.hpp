#pragma once

#include "ghyp/dual.hpp"
#include "ghyp/fourier.hpp"

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ghyp {

class NotAMultiplierError : public Error {
public:
  using Error::Error;
};

// Matrix-valued symbol of a left-invariant operator: xi -> sigma(xi), d_xi x d_xi.
struct InvariantSymbol {
  GroupId group;
  std::function<Matrix(const DualIndex&)> rule;
  std::string name;

  // Evaluates the rule and checks the shape.
  Matrix operator()(const DualIndex& xi) const;
};

// Structured operator description, as read from a spec file.
struct OperatorSpec {
  GroupId group;
  // identity | neutral_plus_c | laplacian | bessel_potential |
  // su2_sublaplacian_model | s2_laplacian_lift | diagonal_formula | explicit
  std::string kind;
  Complex c{0.0, 0.0};     // neutral_plus_c
  double s = 0.0;          // bessel_potential
  double kappa = 1.0;      // su2_sublaplacian_model
  std::string expression;  // diagonal_formula
  std::map<DualIndex, Matrix> explicit_entries;
};

InvariantSymbol identity_symbol(const GroupId& group);
// SU(2) only: sigma(ell) = diag(c + j), j = -ell..ell.
InvariantSymbol neutral_plus_c(Complex c);
// Positive Laplace-Beltrami operator: nu_xi * I.
InvariantSymbol laplacian(const GroupId& group);
// (Id + Laplacian)^{s/2}: <xi>^s * I.
InvariantSymbol bessel_potential(const GroupId& group, double s);
// SU(2) only. Synthetic step-kappa sub-Laplacian: diag(-nu_j^2) whose moduli
// nu_j^2 run geometrically from <xi>^{1/kappa} up to <xi> across j.
InvariantSymbol su2_sublaplacian_model(double kappa);
// SU(2) only. Lift of the S^2 Laplacian: single middle entry ell^2 + ell at
// integer ell, zero matrix at half-integer ell.
InvariantSymbol s2_laplacian_lift();
// Diagonal entry j given by an expression. SU(2) variables: l j nu eig d.
// Torus variables: n (or n1..nd), nu eig d j (j = 0).
InvariantSymbol diagonal_formula(const GroupId& group, const std::string& expression);
// Listed matrices; any xi not listed maps to the zero matrix.
InvariantSymbol explicit_symbol(const GroupId& group, std::map<DualIndex, Matrix> entries);

// Throws Error on incompatible group/parameters.
InvariantSymbol builtin_symbol(const OperatorSpec& spec);

// result[xi] = sigma(xi) coeffs[xi]; a coefficient rule is composed as well.
FourierCoefficients apply_multiplier(const InvariantSymbol& sym, const FourierCoefficients& coeffs);

// sigma_A(xi) sigma_B(xi)
InvariantSymbol compose(const InvariantSymbol& a, const InvariantSymbol& b);

using GridOperator = std::function<GridFunction(const GridFunction&)>;

// Realizes a multiplier on grid functions: forward transform over the grid's
// band, multiply, inverse transform back onto the nodes.
GridOperator grid_operator(const InvariantSymbol& sym);

struct ExtractedSymbol {
  InvariantSymbol symbol;
  double max_deviation = 0.0;  // largest relative x-dependence seen
};

// sigma(xi) = xi(x0)^* (A xi)(x0) at x0 = identity, cross-checked at five
// seeded random points. Requires grid band limit >= 2 * max <xi>.
// Throws NotAMultiplierError when the x-dependence exceeds `tolerance`.
ExtractedSymbol extract_symbol(const GridOperator& op, std::span<const DualIndex> duals,
                               std::shared_ptr<const QuadratureGrid> grid, double tolerance = 1e-8);

}  // namespace ghyp
