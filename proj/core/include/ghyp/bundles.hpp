#pragma once

// Homogeneous vector bundles over G/K, represented on the chi_tau side: a
// section is a C^{d_tau}-valued function on G, so an invariant operator is a
// block symbol sigma(i, r, xi) with i < d_tau, r < d_omega.
//
// The only homogeneous space implemented is S^2 = SU(2)/T^1 with K the
// psi-circle of the Euler parametrization.

#include "ghyp/dual.hpp"
#include "ghyp/fourier.hpp"
#include "ghyp/linalg.hpp"
#include "ghyp/symbols.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ghyp {

struct BundleSymbol {
  using Rule = std::function<Matrix(int i, int r, const DualIndex&)>;

  GroupId group;
  int d_tau = 1;
  int d_omega = 1;
  Rule rule;  // zero-based i, r
  // Declared G^(E); empty means every xi of the group.
  std::optional<std::vector<DualIndex>> support;

  Matrix block(int i, int r, const DualIndex& xi) const;
  // (d_omega d_xi) x (d_tau d_xi), block (r, i) = sigma(i, r, xi).
  Matrix stacked(const DualIndex& xi) const;
  bool in_support(const DualIndex& xi) const;
};

// The trivial bundle d_tau = d_omega = 1 carrying a scalar symbol.
BundleSymbol bundle_from_symbol(const InvariantSymbol& sym);

// Listed blocks; unlisted (i, r, xi) are zero. Validates shapes.
struct BundleBlock {
  DualIndex xi;
  int i = 0;
  int r = 0;
  Matrix matrix;
};
BundleSymbol explicit_bundle(const GroupId& group, int d_tau, int d_omega, std::vector<BundleBlock> blocks,
                             std::optional<std::vector<DualIndex>> support);

// Smallest singular value of the stacked block matrix.
double m_xi(const BundleSymbol& sym, const DualIndex& xi);
// Minimizer of sum_r |sum_i sigma(i,r) v(i)|^2 over unit stacked v.
SingularPair m_xi_pair(const BundleSymbol& sym, const DualIndex& xi);

// (Du)^(r, xi) = sum_i sigma(i, r, xi) uhat(i, xi), over the stored keys of
// the inputs. Expects d_tau components, returns d_omega components.
std::vector<FourierCoefficients> apply_bundle(const BundleSymbol& sym, std::span<const FourierCoefficients> u);

// Samples on the (phi, theta) product of an SU(2) grid, phi-major.
struct SphereFunction {
  std::shared_ptr<const QuadratureGrid> parent;
  Eigen::MatrixXcd values;  // (n_phi * n_theta) x fiber

  std::size_t index(std::size_t i_phi, std::size_t i_theta) const;
};

// (Pi_M f)(gK) = mean of f over the psi-axis. Throws Error unless the grid
// factorizes (carries Su2Axes).
SphereFunction project_PM(const GridFunction& f);
// fdot(g) = f(gK): constant along psi. Throws Error on an axis mismatch.
GridFunction lift(const SphereFunction& f, std::shared_ptr<const QuadratureGrid> grid);
// lift(project_PM(f)) on the same grid.
GridFunction psi_average(const GridFunction& f);

// Positions (0..d_xi-1) of the K-invariant indices: the column n = 0 of xi(x)
// at integer ell, nothing at half-integer ell.
std::vector<int> invariant_indices(const DualIndex& xi);
// Numerical cross-check: columns of Pi_M xi whose grid L2 norm exceeds
// `threshold`, computed on an exact grid.
std::vector<int> invariant_indices_numeric(const DualIndex& xi, double threshold = 1e-9);

// M^ for S^2 with d_xi^K: integer ell with <xi> <= cutoff, each with 1.
std::vector<std::pair<DualIndex, int>> dual_of_M(double cutoff);

// Columns of sigma(xi) at the invariant indices, moved first; d_xi x dK.
// Throws Error when dK exceeds the number of invariant indices.
Matrix homogeneous_block(const InvariantSymbol& sym, const DualIndex& xi, int dK);

}  // namespace ghyp
