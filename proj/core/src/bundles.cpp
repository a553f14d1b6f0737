#include "ghyp/bundles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace ghyp {

Matrix BundleSymbol::block(int i, int r, const DualIndex& xi) const {
  if (i < 0 || i >= d_tau || r < 0 || r >= d_omega)
    throw Error("bundle symbol: block (" + std::to_string(i) + "," + std::to_string(r) + ") out of range");
  if (!(xi.group() == group)) throw Error("bundle symbol evaluated at an index of another group");
  Matrix m = rule(i, r, xi);
  if (m.rows() != xi.dim() || m.cols() != xi.dim())
    throw Error("bundle symbol: block at " + xi.label() + " must be " + std::to_string(xi.dim()) + "x" +
                std::to_string(xi.dim()));
  return m;
}

Matrix BundleSymbol::stacked(const DualIndex& xi) const {
  const int d = xi.dim();
  Matrix m(d_omega * d, d_tau * d);
  for (int r = 0; r < d_omega; ++r)
    for (int i = 0; i < d_tau; ++i) m.block(r * d, i * d, d, d) = block(i, r, xi);
  return m;
}

bool BundleSymbol::in_support(const DualIndex& xi) const {
  if (!support) return xi.group() == group;
  return std::find(support->begin(), support->end(), xi) != support->end();
}

BundleSymbol bundle_from_symbol(const InvariantSymbol& sym) {
  return {sym.group, 1, 1, [sym](int, int, const DualIndex& xi) { return sym(xi); }, std::nullopt};
}

BundleSymbol explicit_bundle(const GroupId& group, int d_tau, int d_omega, std::vector<BundleBlock> blocks,
                             std::optional<std::vector<DualIndex>> support) {
  if (d_tau < 1 || d_omega < 1) throw Error("bundle: d_tau and d_omega must be positive");
  using Key = std::tuple<int, int, DualIndex>;
  auto table = std::make_shared<std::map<Key, Matrix>>();
  for (auto& b : blocks) {
    if (!(b.xi.group() == group)) throw Error("bundle: block index " + b.xi.label() + " belongs to another group");
    if (b.i < 0 || b.i >= d_tau || b.r < 0 || b.r >= d_omega)
      throw Error("bundle: block (i=" + std::to_string(b.i) + ", r=" + std::to_string(b.r) + ") out of range");
    if (b.matrix.rows() != b.xi.dim() || b.matrix.cols() != b.xi.dim())
      throw Error("bundle: block at " + b.xi.label() + " must be " + std::to_string(b.xi.dim()) + "x" +
                  std::to_string(b.xi.dim()));
    (*table)[Key{b.i, b.r, b.xi}] = std::move(b.matrix);
  }
  if (support)
    for (const auto& xi : *support)
      if (!(xi.group() == group)) throw Error("bundle: support index " + xi.label() + " belongs to another group");
  return {group, d_tau, d_omega,
          [table](int i, int r, const DualIndex& xi) -> Matrix {
            if (auto it = table->find(Key{i, r, xi}); it != table->end()) return it->second;
            return Matrix::Zero(xi.dim(), xi.dim());
          },
          std::move(support)};
}

double m_xi(const BundleSymbol& sym, const DualIndex& xi) { return lambda_min(sym.stacked(xi)); }

SingularPair m_xi_pair(const BundleSymbol& sym, const DualIndex& xi) { return min_singular_pair(sym.stacked(xi)); }

std::vector<FourierCoefficients> apply_bundle(const BundleSymbol& sym, std::span<const FourierCoefficients> u) {
  if (static_cast<int>(u.size()) != sym.d_tau)
    throw Error("apply_bundle: expected " + std::to_string(sym.d_tau) + " components, got " + std::to_string(u.size()));
  std::vector<DualIndex> keys;
  for (const auto& c : u) {
    if (!(c.group() == sym.group)) throw Error("apply_bundle: coefficients on another group");
    for (const auto& [xi, m] : c.stored()) keys.push_back(xi);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<FourierCoefficients> out;
  for (int r = 0; r < sym.d_omega; ++r) out.emplace_back(sym.group, r);
  for (const auto& xi : keys) {
    const int d = xi.dim();
    for (int r = 0; r < sym.d_omega; ++r) {
      Matrix acc;
      for (int i = 0; i < sym.d_tau; ++i) {
        const Matrix ui = u[static_cast<std::size_t>(i)].at(xi);
        if (ui.rows() != d) throw Error("apply_bundle: coefficient shape mismatch at " + xi.label());
        const Matrix term = sym.block(i, r, xi) * ui;
        acc = i == 0 ? term : Matrix(acc + term);
      }
      out[static_cast<std::size_t>(r)].set(xi, acc);
    }
  }
  return out;
}

std::size_t SphereFunction::index(std::size_t i_phi, std::size_t i_theta) const {
  return i_phi * parent->su2_axes->theta.size() + i_theta;
}

SphereFunction project_PM(const GridFunction& f) {
  if (!f.grid || !f.grid->group.is_su2() || !f.grid->su2_axes)
    throw Error("project_PM: needs an SU(2) grid that factorizes over psi");
  const Su2Axes& ax = *f.grid->su2_axes;
  const std::size_t np = ax.phi.size(), nt = ax.theta.size(), ns = ax.psi.size();
  SphereFunction out{f.grid, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(np * nt), f.values.cols())};
  std::vector<Complex> line(ns);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t t = 0; t < nt; ++t)
      for (Eigen::Index c = 0; c < f.values.cols(); ++c) {
        for (std::size_t s = 0; s < ns; ++s) line[s] = f.values(static_cast<Eigen::Index>(ax.node_index(a, t, s)), c);
        out.values(static_cast<Eigen::Index>(a * nt + t), c) = pairwise_sum(std::span<const Complex>(line)) /
                                                                static_cast<double>(ns);
      }
  return out;
}

GridFunction lift(const SphereFunction& f, std::shared_ptr<const QuadratureGrid> grid) {
  if (!grid || !grid->su2_axes || !f.parent || !f.parent->su2_axes)
    throw Error("lift: needs SU(2) grids that factorize over psi");
  const Su2Axes& ax = *grid->su2_axes;
  const Su2Axes& src = *f.parent->su2_axes;
  if (ax.phi != src.phi || ax.theta != src.theta) throw Error("lift: (phi, theta) axes of the grids differ");
  const std::size_t np = ax.phi.size(), nt = ax.theta.size(), ns = ax.psi.size();
  if (f.values.rows() != static_cast<Eigen::Index>(np * nt)) throw Error("lift: sample count does not match the grid");
  GridFunction out{grid, Eigen::MatrixXcd(static_cast<Eigen::Index>(grid->size()), f.values.cols())};
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t s = 0; s < ns; ++s)
        out.values.row(static_cast<Eigen::Index>(ax.node_index(a, t, s))) =
            f.values.row(static_cast<Eigen::Index>(a * nt + t));
  return out;
}

GridFunction psi_average(const GridFunction& f) { return lift(project_PM(f), f.grid); }

std::vector<int> invariant_indices(const DualIndex& xi) {
  if (!xi.group().is_su2()) throw Error("invariant_indices: only S^2 = SU(2)/T^1 is supported");
  if (!xi.integer_ell()) return {};
  return {xi.two_ell() / 2};
}

std::vector<int> invariant_indices_numeric(const DualIndex& xi, double threshold) {
  if (!xi.group().is_su2()) throw Error("invariant_indices_numeric: only S^2 = SU(2)/T^1 is supported");
  auto grid = std::make_shared<const QuadratureGrid>(build_grid(GroupId::su2(), xi.eigenvalue()));
  const int d = xi.dim();
  GridFunction entries{grid, Eigen::MatrixXcd(static_cast<Eigen::Index>(grid->size()), d * d)};
  for (std::size_t j = 0; j < grid->size(); ++j) {
    const Matrix t = rep_eval(xi, grid->nodes[j]);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) entries.values(static_cast<Eigen::Index>(j), p * d + q) = t(p, q);
  }
  const SphereFunction avg = project_PM(entries);
  const Su2Axes& ax = *grid->su2_axes;
  const double w_phi = 1.0 / static_cast<double>(ax.phi.size());
  std::vector<int> out;
  for (int q = 0; q < d; ++q) {
    std::vector<double> terms;
    for (std::size_t a = 0; a < ax.phi.size(); ++a)
      for (std::size_t t = 0; t < ax.theta.size(); ++t)
        for (int p = 0; p < d; ++p)
          terms.push_back(w_phi * ax.theta_weights[t] * std::norm(avg.values(avg.index(a, t), p * d + q)));
    if (std::sqrt(pairwise_sum(std::span<const double>(terms))) > threshold) out.push_back(q);
  }
  return out;
}

std::vector<std::pair<DualIndex, int>> dual_of_M(double cutoff) {
  std::vector<std::pair<DualIndex, int>> out;
  for (const auto& xi : enumerate_dual(GroupId::su2(), cutoff))
    if (xi.integer_ell()) out.emplace_back(xi, 1);
  return out;
}

Matrix homogeneous_block(const InvariantSymbol& sym, const DualIndex& xi, int dK) {
  const auto idx = invariant_indices(xi);
  if (dK < 0 || dK > static_cast<int>(idx.size()))
    throw Error("homogeneous_block: dK = " + std::to_string(dK) + " exceeds the " + std::to_string(idx.size()) +
                " invariant indices at " + xi.label());
  const Matrix s = sym(xi);
  Matrix out(s.rows(), dK);
  for (int c = 0; c < dK; ++c) out.col(c) = s.col(idx[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace ghyp
