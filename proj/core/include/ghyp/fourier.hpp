#pragma once

#include "ghyp/dual.hpp"
#include "ghyp/quadrature.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ghyp {

class BandLimitError : public Error {
public:
  using Error::Error;
};

// Samples of a (possibly E0-valued) function on the nodes of a grid:
// values is (node count) x (fiber dimension).
struct GridFunction {
  std::shared_ptr<const QuadratureGrid> grid;
  Eigen::MatrixXcd values;

  static GridFunction scalar(std::shared_ptr<const QuadratureGrid> grid, std::span<const Complex> samples);
  static GridFunction sample(std::shared_ptr<const QuadratureGrid> grid,
                             const std::function<Complex(const GroupPoint&)>& f);

  int fiber_dim() const { return static_cast<int>(values.cols()); }
  Eigen::VectorXcd component(int i) const { return values.col(i); }
};

// Fourier side of a function or distribution: a finite table of d_xi x d_xi
// matrices, optionally backed by a rule that generates coefficients at any xi
// (distributions need not have finitely many nonzero coefficients).
class FourierCoefficients {
public:
  using Rule = std::function<Matrix(const DualIndex&)>;

  explicit FourierCoefficients(GroupId group, std::optional<int> fiber_index = std::nullopt);
  static FourierCoefficients from_rule(GroupId group, Rule rule, std::optional<int> fiber_index = std::nullopt);

  const GroupId& group() const { return group_; }
  std::optional<int> fiber_index() const { return fiber_index_; }
  bool has_rule() const { return static_cast<bool>(rule_); }

  void set(const DualIndex& xi, Matrix value);
  // Stored value, else the rule's value, else the zero matrix.
  Matrix at(const DualIndex& xi) const;
  const std::map<DualIndex, Matrix>& stored() const { return table_; }

private:
  GroupId group_;
  std::optional<int> fiber_index_;
  std::map<DualIndex, Matrix> table_;
  Rule rule_;
};

// Cached xi(x_j) for a list of duals over all nodes of a grid.
class RepTable {
public:
  RepTable(const QuadratureGrid& grid, std::span<const DualIndex> duals);

  std::span<const DualIndex> duals() const { return duals_; }
  const Matrix& at(std::size_t dual_pos, std::size_t node) const { return reps_[dual_pos][node]; }

private:
  std::vector<DualIndex> duals_;
  std::vector<std::vector<Matrix>> reps_;
};

// fhat(xi) = sum_j w_j f(x_j) xi(x_j)^*. Throws BandLimitError when a
// requested xi lies beyond the grid band limit.
FourierCoefficients forward(const GridFunction& f, std::span<const DualIndex> duals);
FourierCoefficients forward(const GridFunction& f, const RepTable& table);
// One coefficient set per fiber component, fiber_index = 0..d_tau-1.
std::vector<FourierCoefficients> forward_vector(const GridFunction& f, std::span<const DualIndex> duals);
std::vector<FourierCoefficients> forward_vector(const GridFunction& f, const RepTable& table);

// Peter-Weyl sum over the stored coefficients: sum_xi d_xi Tr(xi(x) fhat(xi)).
Complex inverse(const FourierCoefficients& coeffs, const GroupPoint& x);
GridFunction inverse_on_grid(const FourierCoefficients& coeffs, std::shared_ptr<const QuadratureGrid> grid);
GridFunction inverse_on_grid(std::span<const FourierCoefficients> components,
                             std::shared_ptr<const QuadratureGrid> grid);

// sqrt(sum_j w_j |f(x_j)|^2), summed over fiber components.
double grid_l2_norm(const GridFunction& f);

// sqrt(sum_xi d_xi ||fhat(xi)||_HS^2) over the stored coefficients.
double plancherel_norm(const FourierCoefficients& coeffs);

// sqrt(sum_{<xi> <= cutoff} d_xi <xi>^{2s} sum_i ||fhat(i, xi)||_HS^2)
double sobolev_partial_norm(const FourierCoefficients& coeffs, double s, double cutoff);
double sobolev_partial_norm(std::span<const FourierCoefficients> components, double s, double cutoff);

// sum_{<xi> <= cutoff} d_xi^2 <xi>^{-2t}
double weyl_partial_sum(const GroupId& group, double t, double cutoff);

// CSV exchange of grid functions. Columns: node coordinates (x1..xd for tori,
// phi,theta,psi for SU(2)), weight, then re_i,im_i per fiber component. The
// reader checks rows against the nodes of `grid` in order.
void write_grid_function_csv(std::ostream& out, const GridFunction& f);
GridFunction read_grid_function_csv(std::istream& in, std::shared_ptr<const QuadratureGrid> grid);

}  // namespace ghyp
