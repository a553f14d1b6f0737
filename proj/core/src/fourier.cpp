#include "ghyp/fourier.hpp"

#include <cmath>

namespace ghyp {

namespace {

constexpr double kBandSlack = 1e-12;

void check_band(const QuadratureGrid& grid, std::span<const DualIndex> duals) {
  for (const auto& xi : duals) {
    if (!(xi.group() == grid.group)) throw Error("dual index group does not match grid group");
    if (xi.eigenvalue() > grid.band_limit * (1.0 + kBandSlack))
      throw BandLimitError("band limit exceeded: <" + xi.label() + "> = " + std::to_string(xi.eigenvalue()) +
                           " > grid band limit " + std::to_string(grid.band_limit));
  }
}

Complex trace_product(const Matrix& a, const Matrix& b) {
  // Tr(a b) without forming the product
  return (a.cwiseProduct(b.transpose())).sum();
}

}  // namespace

GridFunction GridFunction::scalar(std::shared_ptr<const QuadratureGrid> grid, std::span<const Complex> samples) {
  if (samples.size() != grid->size()) throw Error("grid function: sample count does not match grid");
  GridFunction f;
  f.values.resize(static_cast<Eigen::Index>(samples.size()), 1);
  for (std::size_t j = 0; j < samples.size(); ++j) f.values(static_cast<Eigen::Index>(j), 0) = samples[j];
  f.grid = std::move(grid);
  return f;
}

GridFunction GridFunction::sample(std::shared_ptr<const QuadratureGrid> grid,
                                  const std::function<Complex(const GroupPoint&)>& fn) {
  std::vector<Complex> s;
  s.reserve(grid->size());
  for (const auto& x : grid->nodes) s.push_back(fn(x));
  return scalar(std::move(grid), s);
}

FourierCoefficients::FourierCoefficients(GroupId group, std::optional<int> fiber_index)
    : group_(group), fiber_index_(fiber_index) {}

FourierCoefficients FourierCoefficients::from_rule(GroupId group, Rule rule, std::optional<int> fiber_index) {
  FourierCoefficients c(group, fiber_index);
  c.rule_ = std::move(rule);
  return c;
}

void FourierCoefficients::set(const DualIndex& xi, Matrix value) {
  if (!(xi.group() == group_)) throw Error("coefficient group mismatch");
  if (value.rows() != xi.dim() || value.cols() != xi.dim())
    throw Error("coefficient at " + xi.label() + " must be " + std::to_string(xi.dim()) + "x" +
                std::to_string(xi.dim()));
  table_.insert_or_assign(xi, std::move(value));
}

Matrix FourierCoefficients::at(const DualIndex& xi) const {
  if (auto it = table_.find(xi); it != table_.end()) return it->second;
  if (rule_) return rule_(xi);
  return Matrix::Zero(xi.dim(), xi.dim());
}

RepTable::RepTable(const QuadratureGrid& grid, std::span<const DualIndex> duals)
    : duals_(duals.begin(), duals.end()) {
  reps_.resize(duals_.size());
  const Complex i(0.0, 1.0);
  for (std::size_t p = 0; p < duals_.size(); ++p) {
    const DualIndex& xi = duals_[p];
    auto& out = reps_[p];
    out.resize(grid.size());
    if (grid.su2_axes && xi.group().is_su2()) {
      const auto& ax = *grid.su2_axes;
      const int n = xi.dim();
      const double ell = xi.ell();
      for (std::size_t t = 0; t < ax.theta.size(); ++t) {
        const Eigen::MatrixXd d = wigner_small_d(xi.two_ell(), ax.theta[t]);
        for (std::size_t a = 0; a < ax.phi.size(); ++a)
          for (std::size_t c = 0; c < ax.psi.size(); ++c) {
            Matrix m(n, n);
            for (int r = 0; r < n; ++r) {
              const Complex left = std::exp(-i * ((r - ell) * ax.phi[a]));
              for (int q = 0; q < n; ++q) m(r, q) = left * d(q, r) * std::exp(-i * ((q - ell) * ax.psi[c]));
            }
            out[ax.node_index(a, t, c)] = std::move(m);
          }
      }
    } else {
      for (std::size_t j = 0; j < grid.size(); ++j) out[j] = rep_eval(xi, grid.nodes[j]);
    }
  }
}

std::vector<FourierCoefficients> forward_vector(const GridFunction& f, const RepTable& table) {
  const QuadratureGrid& grid = *f.grid;
  check_band(grid, table.duals());
  const std::size_t nodes = grid.size();
  if (static_cast<std::size_t>(f.values.rows()) != nodes) throw Error("grid function does not match its grid");

  std::vector<FourierCoefficients> result;
  std::vector<Complex> terms(nodes);
  for (int comp = 0; comp < f.fiber_dim(); ++comp) {
    FourierCoefficients coeffs(grid.group, f.fiber_dim() > 1 ? std::optional<int>(comp) : std::nullopt);
    for (std::size_t p = 0; p < table.duals().size(); ++p) {
      const DualIndex& xi = table.duals()[p];
      const int d = xi.dim();
      Matrix hat(d, d);
      // hat(a, b) = sum_j w_j f_j conj(xi(x_j)(b, a))
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          for (std::size_t j = 0; j < nodes; ++j)
            terms[j] = grid.weights[j] * f.values(static_cast<Eigen::Index>(j), comp) * std::conj(table.at(p, j)(b, a));
          hat(a, b) = pairwise_sum(std::span<const Complex>(terms));
        }
      coeffs.set(xi, std::move(hat));
    }
    result.push_back(std::move(coeffs));
  }
  return result;
}

std::vector<FourierCoefficients> forward_vector(const GridFunction& f, std::span<const DualIndex> duals) {
  check_band(*f.grid, duals);
  return forward_vector(f, RepTable(*f.grid, duals));
}

FourierCoefficients forward(const GridFunction& f, const RepTable& table) {
  if (f.fiber_dim() != 1) throw Error("forward: expected a scalar grid function; use forward_vector");
  return std::move(forward_vector(f, table).front());
}

FourierCoefficients forward(const GridFunction& f, std::span<const DualIndex> duals) {
  check_band(*f.grid, duals);
  return forward(f, RepTable(*f.grid, duals));
}

Complex inverse(const FourierCoefficients& coeffs, const GroupPoint& x) {
  std::vector<Complex> terms;
  terms.reserve(coeffs.stored().size());
  for (const auto& [xi, hat] : coeffs.stored()) terms.push_back(static_cast<double>(xi.dim()) * trace_product(rep_eval(xi, x), hat));
  return pairwise_sum(std::span<const Complex>(terms));
}

GridFunction inverse_on_grid(std::span<const FourierCoefficients> components,
                             std::shared_ptr<const QuadratureGrid> grid) {
  GridFunction f;
  f.values = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(grid->size()), static_cast<Eigen::Index>(components.size()));
  for (std::size_t comp = 0; comp < components.size(); ++comp) {
    const auto& coeffs = components[comp];
    std::vector<DualIndex> duals;
    for (const auto& kv : coeffs.stored()) duals.push_back(kv.first);
    const RepTable table(*grid, duals);
    std::vector<Complex> terms(duals.size());
    for (std::size_t j = 0; j < grid->size(); ++j) {
      std::size_t p = 0;
      for (const auto& [xi, hat] : coeffs.stored()) {
        terms[p] = static_cast<double>(xi.dim()) * trace_product(table.at(p, j), hat);
        ++p;
      }
      f.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(comp)) = pairwise_sum(std::span<const Complex>(terms));
    }
  }
  f.grid = std::move(grid);
  return f;
}

GridFunction inverse_on_grid(const FourierCoefficients& coeffs, std::shared_ptr<const QuadratureGrid> grid) {
  return inverse_on_grid(std::span<const FourierCoefficients>(&coeffs, 1), std::move(grid));
}

double grid_l2_norm(const GridFunction& f) {
  std::vector<double> terms(static_cast<std::size_t>(f.values.rows()));
  for (Eigen::Index j = 0; j < f.values.rows(); ++j)
    terms[static_cast<std::size_t>(j)] = f.grid->weights[static_cast<std::size_t>(j)] * f.values.row(j).squaredNorm();
  return std::sqrt(pairwise_sum(std::span<const double>(terms)));
}

double plancherel_norm(const FourierCoefficients& coeffs) {
  std::vector<double> terms;
  for (const auto& [xi, hat] : coeffs.stored()) terms.push_back(xi.dim() * hat.squaredNorm());
  return std::sqrt(pairwise_sum(std::span<const double>(terms)));
}

double sobolev_partial_norm(std::span<const FourierCoefficients> components, double s, double cutoff) {
  if (components.empty()) return 0.0;
  const GroupId group = components.front().group();
  bool any_rule = false;
  for (const auto& c : components) any_rule = any_rule || c.has_rule();

  std::vector<DualIndex> duals;
  if (any_rule) {
    duals = enumerate_dual(group, cutoff);
  } else {
    std::map<DualIndex, int> keys;
    for (const auto& c : components)
      for (const auto& kv : c.stored())
        if (kv.first.eigenvalue() <= cutoff * (1.0 + kBandSlack)) keys.emplace(kv.first, 0);
    for (const auto& kv : keys) duals.push_back(kv.first);
  }

  std::vector<double> terms;
  terms.reserve(duals.size());
  for (const auto& xi : duals) {
    double hs2 = 0.0;
    for (const auto& c : components) hs2 += c.at(xi).squaredNorm();
    terms.push_back(xi.dim() * xi.eigenvalue_pow(2.0 * s) * hs2);
  }
  return std::sqrt(pairwise_sum(std::span<const double>(terms)));
}

double sobolev_partial_norm(const FourierCoefficients& coeffs, double s, double cutoff) {
  return sobolev_partial_norm(std::span<const FourierCoefficients>(&coeffs, 1), s, cutoff);
}

double weyl_partial_sum(const GroupId& group, double t, double cutoff) {
  std::vector<double> terms;
  for (const auto& xi : enumerate_dual(group, cutoff)) {
    const double d = xi.dim();
    terms.push_back(d * d * xi.eigenvalue_pow(-2.0 * t));
  }
  return pairwise_sum(std::span<const double>(terms));
}

}  // namespace ghyp
