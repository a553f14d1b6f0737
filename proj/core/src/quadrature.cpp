#include "ghyp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ghyp {

namespace {

template <class T>
T pairwise(std::span<const T> v) {
  constexpr std::size_t kBlock = 8;
  if (v.size() <= kBlock) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> values) { return pairwise(values); }
double pairwise_sum(std::span<const double> values) { return pairwise(values); }

int su2_two_ell_max(double band_limit) {
  const auto admitted = enumerate_dual(GroupId::su2(), band_limit);
  return admitted.empty() ? 0 : admitted.back().two_ell();
}

int torus_max_frequency(double band_limit) {
  const auto admitted = enumerate_dual(GroupId::torus(1), band_limit);
  return admitted.empty() ? 0 : std::abs(admitted.back().frequencies()[0]);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on the three-term recurrence.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    nodes[lo] = -x;
    nodes[hi] = x;
    weights[lo] = w;
    weights[hi] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

QuadratureGrid build_grid(const GroupId& group, double band_limit, GridOptions options) {
  if (!(band_limit >= 1.0)) throw Error("band limit must be >= 1");
  if (options.oversample < 1) throw Error("oversample must be >= 1");
  QuadratureGrid grid;
  grid.group = group;
  grid.band_limit = band_limit;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  if (group.is_torus()) {
    const int L = torus_max_frequency(band_limit);
    const int per_axis = (2 * L + 1) * options.oversample;
    const int d = group.torus_dim;
    std::size_t total = 1;
    for (int k = 0; k < d; ++k) total *= static_cast<std::size_t>(per_axis);
    grid.nodes.reserve(total);
    grid.weights.assign(total, 1.0 / static_cast<double>(total));
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::vector<double> x(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] = kTwoPi * idx[static_cast<std::size_t>(k)] / per_axis;
      grid.nodes.push_back(GroupPoint::torus(std::move(x)));
      for (int k = d - 1; k >= 0; --k) {
        if (++idx[static_cast<std::size_t>(k)] < per_axis) break;
        idx[static_cast<std::size_t>(k)] = 0;
      }
    }
    return grid;
  }

  const int J = su2_two_ell_max(band_limit);  // 2 * ell_max
  const int n_phi = (2 * J + 1) * options.oversample;
  const int n_theta = (J + 1) * options.oversample;
  const int n_psi = (2 * J + 2) * options.oversample;

  Su2Axes axes;
  for (int k = 0; k < n_phi; ++k) axes.phi.push_back(kTwoPi * k / n_phi);
  for (int k = 0; k < n_psi; ++k) axes.psi.push_back(2.0 * kTwoPi * k / n_psi);
  std::vector<double> x, w;
  gauss_legendre(n_theta, x, w);
  // x ascending means theta descending; store theta ascending.
  for (int k = n_theta - 1; k >= 0; --k) {
    axes.theta.push_back(std::acos(std::clamp(x[static_cast<std::size_t>(k)], -1.0, 1.0)));
    axes.theta_weights.push_back(0.5 * w[static_cast<std::size_t>(k)]);
  }

  const std::size_t total = static_cast<std::size_t>(n_phi) * n_theta * n_psi;
  grid.nodes.reserve(total);
  grid.weights.reserve(total);
  const double uniform = 1.0 / (static_cast<double>(n_phi) * n_psi);
  for (double phi : axes.phi)
    for (std::size_t t = 0; t < axes.theta.size(); ++t)
      for (double psi : axes.psi) {
        grid.nodes.push_back(GroupPoint::euler(phi, axes.theta[t], psi));
        grid.weights.push_back(uniform * axes.theta_weights[t]);
      }
  grid.su2_axes = std::move(axes);
  return grid;
}

Complex integrate(const QuadratureGrid& grid, std::span<const Complex> samples) {
  if (samples.size() != grid.size())
    throw Error("integrate: " + std::to_string(samples.size()) + " samples for " + std::to_string(grid.size()) +
                " nodes");
  std::vector<Complex> weighted(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) weighted[j] = grid.weights[j] * samples[j];
  return pairwise_sum(std::span<const Complex>(weighted));
}

}  // namespace ghyp
