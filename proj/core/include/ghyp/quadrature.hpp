#pragma once

#include "ghyp/dual.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ghyp {

// Tensor axes of an SU(2) grid. Flat node order is (phi, theta, psi) with psi
// varying fastest.
struct Su2Axes {
  std::vector<double> phi;
  std::vector<double> theta;
  std::vector<double> psi;
  std::vector<double> theta_weights;  // Gauss-Legendre weights in cos(theta), summing to 1

  std::size_t node_index(std::size_t i_phi, std::size_t i_theta, std::size_t i_psi) const {
    return (i_phi * theta.size() + i_theta) * psi.size() + i_psi;
  }
};

// Nodes and positive weights (summing to 1) that integrate products of two
// band-limited coefficient functions exactly against normalized Haar measure.
struct QuadratureGrid {
  GroupId group;
  std::vector<GroupPoint> nodes;
  std::vector<double> weights;
  double band_limit = 1.0;
  std::optional<Su2Axes> su2_axes;  // present for grids built by build_grid

  std::size_t size() const { return nodes.size(); }
};

struct GridOptions {
  // Multiplies every per-axis node count.
  int oversample = 1;
};

// Largest ell (doubled) / largest |n_j| admitted by an eigenvalue cutoff.
int su2_two_ell_max(double band_limit);
int torus_max_frequency(double band_limit);

QuadratureGrid build_grid(const GroupId& group, double band_limit, GridOptions options = {});

// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// sum_j w_j samples_j, reduced pairwise in a fixed order.
Complex integrate(const QuadratureGrid& grid, std::span<const Complex> samples);

// Deterministic pairwise (cascade) summation.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

}  // namespace ghyp
