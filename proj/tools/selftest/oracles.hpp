#pragma once

// Independent reference computations used by the acceptance battery and the
// unit tests. Nothing here calls into the SVD or transform code under test.

#include "ghyp/dual.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

namespace ghyp::oracle {

using Quad = boost::multiprecision::cpp_bin_float_quad;

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
template <class T>
std::vector<T> jacobi_eigenvalues(std::vector<std::vector<T>> a) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = a.size();
  T scale = 0;
  for (const auto& row : a)
    for (const auto& v : row) scale += v * v;
  const T tiny = scale * std::numeric_limits<T>::epsilon() * std::numeric_limits<T>::epsilon();
  for (int sweep = 0; sweep < 100; ++sweep) {
    T off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off <= tiny) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0) continue;
        const T theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const T t = (theta >= 0 ? T(1) : T(-1)) / (abs(theta) + sqrt(theta * theta + 1));
        const T c = 1 / sqrt(t * t + 1);
        const T s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const T akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const T apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<T> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

// sqrt(min eig(M^* M)), with M^* M formed and diagonalized in quad precision
// through the real embedding [[Re, -Im], [Im, Re]].
inline double min_singular_value(const Matrix& m) {
  const std::size_t n = static_cast<std::size_t>(m.cols());
  std::vector<std::vector<Quad>> re(n, std::vector<Quad>(n)), im(n, std::vector<Quad>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Quad sr = 0, si = 0;
      for (Eigen::Index k = 0; k < m.rows(); ++k) {
        const Quad xr = m(k, static_cast<Eigen::Index>(a)).real(), xi = m(k, static_cast<Eigen::Index>(a)).imag();
        const Quad yr = m(k, static_cast<Eigen::Index>(b)).real(), yi = m(k, static_cast<Eigen::Index>(b)).imag();
        // conj(x) * y
        sr += xr * yr + xi * yi;
        si += xr * yi - xi * yr;
      }
      re[a][b] = sr;
      im[a][b] = si;
    }
  std::vector<std::vector<Quad>> big(2 * n, std::vector<Quad>(2 * n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      big[a][b] = re[a][b];
      big[a][b + n] = -im[a][b];
      big[a + n][b] = im[a][b];
      big[a + n][b + n] = re[a][b];
    }
  const Quad lo = jacobi_eigenvalues(std::move(big)).front();
  return lo > 0 ? static_cast<double>(sqrt(lo)) : 0.0;
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (int p = 0; p < rows; ++p)
    for (int q = 0; q < cols; ++q) m(p, q) = Complex(g(rng), g(rng));
  return m;
}

inline Vector random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

// min over `samples` random unit v of |Mv|.
inline double sampled_min_norm(const Matrix& m, int samples, std::mt19937_64& rng) {
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) best = std::min(best, (m * random_unit(rng, static_cast<int>(m.cols()))).norm());
  return best;
}

// Closed-form Wigner small-d for ell = 1/2 and ell = 1, rows m' and columns m
// ascending, d_{m'm}(beta) = <m'| exp(-i beta J_y) |m>.
inline Eigen::MatrixXd wigner_half(double beta) {
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  Eigen::MatrixXd d(2, 2);
  d << c, s, -s, c;
  return d;
}

inline Eigen::MatrixXd wigner_one(double beta) {
  const double c = std::cos(beta), s = std::sin(beta), r = std::sqrt(0.5);
  Eigen::MatrixXd d(3, 3);
  d << (1 + c) / 2, r * s, (1 - c) / 2,
       -r * s, c, r * s,
       (1 - c) / 2, -r * s, (1 + c) / 2;
  return d;
}

// Dual enumeration by direct search, in no particular order.
inline std::vector<DualIndex> brute_dual(const GroupId& group, double cutoff) {
  std::vector<DualIndex> out;
  const double c2 = cutoff * cutoff * (1.0 + 1e-12);
  if (group.is_su2()) {
    for (int j = 0; 1.0 + 0.25 * j * (j + 2) <= c2; ++j) out.push_back(DualIndex::su2_twice(j));
    return out;
  }
  const int d = group.torus_dim;
  const int L = static_cast<int>(std::floor(cutoff)) + 1;
  std::vector<int> n(static_cast<std::size_t>(d), -L);
  while (true) {
    long sq = 0;
    for (int v : n) sq += static_cast<long>(v) * v;
    if (1.0 + static_cast<double>(sq) <= c2) out.push_back(DualIndex::torus(n));
    int k = 0;
    while (k < d && n[static_cast<std::size_t>(k)] == L) n[static_cast<std::size_t>(k++)] = -L;
    if (k == d) break;
    ++n[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace ghyp::oracle
