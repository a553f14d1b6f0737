#include "ghyp/linalg.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace ghyp {

namespace {

bool is_diagonal(const Matrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j && a(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

void fix_sign(Vector& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(best))) best = i;
  const double mag = std::abs(v(best));
  if (mag > 0.0) v *= std::conj(v(best)) / mag;
  v(best) = Complex(v(best).real(), 0.0);
}

}  // namespace

double hs_norm(const Matrix& a) { return a.norm(); }

double lambda_min(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() < a.cols()) return min_singular_pair(a).value;
  if (is_diagonal(a)) {
    double m = std::abs(a(0, 0));
    for (Eigen::Index i = 1; i < a.cols(); ++i) m = std::min(m, std::abs(a(i, i)));
    return m;
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

SingularPair min_singular_pair(const Matrix& a) {
  const Eigen::Index n = a.cols();
  if (n == 0) throw Error("min_singular_pair: matrix has no columns");
  SingularPair out;
  if (a.rows() >= n && is_diagonal(a)) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < n; ++i)
      if (std::abs(a(i, i)) < std::abs(a(best, best))) best = i;
    out.value = std::abs(a(best, best));
    out.right = Vector::Unit(n, best);
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index best = 0;
  if (a.rows() < n) {
    // Columns of V beyond rank(A) <= rows span the kernel.
    best = s.size();
    out.value = 0.0;
  } else {
    for (Eigen::Index i = 1; i < s.size(); ++i)
      if (s(i) < s(best)) best = i;
    out.value = s(best);
  }
  out.right = svd.matrixV().col(best);
  fix_sign(out.right);
  return out;
}

HsLowerBoundCheck check_hs_lower_bound(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error("check_hs_lower_bound: incompatible shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  HsLowerBoundCheck c;
  c.lhs = hs_norm(a * b);
  c.rhs = lambda_min(a) * hs_norm(b);
  const double scale = std::max({1.0, c.lhs, c.rhs});
  c.holds = c.lhs >= c.rhs - 1e-12 * scale;
  return c;
}

}  // namespace ghyp
