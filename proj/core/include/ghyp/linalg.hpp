#pragma once

#include "ghyp/dual.hpp"

namespace ghyp {

// Frobenius norm sqrt(Tr(A^* A)).
double hs_norm(const Matrix& a);

// Smallest singular value of an m x n matrix. For m < n this is 0 whenever a
// kernel exists, consistent with min over unit v of |Av|.
double lambda_min(const Matrix& a);

struct SingularPair {
  double value = 0.0;
  Vector right;  // unit vector v with |Av| = value
};

// Minimizing right singular vector. Ties go to the first index attaining the
// minimum; the largest-magnitude entry of v is made real positive.
SingularPair min_singular_pair(const Matrix& a);

struct HsLowerBoundCheck {
  double lhs = 0.0;  // |AB|_HS
  double rhs = 0.0;  // lambda_min(A) |B|_HS
  bool holds = false;
};

// |AB|_HS >= lambda_min(A) |B|_HS, tested with relative tolerance 1e-12.
// Throws Error when A.cols() != B.rows().
HsLowerBoundCheck check_hs_lower_bound(const Matrix& a, const Matrix& b);

}  // namespace ghyp
