#pragma once

// Symbol lower bound implied by an a-priori subelliptic estimate
//   |u|_{H^{1/r}}^2 <= C (|Lu|_{L^2}^2 + |u|_{L^2}^2),
// namely lambda_min[sigma_L(xi)] >= sqrt(<xi>^{2/r} / C - 1) wherever the
// radicand is nonnegative. The estimate is taken as input.

#include "ghyp/analyzer.hpp"
#include "ghyp/dual.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ghyp {

struct SubellipticBound {
  DualIndex xi;
  double eig = 0.0;
  std::optional<double> bound;  // empty where <xi>^{2/r} < C
};

struct SubellipticBoundResult {
  double C = 1.0;
  double r = 1.0;
  std::vector<SubellipticBound> entries;
};

// Throws Error unless C > 0 and r >= 1.
SubellipticBoundResult bound_from_estimate(double C, double r, std::span<const DualIndex> duals);

struct DominationCheck {
  int compared = 0;
  std::vector<DualIndex> violations;  // profile value < bound
};

// Compares profile values against the bounds at entries with <xi> >= min_eig.
DominationCheck check_domination(const Profile& p, const SubellipticBoundResult& b, double min_eig);

}  // namespace ghyp
