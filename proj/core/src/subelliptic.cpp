#include "ghyp/subelliptic.hpp"

#include <cmath>
#include <map>

namespace ghyp {

SubellipticBoundResult bound_from_estimate(double C, double r, std::span<const DualIndex> duals) {
  if (!(C > 0.0) || !std::isfinite(C)) throw Error("bound_from_estimate: C must be positive");
  if (!(r >= 1.0) || !std::isfinite(r)) throw Error("bound_from_estimate: r must be at least 1");
  SubellipticBoundResult out{C, r, {}};
  for (const auto& xi : duals) {
    // (1 + nu)^{1/r} = <xi>^{2/r}, exact at <xi>^2 = C^r boundaries.
    const double radicand = std::pow(1.0 + xi.nu(), 1.0 / r) / C - 1.0;
    SubellipticBound b{xi, xi.eigenvalue(), std::nullopt};
    if (radicand >= 0.0) b.bound = std::sqrt(radicand);
    out.entries.push_back(b);
  }
  return out;
}

DominationCheck check_domination(const Profile& p, const SubellipticBoundResult& b, double min_eig) {
  std::map<DualIndex, double> bounds;
  for (const auto& e : b.entries)
    if (e.bound) bounds.emplace(e.xi, *e.bound);
  DominationCheck out;
  for (const auto& e : p.entries) {
    if (e.eig < min_eig) continue;
    auto it = bounds.find(e.xi);
    if (it == bounds.end()) continue;
    ++out.compared;
    if (e.value < it->second) out.violations.push_back(e.xi);
  }
  return out;
}

}  // namespace ghyp
