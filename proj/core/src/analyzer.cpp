#include "ghyp/analyzer.hpp"

#include "ghyp/linalg.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>

namespace ghyp {

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Group: return "group";
    case ProfileKind::Bundle: return "bundle";
    case ProfileKind::Homogeneous: return "homogeneous";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::GH_EVIDENCE: return "GH_EVIDENCE";
    case Verdict::NOT_GH_EVIDENCE: return "NOT_GH_EVIDENCE";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

template <class ValueFn>
Profile make_profile(ProfileKind kind, const GroupId& group, std::vector<DualIndex> duals, int jobs, ValueFn&& value) {
  Profile p{kind, group, {}};
  p.entries.resize(duals.size(), ProfileEntry{DualIndex::su2_twice(0), 0.0, 0, 0.0});
  detail::parallel_for(duals.size(), jobs, [&](std::size_t n) {
    const DualIndex& xi = duals[n];
    p.entries[n] = ProfileEntry{xi, xi.eigenvalue(), xi.dim(), value(xi)};
  });
  return p;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

Profile profile_group(const InvariantSymbol& sym, double cutoff, int jobs) {
  return make_profile(ProfileKind::Group, sym.group, enumerate_dual(sym.group, cutoff), jobs,
                      [&](const DualIndex& xi) { return lambda_min(sym(xi)); });
}

Profile profile_bundle(const BundleSymbol& sym, double cutoff, int jobs) {
  std::vector<DualIndex> duals;
  for (auto& xi : enumerate_dual(sym.group, cutoff))
    if (sym.in_support(xi)) duals.push_back(xi);
  return make_profile(ProfileKind::Bundle, sym.group, std::move(duals), jobs,
                      [&](const DualIndex& xi) { return m_xi(sym, xi); });
}

Profile profile_homogeneous(const InvariantSymbol& sym, double cutoff, int jobs) {
  if (!sym.group.is_su2()) throw Error("profile_homogeneous: only S^2 = SU(2)/T^1 is supported");
  std::vector<DualIndex> duals;
  std::vector<int> widths;
  for (auto& [xi, dK] : dual_of_M(cutoff)) {
    duals.push_back(xi);
    widths.push_back(dK);
  }
  Profile p = make_profile(ProfileKind::Homogeneous, sym.group, duals, jobs, [&](const DualIndex& xi) {
    const auto pos = std::lower_bound(duals.begin(), duals.end(), xi) - duals.begin();
    return lambda_min(homogeneous_block(sym, xi, widths[static_cast<std::size_t>(pos)]));
  });
  return p;
}

AnalysisReport fit_and_judge(const Profile& p, const JudgeOptions& opts) {
  if (p.entries.empty()) throw Error("fit_and_judge: empty profile");
  if (opts.exceptional_budget < 0) throw Error("fit_and_judge: exceptional budget must be nonnegative");
  if (!(opts.tail_fraction > 0.0 && opts.tail_fraction <= 1.0)) throw Error("fit_and_judge: tail fraction must lie in (0, 1]");
  if (opts.zero_tol && !(*opts.zero_tol > 0.0)) throw Error("fit_and_judge: zero tolerance must be positive");

  AnalysisReport rep;
  std::vector<double> nonzero;
  rep.min_value = p.entries.front().value;
  for (const auto& e : p.entries) {
    if (e.value != 0.0) nonzero.push_back(e.value);
    rep.min_value = std::min(rep.min_value, e.value);
  }
  rep.zero_tol = opts.zero_tol ? *opts.zero_tol : 1e-9 * (nonzero.empty() ? 1.0 : median(nonzero));

  // (a) growth of the zero set
  const double max_eig = p.entries.back().eig;
  for (double f : {0.5, 0.75, 1.0}) {
    ZeroCount z{f * max_eig, 0};
    for (const auto& e : p.entries)
      if (e.eig <= z.cutoff * (1.0 + 1e-12) && e.value < rep.zero_tol) ++z.count;
    rep.zero_count_trend.push_back(z);
  }
  const auto& zt = rep.zero_count_trend;
  if (zt[0].count < zt[1].count && zt[1].count < zt[2].count) {
    rep.verdict = Verdict::NOT_GH_EVIDENCE;
    rep.reason = "zero set grows with the cutoff";
    for (const auto& e : p.entries)
      if (e.value < rep.zero_tol) rep.exceptional.push_back(e.xi);
    return rep;
  }

  // (b) zeros form the exceptional set; fit the rest.
  std::vector<const ProfileEntry*> kept;
  for (const auto& e : p.entries) {
    if (e.value < rep.zero_tol) rep.exceptional.push_back(e.xi);
    else kept.push_back(&e);
  }
  if (static_cast<int>(rep.exceptional.size()) > opts.exceptional_budget) {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.reason = std::to_string(rep.exceptional.size()) + " zero values exceed the exceptional budget of " +
                 std::to_string(opts.exceptional_budget);
    return rep;
  }
  if (kept.empty()) {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.reason = "no nonzero values to fit";
    return rep;
  }

  const std::size_t n = kept.size();
  const std::size_t m = std::min(n, std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(opts.tail_fraction * n))));
  std::vector<double> xs, ys;
  for (std::size_t j = n - m; j < n; ++j) {
    xs.push_back(std::log(kept[j]->eig));
    ys.push_back(std::log(kept[j]->value));
  }
  rep.fit_points = static_cast<int>(m);
  const double mx = pairwise_sum(std::span<const double>(xs)) / static_cast<double>(m);
  const double my = pairwise_sum(std::span<const double>(ys)) / static_cast<double>(m);
  std::vector<double> sxy, sxx;
  for (std::size_t j = 0; j < m; ++j) {
    sxy.push_back((xs[j] - mx) * (ys[j] - my));
    sxx.push_back((xs[j] - mx) * (xs[j] - mx));
  }
  const double vxx = pairwise_sum(std::span<const double>(sxx));
  rep.fitted_k = vxx > 0.0 ? pairwise_sum(std::span<const double>(sxy)) / vxx : 0.0;

  std::vector<double> ratios;
  for (const auto* e : kept) ratios.push_back(e->value / std::pow(e->eig, rep.fitted_k));
  rep.fitted_C = *std::min_element(ratios.begin(), ratios.end());
  rep.residual = -INFINITY;
  for (double r : ratios) rep.residual = std::max(rep.residual, 1.0 - r / rep.fitted_C);

  if (rep.fitted_C > 0.0 && std::isfinite(rep.fitted_C) && rep.residual <= 0.0) {
    rep.verdict = Verdict::GH_EVIDENCE;
    rep.reason = "lower bound C <xi>^k holds outside the exceptional set";
  } else {
    rep.verdict = Verdict::INCONCLUSIVE;
    rep.reason = "no positive lower bound of the fitted form";
  }
  return rep;
}

CertificateCheck check_certificate(const Profile& p, double C, double k) {
  CertificateCheck out;
  out.residual = -INFINITY;
  for (const auto& e : p.entries) {
    const double bound = C * std::pow(e.eig, k);
    out.residual = std::max(out.residual, 1.0 - e.value / bound);
    if (e.value < bound * (1.0 - 1e-12)) out.violations.push_back(e.xi);
  }
  out.holds = out.violations.empty();
  return out;
}

namespace {

Counterexample build_impl(const BundleSymbol& sym, int count, double search_cutoff, bool scalar) {
  if (count < 1) throw Error("build_counterexample: count must be positive");
  Counterexample out;
  for (int i = 0; i < sym.d_tau; ++i)
    out.coefficients.emplace_back(sym.group, scalar ? std::nullopt : std::optional<int>(i));

  int k = 1;
  for (const auto& xi : enumerate_dual(sym.group, search_cutoff)) {
    if (k > count) break;
    if (!sym.in_support(xi)) continue;
    const double bound = std::pow(2.0, -k) / std::pow(xi.eigenvalue(), k);
    const SingularPair pair = m_xi_pair(sym, xi);
    if (!(pair.value < bound)) continue;

    const int d = xi.dim();
    std::vector<Matrix> uhat(static_cast<std::size_t>(sym.d_tau), Matrix::Zero(d, d));
    for (int i = 0; i < sym.d_tau; ++i) uhat[static_cast<std::size_t>(i)].col(0) = pair.right.segment(i * d, d);
    double coeff_sq = 0.0, image_sq = 0.0;
    for (int i = 0; i < sym.d_tau; ++i) coeff_sq += uhat[static_cast<std::size_t>(i)].squaredNorm();
    for (int r = 0; r < sym.d_omega; ++r) {
      Matrix acc = Matrix::Zero(d, d);
      for (int i = 0; i < sym.d_tau; ++i) acc += sym.block(i, r, xi) * uhat[static_cast<std::size_t>(i)];
      image_sq += acc.squaredNorm();
    }
    const double image_hs = std::sqrt(image_sq);
    if (!(image_hs < bound)) continue;

    for (int i = 0; i < sym.d_tau; ++i) out.coefficients[static_cast<std::size_t>(i)].set(xi, uhat[static_cast<std::size_t>(i)]);
    out.certificate.push_back({k, xi, pair.value, bound, std::sqrt(coeff_sq), image_hs});
    ++k;
  }
  if (k <= count)
    throw InsufficientBadFrequencies(k - 1, "insufficient bad frequencies within cutoff: found " + std::to_string(k - 1) +
                                                " of " + std::to_string(count) + " (largest k achieved: " +
                                                std::to_string(k - 1) + ")");
  return out;
}

}  // namespace

Counterexample build_counterexample(const InvariantSymbol& sym, int count, double search_cutoff) {
  return build_impl(bundle_from_symbol(sym), count, search_cutoff, true);
}

Counterexample build_counterexample(const BundleSymbol& sym, int count, double search_cutoff) {
  return build_impl(sym, count, search_cutoff, false);
}

}  // namespace ghyp
