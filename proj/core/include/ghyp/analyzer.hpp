#pragma once

// lambda_min / m_xi profiles over a truncated dual, growth fitting, and
// evidence-grade hypoellipticity verdicts. A truncation can never prove an
// asymptotic statement; the report carries everything needed to audit it.

#include "ghyp/bundles.hpp"
#include "ghyp/dual.hpp"
#include "ghyp/fourier.hpp"
#include "ghyp/symbols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghyp {

enum class ProfileKind { Group, Bundle, Homogeneous };
std::string to_string(ProfileKind kind);

struct ProfileEntry {
  DualIndex xi;
  double eig = 0.0;
  int dim = 0;
  double value = 0.0;
};

struct Profile {
  ProfileKind kind = ProfileKind::Group;
  GroupId group;
  std::vector<ProfileEntry> entries;  // ascending in eig
};

// jobs <= 0 means one worker per hardware thread. Output does not depend on it.
Profile profile_group(const InvariantSymbol& sym, double cutoff, int jobs = 1);
Profile profile_bundle(const BundleSymbol& sym, double cutoff, int jobs = 1);
Profile profile_homogeneous(const InvariantSymbol& sym, double cutoff, int jobs = 1);

enum class Verdict { GH_EVIDENCE, NOT_GH_EVIDENCE, INCONCLUSIVE };
std::string to_string(Verdict v);

struct JudgeOptions {
  int exceptional_budget = 3;
  // Default: 1e-9 * median of the nonzero values (1e-9 if all are zero).
  std::optional<double> zero_tol;
  double tail_fraction = 0.5;
};

struct ZeroCount {
  double cutoff = 0.0;
  int count = 0;
};

struct AnalysisReport {
  Verdict verdict = Verdict::INCONCLUSIVE;
  double fitted_k = 0.0;
  double fitted_C = 0.0;
  std::vector<DualIndex> exceptional;
  std::vector<ZeroCount> zero_count_trend;
  // max over non-exceptional entries of 1 - value / (C <xi>^k); <= 0 means no violation.
  double residual = 0.0;
  double zero_tol = 0.0;
  int fit_points = 0;
  double min_value = 0.0;
  std::string reason;
};

// Throws Error on an empty profile or invalid options.
AnalysisReport fit_and_judge(const Profile& p, const JudgeOptions& opts = {});

struct CertificateCheck {
  bool holds = false;
  std::vector<DualIndex> violations;  // entries with value < C <xi>^k
  double residual = 0.0;
};

// Audits a given (C, k): value >= C <xi>^k entrywise, relative slack 1e-12.
CertificateCheck check_certificate(const Profile& p, double C, double k);

class InsufficientBadFrequencies : public Error {
public:
  InsufficientBadFrequencies(int achieved, const std::string& what) : Error(what), achieved_(achieved) {}
  // Number of bad frequencies found before the search ran out.
  int achieved() const { return achieved_; }

private:
  int achieved_;
};

struct CertificateEntry {
  int k = 0;
  DualIndex xi;
  double lambda = 0.0;    // lambda_min or m_xi at xi_k
  double bound = 0.0;     // 2^{-k} <xi_k>^{-k}
  double coeff_hs = 0.0;  // |uhat(xi_k)|_HS, summed over fiber components
  double image_hs = 0.0;  // |(Du)^(xi_k)|_HS
};

struct Counterexample {
  // d_tau components (one for a group symbol).
  std::vector<FourierCoefficients> coefficients;
  std::vector<CertificateEntry> certificate;
};

// Scans the dual in ascending order for xi_k with lambda_min < 2^{-k}<xi_k>^{-k},
// k = 1..count, and puts the unit minimizing singular vector in the first
// column of uhat(xi_k). Throws InsufficientBadFrequencies otherwise.
Counterexample build_counterexample(const InvariantSymbol& sym, int count, double search_cutoff);
Counterexample build_counterexample(const BundleSymbol& sym, int count, double search_cutoff);

}  // namespace ghyp
