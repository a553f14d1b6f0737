#pragma once

#include "ghyp/analyzer.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ghyp::cli {

enum class Command { Analyze, Profile, Counterexample, Transform, Selftest };

struct RunConfig {
  Command command = Command::Analyze;
  std::string spec_path;
  // Eigenvalue cutoff on <xi>; alternatively lmax (ell for SU(2), |n| for tori).
  std::optional<double> cutoff;
  std::optional<double> lmax;
  std::string out_path = ".";
  JudgeOptions judge;
  std::uint64_t seed = 20240601;
  int jobs = 1;
  int count = 5;  // counterexample

  // transform
  std::string input_path;
  std::string group;
  std::string emit_sample;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotGH = 2;

// Executes one command. Diagnostics go to `err`, human-readable summaries to
// `out`; artifacts are written below config.out_path. Never throws.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Resolves --cutoff / --lmax against the group. Throws Error.
double resolve_cutoff(const RunConfig& config, const GroupId& group);

const char* version();

}  // namespace ghyp::cli
