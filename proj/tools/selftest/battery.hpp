#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ghyp::selftest {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct BatteryOptions {
  std::uint64_t seed = 20240601;
  int jobs = 1;
  std::string scratch_dir;  // criterion 10 writes spec and report files here
};

// Runs the ten acceptance criteria in order. Exceptions inside a criterion
// turn into a failed result.
std::vector<CriterionResult> run_battery(const BatteryOptions& opts);

// One line per criterion: "PASS  3  <title>: <detail> [0.01 s]".
void print_results(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace ghyp::selftest
