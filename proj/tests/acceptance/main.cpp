// Runs the full criterion battery; one PASS/FAIL line per criterion.

#include "selftest/battery.hpp"

#include <filesystem>
#include <iostream>

int main(int argc, char** argv) {
  ghyp::selftest::BatteryOptions opts;
  opts.jobs = 2;
  opts.scratch_dir = argc > 1 ? argv[1] : (std::filesystem::temp_directory_path() / "ghyp-acceptance").string();
  try {
    const auto results = ghyp::selftest::run_battery(opts);
    ghyp::selftest::print_results(std::cout, results);
    for (const auto& r : results)
      if (!r.pass) return 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
