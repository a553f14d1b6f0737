#pragma once

// Serialization of analysis artifacts. Output is a function of the inputs
// only; a timestamp is added when GHYP_TIMESTAMP is set (its value is copied).

#include "ghyp/analyzer.hpp"
#include "ghyp/spec_io.hpp"
#include "ghyp/subelliptic.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>

namespace ghyp::cli {

struct OptionsEcho {
  std::string command;
  std::string spec_path;
  double cutoff = 0.0;
  std::map<std::string, std::variant<std::string, double, long long>> extra;
};

void write_profile_csv(std::ostream& out, const Profile& p);

std::string report_json(const OptionsEcho& echo, const AnalysisSpec& spec, const Profile& p, const AnalysisReport& r,
                        const std::optional<SubellipticBoundResult>& bound,
                        const std::optional<DominationCheck>& domination);

std::string counterexample_json(const OptionsEcho& echo, const Counterexample& c);

std::string transform_json(const OptionsEcho& echo, double roundtrip_residual, double plancherel_residual,
                           double grid_norm, double fourier_norm, std::size_t nodes, std::size_t duals);

}  // namespace ghyp::cli
