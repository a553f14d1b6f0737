#pragma once

// Operator spec files (JSON):
//
//   {"group": "su2" | "torus:d",
//    "symbol": {"builtin": "neutral_plus_c", "params": {"c": 0.5}}
//            | {"explicit": [{"xi": "1", "matrix": [[[re, im], ...], ...]}]},
//    "bundle": {"d_tau": 2, "d_omega": 1,
//               "blocks": [{"xi": "1/2", "i": 1, "r": 1, "matrix": ...}],
//               "support": ["1/2", ...]},
//    "space": "s2",
//    "estimate": {"C": 1, "r": 2}}
//
// Exactly one of "symbol" / "bundle". Matrix entries are numbers or [re, im]
// pairs. Bundle block indices i, r are 1-based in the file. "space" selects
// the homogeneous-space analysis and needs an SU(2) symbol.

#include "ghyp/bundles.hpp"
#include "ghyp/symbols.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ghyp {

struct EstimateSpec {
  double C = 1.0;
  double r = 1.0;
};

struct AnalysisSpec {
  GroupId group;
  std::optional<OperatorSpec> op;
  std::optional<InvariantSymbol> symbol;
  std::optional<BundleSymbol> bundle;
  bool homogeneous = false;
  std::optional<EstimateSpec> estimate;
  std::vector<std::string> warnings;
};

// Throws ParseError naming the offending JSON pointer (e.g. /symbol/params/c).
AnalysisSpec parse_analysis_spec(const std::string& text);
AnalysisSpec load_analysis_spec(const std::string& path);

}  // namespace ghyp
