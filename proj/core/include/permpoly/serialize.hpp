#pragma once

#include <optional>
#include <string>

#include "permpoly/analysis.hpp"
#include "permpoly/groups.hpp"

namespace permpoly {

/// Combined verdict used by reporting: completeness sweep plus cycle data
/// when the polynomial is a permutation.
struct AnalysisReport {
  PermReport perm;
  std::optional<CycleType> cycles;
};

AnalysisReport analyze(const SparsePoly& f);

/// {is_permutation, level, cycle_type: [[len,count]...], order,
///  fixed_points, witnesses} — deterministic compact JSON.
std::string to_json(const AnalysisReport& report);

/// {law, base_field, pairs_checked, holds, counterexample}
std::string to_json(const GroupCheckReport& report);

}  // namespace permpoly
