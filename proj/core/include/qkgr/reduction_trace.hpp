#pragma once

// Greedy chains of index reductions, ending at degree zero when possible.

#include <optional>
#include <string>
#include <vector>

#include "qkgr/seidel.hpp"

namespace qkgr {

struct TraceStep {
  std::string rule;
  IndexTuple tuple;  // tuple after the step
};

struct ReductionTrace {
  IndexTuple start;
  std::vector<TraceStep> steps;
  /// "degree zero", "no rule applies" or "vanishes".
  std::string outcome;

  const IndexTuple& final_tuple() const { return steps.empty() ? start : steps.back().tuple; }
  bool vanishes() const { return outcome == "vanishes"; }
};

/// Applies, in order of preference: third-row stripping (k = 3), the
/// degree-one row-deficit reduction on either factor (smaller Seidel shift
/// first, lambda on ties), the dual row-deficit reduction, and single lifts.
ReductionTrace greedy_reduce(const GrContext& ctx, const IndexTuple& t);

/// {"start":..., "steps":[{"rule":..., "lambda":..., "mu":..., "nu":..., "d":...}],
///  "outcome":..., "value": v (when given)}
std::string trace_json(const ReductionTrace& trace, std::optional<Coeff> value = std::nullopt);
std::string trace_text(const ReductionTrace& trace, std::optional<Coeff> value = std::nullopt);

}  // namespace qkgr
