#pragma once

#include <optional>

#include "dpro/ipm.hpp"

namespace dpro {

// Best-first branch-and-bound with depth-first dives over the integer mask.
// One-hot groups (segment indicators summing to one per attribute) steer the
// branching variable choice; bound tightening happens in place on the
// standard form's bound rows.
//
// `incumbent_hint` seeds the search: its integer coordinates are fixed and
// the continuous rest re-solved, which gives a valid starting incumbent.
Solution solve_mixed(const ConicProgram& program, const SolveOptions& opts = {},
                     const std::optional<Vector>& incumbent_hint = std::nullopt);

}  // namespace dpro
