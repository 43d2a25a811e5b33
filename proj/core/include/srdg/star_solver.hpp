#pragma once

#include "srdg/exact.hpp"
#include "srdg/model.hpp"

namespace srdg {

/// True iff |P| > c(center) * (largest deadline); such a star instance is infeasible.
bool star_precheck_infeasible(const Instance& instance);

/// Exact enumeration over per-path arrival and departure times at the center.
/// SolveOutcome::nodes counts complete candidate tuples inspected.
SolveOutcome solve_star(const Instance& instance);

}  // namespace srdg
