#pragma once

#include <cstdint>
#include <optional>

#include "srdg/model.hpp"

namespace srdg {

enum class Verdict { feasible, infeasible };

std::string_view to_string(Verdict verdict);

struct SolveOutcome {
  Verdict verdict = Verdict::infeasible;
  std::optional<Temporalization> schedule;
  /// Search nodes or enumerated candidates, solver-specific.
  std::uint64_t nodes = 0;

  bool feasible() const { return verdict == Verdict::feasible; }
};

struct OptimizeOutcome {
  Time d_star = 0;
  Temporalization schedule;
};

struct BruteForceOptions {
  std::uint64_t node_budget = 10'000'000;
};

/// Depth-first search over departure times with horizon lifetime + slack and
/// every deadline raised by slack. Throws ResourceLimit when the budget runs out.
SolveOutcome brute_force_feasible(const Instance& instance, Time slack = 0, const BruteForceOptions& options = {});

/// |P| * max over paths of (1 + sum of traversal times).
Time slack_upper_bound(const Instance& instance);

/// Smallest slack admitting a valid temporalization, by linear scan.
OptimizeOutcome min_slack_oracle(const Instance& instance, const BruteForceOptions& options = {});

}  // namespace srdg
