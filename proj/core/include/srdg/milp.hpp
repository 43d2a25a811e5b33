#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srdg/backend.hpp"
#include "srdg/exact.hpp"
#include "srdg/model.hpp"

namespace srdg {

enum class MilpMode { feasibility, min_slack };

enum class VarType { integer, binary, continuous };

struct MilpVariable {
  std::string name;
  VarType type = VarType::integer;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

struct LinearTerm {
  std::size_t var = 0;
  std::int64_t coef = 0;
};

enum class Sense { le, ge, eq };

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::le;
  std::int64_t rhs = 0;
};

struct MilpModel {
  MilpMode mode = MilpMode::feasibility;
  std::vector<MilpVariable> variables;
  std::vector<LinearConstraint> constraints;
  /// x variable of every hop of every path.
  std::vector<std::vector<std::size_t>> x;
  std::size_t dstar = 0;
  std::int64_t big_m = 0;
  Time lifetime = 0;
  /// Largest slack the variable domains allow (0 in feasibility mode).
  Time slack_bound = 0;

  std::size_t add_variable(std::string name, VarType type, std::int64_t lower, std::int64_t upper);
  void add_constraint(std::string name, std::vector<LinearTerm> terms, Sense sense, std::int64_t rhs);
  std::size_t count(VarType type) const;
};

struct MilpOptions {
  /// Tighten domains from hop windows and drop constraints that can never
  /// bind. Off by default: the plain model follows the formulation verbatim.
  bool presolve = false;
  /// Replace the big-M disjunctions and capacity counting by one binary per
  /// hop and departure time (x = sum t z). Same feasible schedules, tighter LP.
  bool time_indexed = false;
};

/// Greedy first-fit coloring into vertex-disjoint classes; sum over classes of
/// the largest (1 + total traversal time).
std::int64_t compute_big_m(const Instance& instance);

/// Color classes start one after another, each when the slowest path of the
/// previous class would finish; paths never wait. Adequate, not necessarily valid.
Temporalization sequential_color_schedule(const Instance& instance);

struct WarmStart {
  Temporalization schedule;
  Time slack = 0;
};

/// Every path starts at 1 and never waits; slack is the largest deadline overshoot.
WarmStart warm_start_no_wait(const Instance& instance);

MilpModel build_milp(const Instance& instance, MilpMode mode, const MilpOptions& options = {});

/// Deterministic CPLEX-LP text. With relax set, integrality is dropped.
std::string export_lp(const MilpModel& model, bool relax = false);

/// Solves a min_slack model; the decoded schedule is validated at lifetime + d*.
OptimizeOutcome solve_milp(const Instance& instance, const MilpModel& model, const SolverBackend& backend);

/// Solves a feasibility model; a feasible answer carries a validated schedule.
SolveOutcome solve_milp_feasibility(const Instance& instance, const MilpModel& model, const SolverBackend& backend);

/// Optimal d* of the LP relaxation of a min_slack model.
double solve_relaxation(const MilpModel& model, const SolverBackend& backend);

}  // namespace srdg
