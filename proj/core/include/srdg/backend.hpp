#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace srdg {

/// Layout of the solution file the backend writes.
///   cbc:   "<status> - objective value <v>" then "idx name value reduced" rows
///   highs: HiGHS writeSolution text ("Model status", "# Columns N", "name value")
///   plain: optional "status <word>" line, then "name value" pairs
enum class SolutionDialect { cbc, highs, plain };

std::optional<SolutionDialect> parse_dialect(std::string_view text);
std::string_view to_string(SolutionDialect dialect);

/// Command template with {model} and {solution} placeholders.
struct SolverBackend {
  std::string command;
  SolutionDialect dialect = SolutionDialect::cbc;
};

enum class SolutionStatus { optimal, infeasible };

struct SolutionFile {
  SolutionStatus status = SolutionStatus::optimal;
  std::optional<double> objective;
  std::map<std::string, double, std::less<>> values;

  /// Value of a variable; variables the file omits are zero.
  double value(std::string_view name) const;
};

SolutionFile parse_solution(std::string_view text, SolutionDialect dialect);

/// SRDG_SOLVER_CMD (+ SRDG_SOLVER_DIALECT) from the environment, else the
/// CBC binary found at configure time, else nothing.
std::optional<SolverBackend> default_backend();

/// Writes the LP text to a private temp file, runs the backend and parses its
/// answer. Throws SolverError on launch failure or an unreadable answer.
SolutionFile run_backend(const SolverBackend& backend, std::string_view lp_text);

}  // namespace srdg
