#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "srdg/backend.hpp"
#include "srdg/exact.hpp"
#include "srdg/model.hpp"

namespace srdg::tools {

struct EngineRequest {
  std::string engine = "auto";  // auto | brute | dp | star | milp
  bool min_slack = false;
  std::optional<SolverBackend> backend;
  bool presolve = false;
  bool time_indexed = false;
  std::uint64_t node_budget = 10'000'000;
  std::size_t dp_states = 2'000'000;
};

struct EngineResult {
  std::string engine;
  Verdict verdict = Verdict::infeasible;
  std::optional<Time> d_star;
  std::optional<Temporalization> schedule;
  std::uint64_t nodes = 0;
};

/// Engine picked by auto dispatch: dp on paths, star on stars, else milp when
/// a backend is configured, else brute.
std::string resolve_engine(const Instance& instance, const EngineRequest& request);

/// In min-slack mode the verdict is feasible iff d* == 0. In auto mode a
/// ResourceLimit from dp, star or brute is retried on the MILP if one is configured.
EngineResult run_engine(const Instance& instance, const EngineRequest& request);

}  // namespace srdg::tools
