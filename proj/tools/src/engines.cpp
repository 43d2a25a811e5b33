#include "srdg_tools/engines.hpp"

#include <functional>

#include "srdg/dp_path.hpp"
#include "srdg/errors.hpp"
#include "srdg/milp.hpp"
#include "srdg/star_solver.hpp"

namespace srdg::tools {

namespace {

using Decider = std::function<SolveOutcome(const Instance&)>;

// Feasibility is monotone in the slack, so gallop then bisect.
EngineResult scan_slack(const Instance& instance, const Decider& decide) {
  const Time bound = slack_upper_bound(instance);
  std::uint64_t nodes = 0;
  auto attempt = [&](Time s) {
    SolveOutcome out = decide(with_slack(instance, s));
    nodes += out.nodes;
    return out;
  };
  SolveOutcome best = attempt(0);
  Time hi = 0;
  if (!best.feasible()) {
    Time lo = 0;
    hi = 1;
    while (true) {
      if (hi > bound) hi = bound;
      best = attempt(hi);
      if (best.feasible()) break;
      if (hi == bound) throw SolverError("no feasible slack up to the upper bound");
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      const Time mid = lo + (hi - lo) / 2;
      SolveOutcome out = attempt(mid);
      if (out.feasible()) {
        hi = mid;
        best = std::move(out);
      } else {
        lo = mid;
      }
    }
  }
  EngineResult result;
  result.d_star = hi;
  result.verdict = hi == 0 ? Verdict::feasible : Verdict::infeasible;
  result.schedule = best.schedule;
  result.nodes = nodes;
  return result;
}

}  // namespace

std::string resolve_engine(const Instance& instance, const EngineRequest& request) {
  if (request.engine != "auto") return request.engine;
  switch (instance.graph().shape()) {
    case GraphShape::path:
      return "dp";
    case GraphShape::star:
      return "star";
    default:
      return request.backend ? "milp" : "brute";
  }
}

EngineResult run_engine(const Instance& instance, const EngineRequest& request) {
  const std::string engine = resolve_engine(instance, request);
  if (request.engine == "auto" && engine != "milp" && request.backend) {
    // Auto mode falls back to the MILP when the combinatorial engine runs out of room.
    try {
      EngineRequest pinned = request;
      pinned.engine = engine;
      return run_engine(instance, pinned);
    } catch (const ResourceLimit&) {
      EngineRequest pinned = request;
      pinned.engine = "milp";
      return run_engine(instance, pinned);
    }
  }
  EngineResult result;
  if (engine == "milp") {
    if (!request.backend) throw SolverError("no MILP backend configured");
    const MilpOptions options{request.presolve, request.time_indexed};
    if (request.min_slack) {
      const MilpModel model = build_milp(instance, MilpMode::min_slack, options);
      OptimizeOutcome out = solve_milp(instance, model, *request.backend);
      result.d_star = out.d_star;
      result.verdict = out.d_star == 0 ? Verdict::feasible : Verdict::infeasible;
      result.schedule = std::move(out.schedule);
    } else {
      const MilpModel model = build_milp(instance, MilpMode::feasibility, options);
      SolveOutcome out = solve_milp_feasibility(instance, model, *request.backend);
      result.verdict = out.verdict;
      result.schedule = std::move(out.schedule);
    }
    result.engine = engine;
    return result;
  }

  Decider decide;
  if (engine == "brute") {
    const BruteForceOptions options{request.node_budget};
    if (request.min_slack) {
      OptimizeOutcome out = min_slack_oracle(instance, options);
      result.engine = engine;
      result.d_star = out.d_star;
      result.verdict = out.d_star == 0 ? Verdict::feasible : Verdict::infeasible;
      result.schedule = std::move(out.schedule);
      return result;
    }
    decide = [options](const Instance& i) { return brute_force_feasible(i, 0, options); };
  } else if (engine == "dp") {
    const PathDpOptions options{request.dp_states};
    decide = [options](const Instance& i) { return solve_path_dp(i, options); };
  } else if (engine == "star") {
    decide = [](const Instance& i) { return solve_star(i); };
  } else {
    throw InvalidInput("unknown engine '" + engine + "'");
  }

  if (request.min_slack) {
    result = scan_slack(instance, decide);
  } else {
    SolveOutcome out = decide(instance);
    result.verdict = out.verdict;
    result.schedule = std::move(out.schedule);
    result.nodes = out.nodes;
  }
  result.engine = engine;
  return result;
}

}  // namespace srdg::tools
