// Acceptance run: one PASS/FAIL/SKIP line per criterion, exit 1 on any FAIL.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../support/naive_check.hpp"
#include "../support/random_instances.hpp"
#include "srdg/backend.hpp"
#include "srdg/dp_path.hpp"
#include "srdg/errors.hpp"
#include "srdg/exact.hpp"
#include "srdg/generators.hpp"
#include "srdg/io.hpp"
#include "srdg/milp.hpp"
#include "srdg/reductions.hpp"
#include "srdg/star_solver.hpp"
#include "srdg_tools/bench.hpp"
#include "srdg_tools/cli.hpp"

using namespace srdg;
using namespace srdg::testing;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and budgets.
constexpr double kRelaxationTolerance = 1e-6;
constexpr double kSigmas = 3.0;
constexpr double kBudgetPaths = 120;
constexpr double kBudgetStars = 120;
constexpr double kBudgetMilp = 600;
constexpr double kBudgetReductions = 1800;
constexpr double kBudgetGenerators = 60;
constexpr double kBudgetBench = 300;

constexpr int kPathCorpus = 600;
constexpr int kStarCorpus = 600;
constexpr int kMilpCorpus = 240;

struct Result {
  enum Kind { pass, fail, skip } kind = pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Result over_budget(Result v, double seconds, double budget) {
  v.detail += fmt(" [%.1fs of %.0fs]", seconds, budget);
  if (seconds > budget && v.kind == Result::pass) {
    v.kind = Result::fail;
    v.detail += " over budget";
  }
  return v;
}

// --- shared corpora ---------------------------------------------------------

std::vector<Instance> path_corpus() {
  std::mt19937_64 rng(0x5eed0001);
  std::vector<Instance> out;
  for (int i = 0; i < kPathCorpus; ++i) out.push_back(random_path_instance(rng, {6, 8, 4, 2}));
  return out;
}

std::vector<Instance> star_corpus() {
  std::mt19937_64 rng(0x5eed0002);
  std::vector<Instance> out;
  for (int i = 0; i < kStarCorpus; ++i) out.push_back(random_star_instance(rng, {6, 8, 4, 2}));
  return out;
}

// Denser instances that actually trip the load pre-checks.
std::vector<Instance> crowded_paths() {
  std::mt19937_64 rng(0x5eed0003);
  std::vector<Instance> out;
  for (int i = 0; i < 300; ++i) out.push_back(random_path_instance(rng, {3, 2, 10, 1}));
  return out;
}

std::vector<Instance> crowded_stars() {
  std::mt19937_64 rng(0x5eed0004);
  std::vector<Instance> out;
  for (int i = 0; i < 300; ++i) out.push_back(random_star_instance(rng, {3, 2, 7, 1}));
  return out;
}

// --- criteria 1 and 2 -------------------------------------------------------

struct Agreement {
  std::size_t mismatches = 0;
  std::size_t invalid = 0;
  std::size_t feasible = 0;
  std::size_t failures = 0;
};

Agreement agree(const std::vector<Instance>& corpus, const std::function<SolveOutcome(const Instance&)>& solver,
                std::vector<int>* brute_verdicts) {
  Agreement a;
  std::mutex m;
  if (brute_verdicts) brute_verdicts->assign(corpus.size(), -1);
  parallel_for(corpus.size(), [&](std::size_t i) {
    try {
      const SolveOutcome fast = solver(corpus[i]);
      const SolveOutcome slow = brute_force_feasible(corpus[i]);
      const bool bad_schedule = fast.feasible() && !naive_valid(corpus[i], *fast.schedule);
      std::lock_guard lock(m);
      a.mismatches += fast.verdict != slow.verdict;
      a.invalid += bad_schedule;
      a.feasible += slow.feasible();
      if (brute_verdicts) (*brute_verdicts)[i] = slow.feasible();
    } catch (const std::exception&) {
      std::lock_guard lock(m);
      ++a.failures;
    }
  });
  return a;
}

Result report_agreement(const Agreement& a, std::size_t n, const char* name) {
  Result v;
  v.kind = a.mismatches == 0 && a.invalid == 0 && a.failures == 0 ? Result::pass : Result::fail;
  std::ostringstream s;
  s << name << " vs brute force on " << n << " instances (" << a.feasible << " feasible): " << a.mismatches
    << " mismatches, " << a.invalid << " invalid schedules, " << a.failures << " errors";
  v.detail = s.str();
  return v;
}

// --- criteria 3 and 4 -------------------------------------------------------

struct MilpRun {
  std::size_t mismatches = 0;
  std::size_t invalid = 0;
  std::size_t errors = 0;
  std::size_t bound_violations = 0;
  std::vector<double> ratios;
  std::string first_error;
};

MilpRun milp_corpus(const SolverBackend& backend) {
  std::mt19937_64 rng(0x5eed0005);
  std::vector<Instance> corpus;
  for (int i = 0; i < kMilpCorpus; ++i) {
    switch (i % 3) {
      case 0:
        corpus.push_back(random_path_instance(rng, {6, 6, 4, 2}));
        break;
      case 1:
        corpus.push_back(random_star_instance(rng, {5, 6, 4, 2}));
        break;
      default:
        corpus.push_back(random_tree_instance(rng, {6, 6, 4, 2}));
    }
  }
  MilpRun run;
  std::mutex m;
  parallel_for(corpus.size(), [&](std::size_t i) {
    const Instance& inst = corpus[i];
    try {
      const OptimizeOutcome oracle = min_slack_oracle(inst);
      const MilpModel model = build_milp(inst, MilpMode::min_slack);
      const OptimizeOutcome out = solve_milp(inst, model, backend);
      const bool valid = naive_valid(inst, out.schedule, out.d_star) && validate(inst, out.schedule, out.d_star).valid();
      const double relaxed = solve_relaxation(model, backend);
      std::lock_guard lock(m);
      run.mismatches += out.d_star != oracle.d_star;
      run.invalid += !valid;
      run.bound_violations += relaxed > out.d_star + kRelaxationTolerance;
      run.ratios.push_back(out.d_star == 0 ? 1.0 : std::max(0.0, relaxed) / out.d_star);
    } catch (const std::exception& e) {
      std::lock_guard lock(m);
      if (run.errors++ == 0) run.first_error = e.what();
    }
  });
  return run;
}

// --- criterion 5 ------------------------------------------------------------

struct ReductionTally {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
  std::size_t yes = 0;
  std::size_t distinct = 0;
  std::string first_problem;
  std::vector<std::string> problems;
};

struct ReductionCase {
  std::string label;
  std::function<Instance()> build;
  bool expected = false;
};

void run_reductions(const std::vector<ReductionCase>& cases, const SolverBackend& backend, ReductionTally& tally,
                    std::vector<Instance>* keep = nullptr) {
  // identical gadgets are solved once; every case is still checked against its own oracle
  struct Solved {
    bool done = false;
    bool feasible = false;
    bool valid = true;
    std::string error;
  };
  std::vector<std::optional<Instance>> built(cases.size());
  std::vector<std::string> build_error(cases.size());
  std::vector<std::size_t> slot(cases.size(), 0);
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    try {
      built[i] = cases[i].build();
    } catch (const std::exception& e) {
      build_error[i] = e.what();
      continue;
    }
    auto [it, fresh] = index.emplace(instance_to_json(*built[i]), representative.size());
    if (fresh) representative.push_back(i);
    slot[i] = it->second;
  }
  std::vector<Solved> solved(representative.size());
  parallel_for(representative.size(), [&](std::size_t r) {
    const Instance& inst = *built[representative[r]];
    try {
      const MilpModel model = build_milp(inst, MilpMode::feasibility, MilpOptions{false, true});
      const SolveOutcome out = solve_milp_feasibility(inst, model, backend);
      solved[r].feasible = out.feasible();
      solved[r].valid = !out.feasible() || naive_valid(inst, *out.schedule);
    } catch (const std::exception& e) {
      solved[r].error = e.what();
    }
    solved[r].done = true;
  });
  tally.distinct += representative.size();
  if (keep) keep->resize(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const ReductionCase& c = cases[i];
    ++tally.cases;
    const std::string& error = built[i] ? solved[slot[i]].error : build_error[i];
    if (!error.empty()) {
      if (tally.errors++ == 0 && tally.first_problem.empty()) tally.first_problem = c.label + ": " + error;
      continue;
    }
    const Solved& s = solved[slot[i]];
    tally.yes += c.expected;
    if (s.feasible != c.expected || !s.valid) {
      tally.problems.push_back(c.label + (c.expected ? " expected yes" : " expected no"));
      if (tally.mismatches++ == 0) tally.first_problem = tally.problems.back();
    }
    if (keep) (*keep)[i] = *built[i];
  }
}

std::vector<SimpleGraph> all_graphs_up_to(int max_n) {
  // one representative per isomorphism class
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      SimpleGraph g{n, {}};
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1u) g.edges.push_back(slots[s]);
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
      std::vector<std::pair<int, int>> canon;
      do {
        std::vector<std::pair<int, int>> image;
        for (auto [a, b] : g.edges) {
          const int x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
          image.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(image.begin(), image.end());
        if (canon.empty() || image < canon) canon = image;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(canon).second) out.push_back(g);
    }
  }
  return out;
}

std::vector<UnitIntervalInstance> interval_instances() {
  // up to 4 intervals, up to 2 colors, starts in {0..4}; canonical and deduplicated
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<UnitIntervalInstance> out;
  for (int colors = 1; colors <= 2; ++colors)
    for (int count = colors; count <= 4; ++count) {
      const int combos = static_cast<int>(std::pow(5 * colors, count));
      for (int code = 0; code < combos; ++code) {
        std::vector<std::pair<int, int>> ivs;
        int rest = code;
        for (int i = 0; i < count; ++i) {
          const int slot = rest % (5 * colors);
          rest /= 5 * colors;
          ivs.emplace_back(slot / 5, slot % 5);
        }
        std::sort(ivs.begin(), ivs.end());
        std::vector<bool> used(static_cast<std::size_t>(colors), false);
        bool ok = true;
        for (std::size_t i = 0; i < ivs.size(); ++i) {
          used[static_cast<std::size_t>(ivs[i].first)] = true;
          if (i > 0 && ivs[i].first == ivs[i - 1].first && ivs[i].second - ivs[i - 1].second <= 1) ok = false;
        }
        if (!ok || std::find(used.begin(), used.end(), false) != used.end()) continue;
        if (!seen.insert(ivs).second) continue;
        UnitIntervalInstance src{colors, {}};
        for (auto [c, s] : ivs) src.intervals.push_back({c, s});
        out.push_back(src);
      }
    }
  return out;
}

// --- criterion 7 ------------------------------------------------------------

bool within_sigmas(std::size_t observed, std::size_t total, double p) {
  const double n = static_cast<double>(total);
  const double sigma = std::sqrt(n * p * (1 - p));
  return std::abs(static_cast<double>(observed) - n * p) <= kSigmas * sigma;
}

Result generator_conformance() {
  std::size_t audits = 0, audit_failures = 0;
  auto audit = [&](const Instance& inst, double c_star, double d_star, std::size_t expected_paths) {
    ++audits;
    bool ok = inst.path_count() == expected_paths;
    const DecayingGraph& g = inst.graph();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      // c(v) = max(1, ceil(c* |P(v)|)) evaluated independently in long double
      const long double want = std::ceil(static_cast<long double>(c_star) * inst.paths_through(v).size() - 1e-9L);
      ok &= g.capacity(v) == std::max(1, static_cast<int>(want));
    }
    for (ConnectionIndex e = 0; e < g.connections().size(); ++e) {
      const Connection& c = g.connection(e);
      // d_lb: theta + max(#users, latest no-wait arrival over e)
      Time users = 0, latest = 0;
      for (const RoutePath& p : inst.paths()) {
        Time clock = 1;
        for (std::size_t h = 0; h < p.hop_count(); ++h) {
          clock += g.connection(p.hop(h)).traversal_time;
          if (p.hop(h) == e) {
            ++users;
            latest = std::max(latest, clock);
          }
        }
      }
      const Time lb = users == 0 ? c.traversal_time + 1 : c.traversal_time + std::max(users, latest);
      const Time want = std::max<Time>(1, static_cast<Time>(std::floor(d_star * lb + 0.5 + 1e-9)));
      ok &= c.deadline == want;
    }
    audit_failures += !ok;
  };

  std::map<std::string, std::size_t> kinds;
  std::map<Time, std::size_t> thetas;
  std::size_t single_arcs = 0, forward_arcs = 0, pairs = 0, theta_total = 0;
  std::uint64_t seed = 1;
  const std::vector<double> ps{0.5, 0.67, 0.83, 1.0}, ls{0.33, 0.44, 0.55, 0.66}, cs{0.1, 0.4, 0.7, 1.0},
      ds{0.2, 0.47, 0.73, 1.0}, star_ps{0.5, 1.0, 1.5, 2.0};
  for (int draw = 0; draw < 1000; ++draw, ++seed) {
    const std::size_t n = std::vector<std::size_t>{8, 12, 16}[draw % 3];
    const double p = ps[(draw / 3) % 4], l = ls[(draw / 12) % 4], c = cs[(draw / 48) % 4], d = ds[(draw / 192) % 4];
    const Instance inst = gen_path_instance({n, p, l, c, d, seed});
    audit(inst, c, d, static_cast<std::size_t>(std::floor(p * static_cast<double>(n) + 0.5 + 1e-9)));
    const auto order = path_order(inst.graph());
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      const VertexIndex a = order[i], b = order[i + 1];
      const auto ab = inst.graph().traversal(a, b), ba = inst.graph().traversal(b, a);
      ++pairs;
      if (ab && ba && *ab == *ba) {
        ++kinds["edge"];
      } else if (ab && ba) {
        ++kinds["two arcs"];
      } else {
        ++kinds["arc"];
        ++single_arcs;
        forward_arcs += ab.has_value();
      }
    }
    for (const Connection& con : inst.graph().connections()) ++thetas[con.traversal_time], ++theta_total;
    if (draw % 4 == 0) {
      const double sp = star_ps[(draw / 4) % 4];
      const Instance star = gen_star_instance({n, sp, c, d, seed + 100000});
      audit(star, c, d, static_cast<std::size_t>(std::floor(sp * static_cast<double>(n) + 0.5 + 1e-9)));
    }
  }
  bool uniform = within_sigmas(forward_arcs, single_arcs, 0.5);
  for (const char* k : {"edge", "arc", "two arcs"}) uniform &= within_sigmas(kinds[k], pairs, 1.0 / 3);
  std::size_t theta_out = 0;
  for (Time t = 5; t <= 20; ++t) theta_out += !within_sigmas(thetas[t], theta_total, 1.0 / 16);
  bool theta_range = true;
  for (const auto& [t, count] : thetas) theta_range &= t >= 5 && t <= 20;
  // 16 bins at 3 sigma: a single stray bin is expected about once in 23 runs, so allow one.
  uniform &= theta_range && theta_out <= 1;

  Result v;
  v.kind = audit_failures == 0 && uniform ? Result::pass : Result::fail;
  std::ostringstream s;
  s << audits << " audited instances, " << audit_failures << " formula mismatches; kinds edge/arc/two arcs = "
    << kinds["edge"] << '/' << kinds["arc"] << '/' << kinds["two arcs"] << " of " << pairs << ", arc direction "
    << forward_arcs << '/' << single_arcs << ", theta bins outside 3 sigma: " << theta_out << " of 16";
  v.detail = s.str();
  return v;
}

// --- criterion 9 ------------------------------------------------------------

Result smoke_bench(bool have_backend) {
  const fs::path dir = fs::temp_directory_path() / ("srdg-acceptance-bench-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto cli = [](std::vector<std::string> args, std::string* out = nullptr) {
    args.insert(args.begin(), "srdg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int code = tools::run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
    if (out) *out = o.str() + e.str();
    return code;
  };
  Result v;
  std::string log;
  const std::string corpus = (dir / "corpus").string();
  if (cli({"generate", "star", "--grid", "--n", "8", "--p-star", "0.5", "--c-star", "1", "--d-star",
           "0.2,0.47,0.73,1", "--seed", "9", "--out", corpus}, &log) != 0 ||
      cli({"generate", "path", "--grid", "--n", "8", "--p-star", "0.5", "--l-star", "0.33", "--c-star", "0.4",
           "--d-star", "1", "--seed", "9", "--out", corpus}, &log) != 0) {
    v.kind = Result::fail;
    v.detail = "grid generation failed: " + log;
    return v;
  }
  const std::string records = (dir / "records.csv").string(), summary = (dir / "summary.csv").string();
  std::vector<std::string> args{"bench", corpus, "--min-slack", "--jobs", "8", "--out", records, "--summary", summary};
  if (have_backend) args.push_back("--relaxation");
  if (cli(args, &log) != 0) {
    v.kind = Result::fail;
    v.detail = "bench failed: " + log;
    return v;
  }
  std::size_t rows = 0, bad = 0, errors = 0;
  std::vector<double> ratios;
  {
    std::istringstream in(read_text_file(records));
    std::string line;
    std::getline(in, line);
    bad += line != "instance,constellation,engine,repetition,status,verdict,d_star,seconds,relaxed_d_star,ratio,error";
    while (std::getline(in, line)) {
      ++rows;
      std::vector<std::string> cells;
      std::stringstream row(line);
      std::string cell;
      while (std::getline(row, cell, ',')) cells.push_back(cell);
      if (line.back() == ',') cells.emplace_back();
      if (cells.size() != 11) {
        ++bad;
        continue;
      }
      errors += cells[4] != "ok";
      if (!cells[9].empty()) ratios.push_back(std::stod(cells[9]));
    }
  }
  const std::string sum = read_text_file(summary);
  const bool summary_ok = sum.rfind("engine,constellation,runs,failures,", 0) == 0 && sum.find(",ALL,") != std::string::npos;
  fs::remove_all(dir);
  v.kind = rows == 50 && bad == 0 && errors == 0 && summary_ok ? Result::pass : Result::fail;
  std::ostringstream s;
  s << rows << " records, " << bad << " malformed, " << errors << " failed runs, summary "
    << (summary_ok ? "ok" : "malformed");
  if (!ratios.empty()) {
    const tools::Stats st = tools::describe_sample(ratios);
    s << fmt("; relaxation ratio mean %.3f std %.3f median %.3f", st.mean, st.std, st.median);
  }
  v.detail = s.str();
  return v;
}

}  // namespace

int main() {
  const auto backend = default_backend();
  std::vector<std::pair<int, Result>> results;
  auto emit = [&](int id, const Result& v) {
    static const char* tag[] = {"PASS", "FAIL", "SKIP"};
    std::printf("criterion %d %s: %s\n", id, tag[v.kind], v.detail.c_str());
    std::fflush(stdout);
    results.emplace_back(id, v);
  };
  auto no_backend = [] { return Result{Result::skip, "no MILP backend configured (set SRDG_SOLVER_CMD)"}; };

  // 1
  auto start = Clock::now();
  const auto paths = path_corpus();
  std::vector<int> path_brute;
  const Agreement pa = agree(paths, [](const Instance& i) { return solve_path_dp(i); }, &path_brute);
  emit(1, over_budget(report_agreement(pa, paths.size(), "path DP"), since(start), kBudgetPaths));

  // 2
  start = Clock::now();
  const auto stars = star_corpus();
  std::vector<int> star_brute;
  const Agreement sa = agree(stars, [](const Instance& i) { return solve_star(i); }, &star_brute);
  emit(2, over_budget(report_agreement(sa, stars.size(), "star solver"), since(start), kBudgetStars));

  // 3 and 4
  if (backend) {
    start = Clock::now();
    const MilpRun mr = milp_corpus(*backend);
    const double seconds = since(start);
    Result v3;
    v3.kind = mr.mismatches == 0 && mr.invalid == 0 && mr.errors == 0 ? Result::pass : Result::fail;
    std::ostringstream s3;
    s3 << kMilpCorpus << " instances: " << mr.mismatches << " d* mismatches vs oracle, " << mr.invalid
       << " invalid decoded schedules, " << mr.errors << " errors" << (mr.first_error.empty() ? "" : " (" + mr.first_error + ")");
    v3.detail = s3.str();
    emit(3, over_budget(v3, seconds, kBudgetMilp));
    Result v4;
    v4.kind = mr.bound_violations == 0 && mr.errors == 0 ? Result::pass : Result::fail;
    const tools::Stats st = tools::describe_sample(mr.ratios);
    std::ostringstream s4;
    s4 << mr.ratios.size() << " instances, " << mr.bound_violations << " with relaxed d* > d*; ratio mean "
       << fmt("%.3f std %.3f median %.3f", st.mean, st.std, st.median);
    v4.detail = s4.str();
    emit(4, v4);
  } else {
    emit(3, no_backend());
    emit(4, no_backend());
  }

  // 5 and 6
  std::vector<Instance> uig_gadgets, sat_gadgets;
  if (backend) {
    start = Clock::now();
    std::map<std::string, ReductionTally> tallies;
    std::vector<ReductionCase> vc, cubic, uig, sat;
    for (const SimpleGraph& g : all_graphs_up_to(4))
      for (int k = 0; k <= g.n; ++k) {
        std::string edges;
        for (auto [a, b] : g.edges) edges += (edges.empty() ? "" : " ") + std::to_string(a) + std::to_string(b);
        vc.push_back({"vc n=" + std::to_string(g.n) + " k=" + std::to_string(k) + " E={" + edges + "}",
                      [g, k] { return reduce_vertex_cover(g, k); }, oracle_vc(g, k)});
      }
    SimpleGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    SimpleGraph cube{8, {}};
    for (int v = 0; v < 8; ++v)
      for (int bit : {1, 2, 4})
        if (v < (v ^ bit)) cube.edges.emplace_back(v, v ^ bit);
    for (const auto& [name, g] : std::vector<std::pair<std::string, SimpleGraph>>{{"K4", k4}, {"cube", cube}})
      for (int k = 1; k <= 3; ++k)
        cubic.push_back({name + " k=" + std::to_string(k), [g = g, k] { return reduce_cubic_is(g, k); }, oracle_is(g, k)});
    for (const UnitIntervalInstance& src : interval_instances())
      uig.push_back({"mis-uig", [src] { return reduce_mis_uig(src); }, oracle_mis_uig(src)});
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      const Formula223 f = sample_formula223(3, seed);
      sat.push_back({"223sat seed " + std::to_string(seed), [f] { return reduce_223sat(f); }, oracle_223sat(f)});
    }
    run_reductions(vc, *backend, tallies["vertex cover"]);
    run_reductions(cubic, *backend, tallies["cubic IS"]);
    run_reductions(uig, *backend, tallies["MIS-UIG"], &uig_gadgets);
    run_reductions(sat, *backend, tallies["(2,2)-3SAT"], &sat_gadgets);
    Result v5;
    std::ostringstream s5;
    bool ok = true;
    for (const auto& [name, t] : tallies) {
      ok &= t.mismatches == 0 && t.errors == 0 && t.cases > 0;
      s5 << name << ' ' << t.cases << " cases (" << t.yes << " yes, " << t.distinct << " distinct gadgets) " << t.mismatches << " mismatches " << t.errors
         << " errors";
      if (!t.problems.empty()) {
        s5 << " (";
        for (std::size_t i = 0; i < t.problems.size(); ++i) s5 << (i ? ", " : "") << t.problems[i];
        s5 << ')';
      } else if (!t.first_problem.empty()) {
        s5 << " first: " << t.first_problem;
      }
      s5 << "; ";
    }
    v5.kind = ok ? Result::pass : Result::fail;
    v5.detail = s5.str();
    emit(5, over_budget(v5, since(start), kBudgetReductions));
  } else {
    emit(5, no_backend());
    for (const UnitIntervalInstance& src : interval_instances()) uig_gadgets.push_back(reduce_mis_uig(src));
    for (std::uint64_t seed = 0; seed < 24; ++seed) sat_gadgets.push_back(reduce_223sat(sample_formula223(3, seed)));
  }

  {
    std::size_t checked = 0, broken = 0;
    for (const Instance& inst : uig_gadgets) {
      if (inst.graph().vertex_count() == 0) continue;
      ++checked;
      bool ok = inst.graph().shape() == GraphShape::path && is_exogenous(inst.graph());
      for (VertexIndex v = 0; v < inst.graph().vertex_count(); ++v) ok &= inst.graph().capacity(v) == 1;
      broken += !ok;
    }
    for (const Instance& inst : sat_gadgets) {
      if (inst.graph().vertex_count() == 0) continue;
      ++checked;
      const GraphShape shape = inst.graph().shape();
      bool ok = (shape == GraphShape::tree || shape == GraphShape::path || shape == GraphShape::star) &&
                is_exogenous(inst.graph()) && inst.lifetime() == 4;
      for (VertexIndex v = 0; v < inst.graph().vertex_count(); ++v)
        ok &= inst.graph().capacity(v) >= static_cast<int>(inst.paths_through(v).size());
      broken += !ok;
    }
    Result v6{broken == 0 && checked > 0 ? Result::pass : Result::fail,
               std::to_string(checked) + " gadgets checked (" + std::to_string(uig_gadgets.size()) + " interval, " +
                   std::to_string(sat_gadgets.size()) + " SAT), " + std::to_string(broken) + " structural failures"};
    emit(6, v6);
  }

  // 7
  start = Clock::now();
  const Result v7 = generator_conformance();
  emit(7, over_budget(v7, since(start), kBudgetGenerators));

  // 8
  {
    std::size_t path_bad = 0, star_bad = 0, path_trips = 0, star_trips = 0;
    auto check_paths = [&](const std::vector<Instance>& corpus, const std::vector<int>* known) {
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        const bool over = vertex_load(corpus[i]).max > 4u * static_cast<std::size_t>(corpus[i].lifetime());
        if (!over) continue;
        ++path_trips;
        const bool feasible = known ? (*known)[i] == 1 : brute_force_feasible(corpus[i]).feasible();
        path_bad += feasible;
      }
    };
    auto check_stars = [&](const std::vector<Instance>& corpus, const std::vector<int>* known) {
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!star_precheck_infeasible(corpus[i])) continue;
        ++star_trips;
        const bool feasible = known ? (*known)[i] == 1 : brute_force_feasible(corpus[i]).feasible();
        star_bad += feasible;
      }
    };
    check_paths(paths, &path_brute);
    check_stars(stars, &star_brute);
    check_paths(crowded_paths(), nullptr);
    check_stars(crowded_stars(), nullptr);
    Result v8{path_bad == 0 && star_bad == 0 ? Result::pass : Result::fail,
               "vl > 4 tau tripped on " + std::to_string(path_trips) + " path instances, " + std::to_string(path_bad) +
                   " of them feasible; |P| > c* d* tripped on " + std::to_string(star_trips) + " star instances, " +
                   std::to_string(star_bad) + " of them feasible"};
    emit(8, v8);
  }

  // 9
  start = Clock::now();
  const Result v9 = smoke_bench(backend.has_value());
  emit(9, over_budget(v9, since(start), kBudgetBench));

  const bool failed = std::any_of(results.begin(), results.end(),
                                  [](const auto& r) { return r.second.kind == Result::fail; });
  return failed ? 1 : 0;
}
