#include "srdg_tools/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "srdg/errors.hpp"
#include "srdg/generators.hpp"
#include "srdg/io.hpp"
#include "srdg/milp.hpp"
#include "srdg/reductions.hpp"
#include "srdg_tools/bench.hpp"
#include "srdg_tools/engines.hpp"

namespace srdg::tools {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kFailure = 3;

struct BackendFlags {
  std::string command;
  std::string dialect = "cbc";

  std::optional<SolverBackend> resolve() const {
    if (command.empty()) return default_backend();
    const auto d = parse_dialect(dialect);
    if (!d) throw InvalidInput("unknown solver dialect '" + dialect + "'");
    return SolverBackend{command, *d};
  }
};

void add_backend_flags(CLI::App* app, BackendFlags& flags) {
  app->add_option("--solver-cmd", flags.command,
                  "MILP backend command template with {model} and {solution} placeholders");
  app->add_option("--solver-dialect", flags.dialect, "solution file dialect: cbc, highs or plain")
      ->check(CLI::IsMember({"cbc", "highs", "plain"}));
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  else
    write_text_file(path, text);
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string engine = "auto";
  bool min_slack = false;
  bool presolve = false;
  bool time_indexed = false;
  bool json = false;
  std::string schedule_out;
  std::uint64_t budget = 10'000'000;
  std::size_t dp_states = 2'000'000;
  BackendFlags backend;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Instance instance = parse_instance(read_text_file(a.instance));
  EngineRequest request;
  request.engine = a.engine;
  request.min_slack = a.min_slack;
  request.presolve = a.presolve;
  request.time_indexed = a.time_indexed;
  request.node_budget = a.budget;
  request.dp_states = a.dp_states;
  request.backend = a.backend.resolve();
  const auto start = std::chrono::steady_clock::now();
  const EngineResult result = run_engine(instance, request);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (result.schedule && !a.schedule_out.empty()) write_text_file(a.schedule_out, schedule_to_json(*result.schedule));
  if (a.json) {
    json doc{{"engine", result.engine},
             {"shape", std::string(to_string(instance.graph().shape()))},
             {"verdict", std::string(to_string(result.verdict))},
             {"nodes", result.nodes},
             {"seconds", seconds}};
    if (result.d_star) doc["d_star"] = *result.d_star;
    if (result.schedule) doc["schedule"] = json::parse(schedule_to_json(*result.schedule));
    out << doc.dump(2) << '\n';
  } else {
    out << "engine: " << result.engine << '\n';
    if (result.d_star) out << "d* = " << *result.d_star << '\n';
    out << (result.verdict == Verdict::feasible ? "FEASIBLE" : "INFEASIBLE") << '\n';
  }
  return result.verdict == Verdict::feasible ? kOk : kNo;
}

// --- validate --------------------------------------------------------------

int cmd_validate(const std::string& instance_file, const std::string& schedule_file, Time slack, bool as_json,
                 std::ostream& out) {
  const Instance instance = parse_instance(read_text_file(instance_file));
  const Temporalization schedule = parse_schedule(read_text_file(schedule_file));
  const Diagnosis diag = validate(instance, schedule, slack);
  if (as_json) {
    out << diagnosis_to_json(instance, diag) << '\n';
  } else {
    out << (diag.valid() ? "VALID" : "INVALID") << '\n';
    for (const auto& v : diag.violations) out << "  " << describe(instance, v) << '\n';
  }
  return diag.valid() ? kOk : kNo;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::vector<std::string> n{"8"};
  std::vector<std::string> p_star{"1"};
  std::vector<std::string> l_star{"0.33"};
  std::vector<std::string> c_star{"1"};
  std::vector<std::string> d_star{"1"};
  std::uint64_t seed = 0;
  bool grid = false;
  unsigned replicates = 10;
  std::string out = "-";
  std::string geo;
  std::string target = "A";
};

double to_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("expected a number, got '" + s + "'");
  }
}

std::size_t to_size(const std::string& s) {
  const double v = to_double(s);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) throw InvalidInput("expected a count, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

const std::vector<std::string>& pick(const std::vector<std::string>& given, const std::vector<std::string>& full,
                                     bool defaulted) {
  return defaulted ? full : given;
}

int cmd_generate(const std::string& family, const GenerateArgs& a, const CLI::App& sub, std::ostream& out) {
  if (family == "geo") {
    if (a.geo.empty()) throw InvalidInput("generate geo needs --geo");
    const GeoGraph geo = parse_geo_graph(read_text_file(a.geo));
    Zone target = Zone::a;
    if (a.target == "B") target = Zone::b;
    else if (a.target == "C") target = Zone::c;
    else if (a.target != "A") throw InvalidInput("--target must be A, B or C");
    if (a.p_star.size() != 1) throw InvalidInput("generate geo takes a single --p-star");
    emit(out, a.out, instance_to_json(gen_geo_instance(geo, to_double(a.p_star[0]), target, a.seed)));
    return kOk;
  }
  const bool path = family == "path";
  if (!a.grid) {
    for (const auto* list : {&a.n, &a.p_star, &a.l_star, &a.c_star, &a.d_star})
      if (list->size() != 1) throw InvalidInput("lists of factor values need --grid");
    Instance instance;
    if (path)
      instance = gen_path_instance({to_size(a.n[0]), to_double(a.p_star[0]), to_double(a.l_star[0]),
                                    to_double(a.c_star[0]), to_double(a.d_star[0]), a.seed});
    else
      instance = gen_star_instance(
          {to_size(a.n[0]), to_double(a.p_star[0]), to_double(a.c_star[0]), to_double(a.d_star[0]), a.seed});
    emit(out, a.out, instance_to_json(instance));
    return kOk;
  }

  if (a.out == "-") throw InvalidInput("--grid needs --out <directory>");
  fs::create_directories(a.out);
  auto defaulted = [&](const char* flag) { return sub.get_option(flag)->count() == 0; };
  const auto& ns = pick(a.n, {"8", "12", "16"}, defaulted("--n"));
  const auto& ps = pick(a.p_star, path ? std::vector<std::string>{"0.5", "0.67", "0.83", "1"}
                                       : std::vector<std::string>{"0.5", "1", "1.5", "2"},
                        defaulted("--p-star"));
  const auto& cs = pick(a.c_star, {"0.1", "0.4", "0.7", "1"}, defaulted("--c-star"));
  const auto& ds = pick(a.d_star, {"0.2", "0.47", "0.73", "1"}, defaulted("--d-star"));
  const auto& ls = path ? pick(a.l_star, {"0.33", "0.44", "0.55", "0.66"}, defaulted("--l-star"))
                        : std::vector<std::string>{""};
  std::size_t written = 0;
  for (const auto& n : ns)
    for (const auto& p : ps)
      for (const auto& c : cs)
        for (const auto& d : ds)
          for (const auto& l : ls) {
            const std::string constellation = "I_" + n + "_" + p + "_" + c + "_" + d + (path ? "_" + l : "");
            for (unsigned x = 0; x < a.replicates; ++x) {
              const std::uint64_t seed = derive_seed(a.seed, constellation, x);
              const Instance instance =
                  path ? gen_path_instance({to_size(n), to_double(p), to_double(l), to_double(c), to_double(d), seed})
                       : gen_star_instance({to_size(n), to_double(p), to_double(c), to_double(d), seed});
              write_text_file(fs::path(a.out) / (constellation + "_" + std::to_string(x) + ".json"),
                              instance_to_json(instance));
              ++written;
            }
          }
  out << "wrote " << written << " instances to " << a.out << '\n';
  return kOk;
}

// --- reduce ----------------------------------------------------------------

struct ReduceArgs {
  std::string input;
  int k = -1;
  std::string out = "-";
  std::string expected_out;
  int sample_vars = 0;
  std::uint64_t seed = 0;
};

int cmd_reduce(const std::string& problem, const ReduceArgs& a, std::ostream& out) {
  Instance instance;
  bool expected = false;
  json side{{"problem", problem}};
  auto need_k = [&] {
    if (a.k < 0) throw InvalidInput("this reduction needs --k");
    side["k"] = a.k;
  };
  if (problem == "223sat") {
    Formula223 f;
    if (a.sample_vars > 0) {
      f = sample_formula223(a.sample_vars, a.seed);
      side["seed"] = a.seed;
    } else {
      if (a.input.empty()) throw InvalidInput("223sat needs an input file or --sample");
      f = parse_cnf(read_text_file(a.input));
    }
    instance = reduce_223sat(f);
    expected = oracle_223sat(f);
    side["variables"] = f.variables;
    side["clauses"] = f.clauses;
  } else {
    if (a.input.empty()) throw InvalidInput("reduce " + problem + " needs an input file");
    const std::string text = read_text_file(a.input);
    if (problem == "mis-uig") {
      const UnitIntervalInstance src = parse_intervals(text);
      instance = reduce_mis_uig(src);
      expected = oracle_mis_uig(src);
    } else if (problem == "cubic-is") {
      need_k();
      const SimpleGraph g = parse_edge_list(text);
      instance = reduce_cubic_is(g, a.k);
      expected = oracle_is(g, a.k);
    } else {
      need_k();
      const SimpleGraph g = parse_edge_list(text);
      instance = reduce_vertex_cover(g, a.k);
      expected = oracle_vc(g, a.k);
    }
  }
  side["expected"] = expected ? "yes" : "no";
  emit(out, a.out, instance_to_json(instance));
  std::string sidecar = a.expected_out;
  if (sidecar.empty() && a.out != "-") {
    fs::path p(a.out);
    sidecar = (p.parent_path() / (p.stem().string() + ".expected.json")).string();
  }
  if (!sidecar.empty()) write_text_file(sidecar, side.dump(2) + "\n");
  return kOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string corpus;
  std::vector<std::string> engines{"auto"};
  unsigned repetitions = 1;
  unsigned jobs = 1;
  bool min_slack = false;
  bool relaxation = false;
  bool presolve = false;
  bool time_indexed = false;
  std::uint64_t budget = 10'000'000;
  std::string records = "-";
  std::string summary;
  BackendFlags backend;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchOptions options;
  options.engines = a.engines;
  options.repetitions = std::max(1u, a.repetitions);
  options.jobs = std::max(1u, a.jobs);
  options.min_slack = a.min_slack;
  options.relaxation = a.relaxation;
  options.request.presolve = a.presolve;
  options.request.time_indexed = a.time_indexed;
  options.request.node_budget = a.budget;
  options.request.backend = a.backend.resolve();
  const auto records = run_bench(corpus_files(a.corpus), options);
  emit(out, a.records, records_csv(records));
  if (!a.summary.empty()) emit(out, a.summary, summary_csv(records));
  return kOk;
}

// --- export-lp -------------------------------------------------------------

int cmd_export_lp(const std::string& instance_file, const std::string& mode, bool relax, const MilpOptions& options,
                  const std::string& path, std::ostream& out) {
  const Instance instance = parse_instance(read_text_file(instance_file));
  const MilpModel model =
      build_milp(instance, mode == "feasibility" ? MilpMode::feasibility : MilpMode::min_slack, options);
  emit(out, path, export_lp(model, relax));
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smooth routing in decaying graphs: solvers, generators and gadgets", "srdg"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "decide feasibility or minimise the deadline slack");
  s->add_option("instance", solve.instance, "instance JSON")->required();
  s->add_option("--engine", solve.engine, "auto, brute, dp, star or milp")
      ->check(CLI::IsMember({"auto", "brute", "dp", "star", "milp"}));
  s->add_flag("--min-slack", solve.min_slack, "compute d*, the least uniform deadline extension");
  s->add_flag("--presolve", solve.presolve, "tighten the MILP before export");
  s->add_flag("--time-indexed", solve.time_indexed, "MILP with one binary per hop and departure time");
  s->add_option("--schedule-out", solve.schedule_out, "write the schedule JSON here");
  s->add_option("--node-budget", solve.budget, "brute force node budget");
  s->add_option("--dp-states", solve.dp_states, "dynamic program layer size cap");
  s->add_flag("--json", solve.json, "machine-readable output");
  add_backend_flags(s, solve.backend);

  std::string v_instance, v_schedule;
  Time v_slack = 0;
  bool v_json = false;
  auto* v = app.add_subcommand("validate", "check a schedule against an instance");
  v->add_option("instance", v_instance, "instance JSON")->required();
  v->add_option("schedule", v_schedule, "schedule JSON")->required();
  v->add_option("--slack", v_slack, "uniform deadline extension")->check(CLI::NonNegativeNumber);
  v->add_flag("--json", v_json, "machine-readable output");

  GenerateArgs gen;
  std::string family;
  auto* g = app.add_subcommand("generate", "random instances");
  g->add_option("family", family, "path, star or geo")->required()->check(CLI::IsMember({"path", "star", "geo"}));
  g->add_option("--n", gen.n, "vertex count(s)")->delimiter(',');
  g->add_option("--p-star", gen.p_star, "path factor(s)")->delimiter(',');
  g->add_option("--l-star", gen.l_star, "length factor(s), paths only")->delimiter(',');
  g->add_option("--c-star", gen.c_star, "capacity factor(s)")->delimiter(',');
  g->add_option("--d-star", gen.d_star, "deadline scale factor(s)")->delimiter(',');
  g->add_option("--seed", gen.seed, "base seed");
  g->add_flag("--grid", gen.grid, "emit the factorial design I_n_p_c_d(_l)_x; unset factors take the full range");
  g->add_option("--replicates", gen.replicates, "instances per constellation");
  g->add_option("--out", gen.out, "output file, or directory with --grid");
  g->add_option("--geo", gen.geo, "geo graph JSON");
  g->add_option("--target", gen.target, "target zone A, B or C");

  ReduceArgs red;
  std::string problem;
  auto* r = app.add_subcommand("reduce", "build a hardness gadget from a source instance");
  r->add_option("problem", problem, "mis-uig, cubic-is, vc or 223sat")
      ->required()
      ->check(CLI::IsMember({"mis-uig", "cubic-is", "vc", "223sat"}));
  r->add_option("input", red.input, "source file: intervals, DIMACS edge list or DIMACS CNF");
  r->add_option("--k", red.k, "solution size bound")->check(CLI::NonNegativeNumber);
  r->add_option("--out", red.out, "instance JSON output");
  r->add_option("--expected-out", red.expected_out, "sidecar with the oracle verdict");
  r->add_option("--sample", red.sample_vars, "223sat: sample a formula with this many variables");
  r->add_option("--seed", red.seed, "223sat sampling seed");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "run engines over a corpus and write CSV");
  b->add_option("corpus", bench.corpus, "directory of instance JSON files")->required()->check(CLI::ExistingDirectory);
  b->add_option("--engines", bench.engines, "engines to run")->delimiter(',');
  b->add_option("--repetitions", bench.repetitions, "runs per instance and engine");
  b->add_option("--jobs", bench.jobs, "worker threads");
  b->add_flag("--min-slack", bench.min_slack, "record d* instead of the verdict");
  b->add_flag("--relaxation", bench.relaxation, "also solve the LP relaxation (implies --min-slack)");
  b->add_flag("--presolve", bench.presolve, "tighten MILP models");
  b->add_flag("--time-indexed", bench.time_indexed, "time-indexed MILP models");
  b->add_option("--node-budget", bench.budget, "brute force node budget");
  b->add_option("--out", bench.records, "per-run CSV");
  b->add_option("--summary", bench.summary, "aggregated CSV");
  add_backend_flags(b, bench.backend);

  std::string lp_instance, lp_mode = "min-slack", lp_out = "-";
  bool lp_relax = false;
  MilpOptions lp_options;
  auto* e = app.add_subcommand("export-lp", "write the MILP in LP format");
  e->add_option("instance", lp_instance, "instance JSON")->required();
  e->add_option("--mode", lp_mode, "feasibility or min-slack")->check(CLI::IsMember({"feasibility", "min-slack"}));
  e->add_flag("--relax", lp_relax, "drop integrality");
  e->add_flag("--presolve", lp_options.presolve, "tighten the model");
  e->add_flag("--time-indexed", lp_options.time_indexed, "one binary per hop and departure time");
  e->add_option("--out", lp_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out);
    if (v->parsed()) return cmd_validate(v_instance, v_schedule, v_slack, v_json, out);
    if (g->parsed()) return cmd_generate(family, gen, *g, out);
    if (r->parsed()) return cmd_reduce(problem, red, out);
    if (b->parsed()) return cmd_bench(bench, out);
    if (e->parsed()) return cmd_export_lp(lp_instance, lp_mode, lp_relax, lp_options, lp_out, out);
  } catch (const InvalidInput& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& ex) {
    err << "resource limit: " << ex.what() << '\n';
    return kFailure;
  } catch (const SolverError& ex) {
    err << "solver failure: " << ex.what() << '\n';
    return kFailure;
  } catch (const std::exception& ex) {
    err << "failure: " << ex.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace srdg::tools
