#include <benchmark/benchmark.h>

#include <random>

#include "srdg/dp_path.hpp"
#include "srdg/exact.hpp"
#include "srdg/generators.hpp"
#include "srdg/milp.hpp"
#include "srdg/reductions.hpp"
#include "srdg/star_solver.hpp"

namespace {

using namespace srdg;

std::vector<Interval> random_intervals(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Interval> out(n);
  for (auto& iv : out) {
    iv.first = 1 + static_cast<Time>(rng() % 1000);
    iv.last = iv.first + static_cast<Time>(rng() % 50);
  }
  return out;
}

void BM_MaxSimultaneous(benchmark::State& state) {
  const auto intervals = random_intervals(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_simultaneous(intervals));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxSimultaneous)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oNLogN);

void BM_Validate(benchmark::State& state) {
  const Instance inst = gen_star_instance({static_cast<std::size_t>(state.range(0)), 2.0, 1.0, 1.0, 3});
  const Temporalization s = sequential_color_schedule(inst);
  for (auto _ : state) benchmark::DoNotOptimize(validate(inst, s, 1000));
}
BENCHMARK(BM_Validate)->Arg(8)->Arg(16)->Arg(64);

// Small decaying paths where the table stays tiny: unit traversal times, short lifetime.
Instance small_path(std::size_t n, std::size_t paths, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> ids;
  std::vector<Connection> cons;
  for (std::size_t v = 0; v < n; ++v) ids.push_back("v" + std::to_string(v));
  for (std::size_t v = 0; v + 1 < n; ++v) cons.push_back({v, v + 1, ConnectionKind::edge, 1, 6});
  std::vector<std::vector<VertexIndex>> routes;
  for (std::size_t p = 0; p < paths; ++p) {
    const auto a = static_cast<VertexIndex>(rng() % (n - 1));
    routes.push_back({a, a + 1});
  }
  return Instance(DecayingGraph(ids, std::vector<int>(n, 2), cons, 6), routes);
}

void BM_PathDp(benchmark::State& state) {
  const Instance inst = small_path(static_cast<std::size_t>(state.range(0)), 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_path_dp(inst));
}
BENCHMARK(BM_PathDp)->Arg(4)->Arg(8)->Arg(16);

void BM_BruteForcePath(benchmark::State& state) {
  const Instance inst = small_path(static_cast<std::size_t>(state.range(0)), 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_feasible(inst));
}
BENCHMARK(BM_BruteForcePath)->Arg(4)->Arg(8)->Arg(16);

void BM_StarSolver(benchmark::State& state) {
  const Instance inst = gen_star_instance({8, static_cast<double>(state.range(0)) / 8.0, 1.0, 1.0, 7});
  for (auto _ : state) benchmark::DoNotOptimize(solve_star(inst));
}
BENCHMARK(BM_StarSolver)->Arg(2)->Arg(3)->Arg(4);

void BM_BuildMilp(benchmark::State& state) {
  const Instance inst = gen_path_instance({static_cast<std::size_t>(state.range(0)), 1.0, 0.55, 0.4, 0.73, 11});
  for (auto _ : state) benchmark::DoNotOptimize(export_lp(build_milp(inst, MilpMode::min_slack)));
}
BENCHMARK(BM_BuildMilp)->Arg(8)->Arg(12)->Arg(16);

void BM_ReduceCubic(benchmark::State& state) {
  SimpleGraph cube{8, {}};
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) cube.edges.emplace_back(v, v ^ bit);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_cubic_is(cube, 3));
}
BENCHMARK(BM_ReduceCubic);

void BM_GeneratePath(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(gen_path_instance({static_cast<std::size_t>(state.range(0)), 1.0, 0.66, 0.7, 0.47, seed++}));
}
BENCHMARK(BM_GeneratePath)->Arg(8)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
