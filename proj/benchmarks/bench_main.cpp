#include <benchmark/benchmark.h>

#include <random>

#include "stc/bundled.hpp"
#include "stc/dsl.hpp"
#include "stc/semantics.hpp"

using namespace stc;

namespace {

Scenario load(const std::string& name) {
  return parse_scenario(*bundled_scenario_text(name)).document->scenario;
}

// n binary variables on a space-like row, one chained table constraint
Scenario synthetic(int n_vars) {
  Scenario s;
  for (int i = 0; i < n_vars; ++i) {
    s.points.push_back({"P" + std::to_string(i),
                        make_point(Rat(0), Rat(3 * i))});
    s.variables.push_back({"v" + std::to_string(i),
                           "P" + std::to_string(i), {"0", "1"}});
    s.actual.values.push_back(0);
  }
  for (int i = 0; i + 1 < n_vars; ++i) {
    Constraint con;
    con.scope = {"v" + std::to_string(i), "v" + std::to_string(i + 1)};
    con.allowed = {{"0", "0"}, {"0", "1"}, {"1", "1"}};
    s.constraints.push_back(con);
  }
  return s;
}

std::vector<SpacetimePoint> random_points(int n) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 4);
  std::vector<SpacetimePoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    SpacetimePoint p = make_point(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
    bool dup = false;
    for (const auto& q : pts)
      if (q == p) dup = true;
    if (!dup) pts.push_back(p);
  }
  return pts;
}

void BM_EnumerateWorlds(benchmark::State& state) {
  Scenario s = synthetic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_worlds(s));
}
BENCHMARK(BM_EnumerateWorlds)->Arg(6)->Arg(10)->Arg(14);

void BM_WorldSpace(benchmark::State& state) {
  Scenario s = synthetic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    WorldSpace ws(s);
    benchmark::DoNotOptimize(ws.size());
  }
}
BENCHMARK(BM_WorldSpace)->Arg(6)->Arg(8);

void BM_DstcEvalGhz(benchmark::State& state) {
  Scenario s = load("ghz-fig2");
  Proposition phi = atom("a", "+1"), psi = atom("c", "+1");
  for (auto _ : state)
    benchmark::DoNotOptimize(dstc_eval(s, phi, psi).truth);
}
BENCHMARK(BM_DstcEvalGhz);

void BM_DstcEvalCached(benchmark::State& state) {
  Scenario s = synthetic(10);
  WorldSpace ws(s);
  Proposition phi = atom("v0", "1"), psi = atom("v9", "1");
  for (auto _ : state)
    benchmark::DoNotOptimize(dstc_eval(ws, phi, psi).truth);
}
BENCHMARK(BM_DstcEvalCached);

void BM_FutureClosure(benchmark::State& state) {
  auto pts = random_points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(future_closure(pts));
}
BENCHMARK(BM_FutureClosure)->Arg(8)->Arg(32)->Arg(128);

void BM_EnumerateOrderings(benchmark::State& state) {
  auto pts = random_points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orderings(pts));
}
BENCHMARK(BM_EnumerateOrderings)->Arg(4)->Arg(6)->Arg(8);

void BM_ParseScenario(benchmark::State& state) {
  std::string text = *bundled_scenario_text("epr");
  for (auto _ : state) benchmark::DoNotOptimize(parse_scenario(text).ok());
}
BENCHMARK(BM_ParseScenario);

void BM_AnyFrameEval(benchmark::State& state) {
  Scenario s = load("ghz-fig2");
  Proposition phi = atom("a", "+1"), psi = atom("c", "+1");
  for (auto _ : state)
    benchmark::DoNotOptimize(any_frame_eval(s, phi, psi).truth);
}
BENCHMARK(BM_AnyFrameEval);

}  // namespace

BENCHMARK_MAIN();
