#include <benchmark/benchmark.h>

#include "rotcav/dynamics.hpp"
#include "rotcav/response_oracle.hpp"
#include "rotcav/scan.hpp"
#include "rotcav/scenario.hpp"

namespace {

using namespace rotcav;

void BM_TransitionRatesCavity(benchmark::State& state) {
  const auto p = scenario_parameters("scenario1");
  const auto atom = p.atom();
  const auto motion = p.motion();
  const auto env = p.environment();
  for (auto _ : state) benchmark::DoNotOptimize(transition_rates(atom, motion, env));
}
BENCHMARK(BM_TransitionRatesCavity);

void BM_ResponseOracle(benchmark::State& state) {
  const CavitySpec cav(2.5e9, 1e7, 1e-14);
  const double w = cav.omega_c() + static_cast<double>(state.range(0)) * cav.linewidth();
  for (auto _ : state) benchmark::DoNotOptimize(response_oracle(cav, w));
}
BENCHMARK(BM_ResponseOracle)->Arg(0)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_RunScan(benchmark::State& state) {
  ScanConfig cfg;
  cfg.fixed = scenario_parameters("scenario1");
  cfg.sweep = "omega-c";
  cfg.lo = 1e7;
  cfg.hi = 1e10;
  cfg.grid = GridKind::Logarithmic;
  cfg.points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_scan(cfg, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunScan)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SimulateJumps(benchmark::State& state) {
  const double rate = 3.57e7;
  const double duration = static_cast<double>(state.range(0)) / rate;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_jumps(rate, rate, duration, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateJumps)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
