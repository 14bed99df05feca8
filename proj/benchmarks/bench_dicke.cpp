#include <benchmark/benchmark.h>

#include "dicke/oracle.hpp"
#include "dicke/sweep.hpp"
#include "dicke/thermo.hpp"
#include "dicke/units.hpp"

namespace {

using namespace dicke;

DickeParams working_point(double lambda_rel) {
  DickeParams p;
  p.omega = units::hz_to_rad(15e6);
  p.omega0 = units::hz_to_rad(8.3e3);
  p.lambda = lambda_rel * critical_coupling(p);
  return p;
}

void BM_OperatingPoint(benchmark::State& state) {
  const DickeParams p = working_point(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_operating_point(p));
  }
}
BENCHMARK(BM_OperatingPoint);

void BM_TwoStrokeCycle(benchmark::State& state) {
  const DickeParams a = working_point(0.5);
  DickeParams b = a;
  b.omega *= 2.0;
  const CycleProtocol proto = CycleProtocol::two_stroke(a, b, 0.003);
  const GaussianState s = local_thermal_state(a, 0.1, 0.01);
  const auto method = state.range(0) == 0 ? WorkMethod::accumulated : WorkMethod::stepwise;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_cycle(proto, s, method));
  }
}
BENCHMARK(BM_TwoStrokeCycle)->Arg(0)->Arg(1);

void BM_SweepPoint(benchmark::State& state) {
  SweepConfig c;
  c.state = static_cast<StateKind>(state.range(0));
  c = c.resolved();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_point(c, 0.5));
  }
}
BENCHMARK(BM_SweepPoint)->Arg(0)->Arg(2);

void BM_Sweep(benchmark::State& state) {
  SweepConfig c;
  c.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(c));
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OracleCycle(benchmark::State& state) {
  oracle::FockConfig cfg;
  cfg.cutoff_per_mode = static_cast<int>(state.range(0));
  DickeParams a;
  a.omega = 1.0;
  a.omega0 = 0.02;
  a.lambda = 0.5 * critical_coupling(a);
  DickeParams b = a;
  b.omega = 2.0;
  const CycleProtocol proto = CycleProtocol::two_stroke(a, b, 30.0);
  const oracle::FockDensity rho = oracle::local_occupation_density(0.0, 0.5, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::oracle_work(proto, rho, cfg));
  }
}
BENCHMARK(BM_OracleCycle)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another GCC.
BENCHMARK_MAIN();
