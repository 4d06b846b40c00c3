// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "rhoplane/area.hpp"
#include "rhoplane/property_lab.hpp"

using namespace rhoplane;

namespace {

const NormSpec& lp4() {
  static const NormSpec spec = NormSpec::lp(4);
  return spec;
}

void BM_SectorArea(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sector_area(lp4(), 0.0, kTwoPi, static_cast<int>(state.range(0))).value);
}

void BM_SectorAreaSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sector_area_serial(lp4(), 0.0, kTwoPi, static_cast<int>(state.range(0))).value);
}

void BM_Check(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_p_rho_s(lp4(), 0.5, static_cast<int>(state.range(0))).max_midpoint_deviation);
}

void BM_CheckSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_p_rho_s_serial(lp4(), 0.5, static_cast<int>(state.range(0))).max_midpoint_deviation);
}

}  // namespace

BENCHMARK(BM_SectorArea)->Arg(4096)->Arg(65536)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SectorAreaSerial)->Arg(4096)->Arg(65536)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Check)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
