#include <benchmark/benchmark.h>

#include "heosc/solver.hpp"

namespace {

void BM_SampleSurfaces(benchmark::State& state) {
  const heosc::QuantumNumbers n = heosc::validate_quantum_numbers(1, 1.5, 1.5);
  const heosc::AngularConfig cfg = heosc::make_config(-0.22725, 1.2635);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heosc::sample_surfaces(cfg, n));
  }
}
BENCHMARK(BM_SampleSurfaces);

void BM_GridScan(benchmark::State& state) {
  const heosc::QuantumNumbers n = heosc::validate_quantum_numbers(1, 1.5, 1.5);
  heosc::SearchDomain domain;
  domain.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(heosc::grid_scan(domain, n, state.range(1)));
  }
  state.SetItemsProcessed(state.iterations() * domain.resolution *
                          domain.resolution);
}
BENCHMARK(BM_GridScan)
    ->Args({200, 1})
    ->Args({200, 0})
    ->Args({1000, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace
