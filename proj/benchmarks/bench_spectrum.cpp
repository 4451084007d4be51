#include <benchmark/benchmark.h>

#include <random>

#include "heosc/coupling.hpp"
#include "heosc/jacobi.hpp"
#include "heosc/spectrum.hpp"

namespace {

std::vector<heosc::AngularConfig> sample_configs(size_t count) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> cos_dist(-0.99999, 0.99999);
  std::uniform_real_distribution<double> tan_dist(1.00001, 10.0);
  std::vector<heosc::AngularConfig> configs;
  configs.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    configs.push_back(heosc::make_config(cos_dist(rng), tan_dist(rng)));
  }
  return configs;
}

void BM_AnalyticSpectrum(benchmark::State& state) {
  const auto configs = sample_configs(1024);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        heosc::analytic_spectrum(configs[i++ & 1023]));
  }
}
BENCHMARK(BM_AnalyticSpectrum);

void BM_CubicSolve(benchmark::State& state) {
  const auto configs = sample_configs(1024);
  std::vector<std::array<double, 4>> coeffs;
  coeffs.reserve(configs.size());
  for (const auto& c : configs) coeffs.push_back(heosc::cubic_coefficients(c));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(heosc::solve_cubic(coeffs[i++ & 1023]));
  }
}
BENCHMARK(BM_CubicSolve);

void BM_JacobiEigen(benchmark::State& state) {
  const auto configs = sample_configs(1024);
  std::vector<heosc::Mat4> mats;
  mats.reserve(configs.size());
  for (const auto& c : configs) {
    mats.push_back(heosc::build_coupling(c).c2_matrix);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(heosc::symmetric_eigen_4x4(mats[i++ & 1023]));
  }
}
BENCHMARK(BM_JacobiEigen);

}  // namespace
