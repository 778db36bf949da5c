// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "catenoid/app/sweep.hpp"
#include "catenoid/parallel.hpp"
#include "catenoid/potentials.hpp"
#include "catenoid/scattering.hpp"

using namespace catenoid;

namespace {

SweepTask transmission_task(int workers) {
  SweepTask task;
  task.quantity = SweepQuantity::Transmission;
  task.m_values = {0, 1, 2};
  task.parameters = GridSpec{0.01, 1.0, 16, true}.values();
  task.workers = workers;
  return task;
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepTask task = transmission_task(1);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(task).table.str());
}

void BM_SweepOmp(benchmark::State& state) {
  const SweepTask task = transmission_task(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(task).table.str());
}

std::vector<double> zeta_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = -12.0 + 24.0 * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

void BM_CurveSerial(benchmark::State& state) {
  const auto grid = zeta_grid(static_cast<std::size_t>(state.range(0)));
  const ChannelSpec ch{1, 0.1};
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel::map_serial(grid, [&](double z) { return v_zeta(ch, z); }));
}

void BM_CurveOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_potential(Chart::ZPhi, {1, 0.1}, -12.0, 12.0, n).values);
}

void BM_Transmission(benchmark::State& state) {
  const double eps = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transmission(0, eps).transmission());
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOmp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveSerial)->Arg(4001)->Arg(400001);
BENCHMARK(BM_CurveOmp)->Arg(4001)->Arg(400001);
BENCHMARK(BM_Transmission)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
