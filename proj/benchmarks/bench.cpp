#include <benchmark/benchmark.h>

#include "wallosc/oracle.hpp"
#include "wallosc/specfun.hpp"
#include "wallosc/spectrum.hpp"
#include "wallosc/variational.hpp"

namespace {

namespace sf = wallosc::specfun;
namespace sp = wallosc::spectrum;
namespace var = wallosc::variational;
namespace oc = wallosc::oracle;

void BM_WeberD(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sf::weber_d(0.73, 1.9));
}
BENCHMARK(BM_WeberD);

void BM_Characteristic(benchmark::State& state) {
  const sp::WellConfig cfg{1.55};
  for (auto _ : state)
    benchmark::DoNotOptimize(sp::characteristic(0.069, cfg));
}
BENCHMARK(BM_Characteristic);

void BM_GroundState(benchmark::State& state) {
  const sp::WellConfig cfg{1.55};
  for (auto _ : state)
    benchmark::DoNotOptimize(sp::eigenvalue(0, cfg).epsilon);
}
BENCHMARK(BM_GroundState);

void BM_FourLevels(benchmark::State& state) {
  const sp::WellConfig cfg{1.55};
  for (auto _ : state)
    benchmark::DoNotOptimize(sp::eigenvalues(3, cfg).back().epsilon);
}
BENCHMARK(BM_FourLevels);

void BM_Eigenfunction(benchmark::State& state) {
  const sp::WellConfig cfg{1.55};
  const auto sol = sp::eigenvalue(0, cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(sp::eigenfunction(sol, cfg, 0.5));
}
BENCHMARK(BM_Eigenfunction);

void BM_RitzEight(benchmark::State& state) {
  const var::RitzProblem problem{8, 1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(var::ritz_values(problem).values.front());
}
BENCHMARK(BM_RitzEight);

void BM_FdRichardson(benchmark::State& state) {
  const sp::WellConfig cfg{1.55};
  for (auto _ : state)
    benchmark::DoNotOptimize(oc::fd_eigenvalues_richardson(cfg, 0).front());
}
BENCHMARK(BM_FdRichardson);

} // namespace

BENCHMARK_MAIN();
