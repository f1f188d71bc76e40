#include <nck/mathieu.hpp>
#include <nck/nonrel.hpp>
#include <nck/relativistic.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_CharValue(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nck::mathieu::char_value({2, nck::Branch::cosine, p}));
}
BENCHMARK(BM_CharValue)->Arg(1)->Arg(40)->Arg(400)->Arg(4000);

void BM_SolveWithCoefficients(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(nck::mathieu::solve({2, nck::Branch::sine, 40.0}));
}
BENCHMARK(BM_SolveWithCoefficients);

void BM_Energy(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(nck::nonrel::energy({3, 1, nck::Branch::cosine}, {1.0, 0.5, 1.0}));
}
BENCHMARK(BM_Energy);

void BM_CriticalDtheta(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        nck::nonrel::critical_dtheta(m, nck::Branch::cosine, 0.3, nck::DipoleCoupling::doubled));
}
BENCHMARK(BM_CriticalDtheta)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SpinEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nck::rel::spin_energy({n, 1, nck::Branch::cosine}, {1.0, 0.3, 1.5}));
}
BENCHMARK(BM_SpinEnergy)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_PseudospinScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(nck::rel::pseudospin_energy({1, 1, nck::Branch::cosine}, {1.0, 150.0, 0.0}));
}
BENCHMARK(BM_PseudospinScan)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
