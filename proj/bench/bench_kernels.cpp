// Serial reference vs OpenMP transform kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "dtheta/bracket.hpp"
#include "dtheta/harmonics.hpp"

namespace {

dtheta::SpectralFunction random_function(int L) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  dtheta::SpectralFunction f(L);
  for (double& c : f.coeffs()) c = u(rng);
  return f;
}

template <dtheta::Exec E>
void BM_Synthesize(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const dtheta::SphericalTransform tr(L, dtheta::Grid::dealiased(L), E);
  const auto f = random_function(L);
  for (auto _ : state) benchmark::DoNotOptimize(tr.synthesize(f));
}

template <dtheta::Exec E>
void BM_Analyze(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const dtheta::SphericalTransform tr(L, dtheta::Grid::dealiased(L), E);
  const auto g = tr.synthesize(random_function(L));
  for (auto _ : state) benchmark::DoNotOptimize(tr.analyze(g));
}

template <dtheta::Exec E>
void BM_Bracket(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const dtheta::Model model;
  const dtheta::BracketOperator op(model, L, L, E);
  const auto f = random_function(L), h = random_function(L);
  for (auto _ : state) benchmark::DoNotOptimize(op(f, h));
}

template <dtheta::Exec E>
void BM_StructureConstants(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const dtheta::Model model;
  for (auto _ : state) benchmark::DoNotOptimize(dtheta::structure_constants(model, L, E));
}

}  // namespace

BENCHMARK(BM_Synthesize<dtheta::Exec::serial>)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Synthesize<dtheta::Exec::parallel>)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Analyze<dtheta::Exec::serial>)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Analyze<dtheta::Exec::parallel>)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK(BM_Bracket<dtheta::Exec::serial>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_Bracket<dtheta::Exec::parallel>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_StructureConstants<dtheta::Exec::serial>)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureConstants<dtheta::Exec::parallel>)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
