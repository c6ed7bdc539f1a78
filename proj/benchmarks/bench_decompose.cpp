#include <benchmark/benchmark.h>

#include "polydec/decomposer.hpp"
#include "polydec/instancegen.hpp"
#include "polydec/oracles.hpp"
#include "polydec/polyspace.hpp"

namespace {

using namespace polydec;

Instance make_instance(int n, bool homogeneous, std::uint64_t seed) {
  GenSpec spec;
  spec.ctx = FieldCtx::gf(65537);
  spec.n = n;
  spec.homogeneous = homogeneous;
  spec.seed = seed;
  return gen_decomposable(spec);
}

void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = make_instance(n, false, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(inst.g, inst.h));
  }
}
BENCHMARK(BM_Compose)->Arg(5)->Arg(8)->Arg(10);

void BM_BuildVtilde(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = make_instance(n, false, 12);
  PolySystem F = homogenize(inst.f, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_vtilde(F));
  }
}
BENCHMARK(BM_BuildVtilde)->Arg(5)->Arg(8)->Arg(10);

void BM_QuotientByLinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = make_instance(n, false, 13);
  PolySystem F = homogenize(inst.f, 4);
  PolySpace vt = build_vtilde(F);
  SeededRng rng(99);
  PolyAccum acc(F.ctx(), n + 1);
  for (int i = 0; i <= n; ++i)
    acc.add(Monomial(n + 1).times_var(i), F.ctx().sample_uniform(rng));
  MultiPoly l = acc.take();
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_by_linear(vt, l));
  }
}
BENCHMARK(BM_QuotientByLinear)->Arg(5)->Arg(8)->Arg(10);

void BM_Fdpmp4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = make_instance(n, false, 14);
  for (auto _ : state) {
    DecompOutcome out = fdpmp4(inst.f, 14);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_Fdpmp4)->Arg(5)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DecomposeHomogeneous(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = make_instance(n, true, 15);
  for (auto _ : state) {
    DecompOutcome out = decompose_homogeneous(inst.f, 15);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_DecomposeHomogeneous)
    ->Arg(5)
    ->Arg(6)
    ->Arg(8)
    ->Arg(10)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
