#include <benchmark/benchmark.h>

#include "extsq/exterior.hpp"
#include "extsq/pluecker.hpp"
#include "extsq/random.hpp"
#include "extsq/rdu.hpp"

using namespace extsq;

namespace {

InvPair sample(int n, const Ring& ring) {
  Rng rng(static_cast<std::uint64_t>(n));
  return exterior_pair(random_gl(rng, n, 3 * n, ring));
}

void BM_MatMulZmod(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InvPair g = sample(n, Ring::zmod(97));
  for (auto _ : state) benchmark::DoNotOptimize(g.fwd() * g.bwd());
}
BENCHMARK(BM_MatMulZmod)->DenseRange(4, 8, 2);

void BM_MatMulInteger(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InvPair g = sample(n, Ring::integers());
  for (auto _ : state) benchmark::DoNotOptimize(g.fwd() * g.bwd());
}
BENCHMARK(BM_MatMulInteger)->DenseRange(4, 8, 2);

void BM_CauchyBinet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Matrix x = random_gl(rng, n, 3 * n, Ring::zmod(97)).fwd();
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_binet(x));
}
BENCHMARK(BM_CauchyBinet)->DenseRange(4, 8, 2);

void BM_IsMember(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InvPair g = sample(n, Ring::zmod(97));
  for (auto _ : state) benchmark::DoNotOptimize(is_member(g.fwd()));
}
BENCHMARK(BM_IsMember)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_DecomposeEntryH1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InvPair g = sample(n, Ring::zmod(97));
  const GeneratorTarget t{TargetKind::entry, {1, 3}, {2, 3}, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g, t));
}
BENCHMARK(BM_DecomposeEntryH1)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_DecomposeDiagH0(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InvPair g = sample(n, Ring::zmod(97));
  const GeneratorTarget t{TargetKind::diagdiff, {1, 2}, {3, 4}, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g, t));
}
BENCHMARK(BM_DecomposeDiagH0)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_DecomposeLevel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InvPair g = sample(n, Ring::zmod(97));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_level(g, 2, 3));
}
BENCHMARK(BM_DecomposeLevel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
