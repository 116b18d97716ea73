#include <benchmark/benchmark.h>

#include "ybs/convolution.hpp"
#include "ybs/gkmschubert.hpp"
#include "ybs/linalg.hpp"
#include "ybs/random.hpp"
#include "ybs/ybops.hpp"

using namespace ybs;

static void BM_PolyMul(benchmark::State& st) {
  const int N = 6;
  Rng rng(1);
  const auto vs = VarSet::standard(N);
  const MultiPoly p = random_poly(vs, N, int(st.range(0)), 4 * int(st.range(0)), rng);
  const MultiPoly q = random_poly(vs, N, int(st.range(0)), 4 * int(st.range(0)), rng);
  for (auto _ : st) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMul)->DenseRange(2, 8, 2);

static void BM_MonodromyCompose(benchmark::State& st) {
  const VertexModel m = VertexModel::osc();
  for (auto _ : st) benchmark::DoNotOptimize(monodromy(m, int(st.range(0))));
}
BENCHMARK(BM_MonodromyCompose)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_MonodromyLattice(benchmark::State& st) {
  const VertexModel m = VertexModel::vic();
  for (auto _ : st) benchmark::DoNotOptimize(monodromy_by_lattice(m, int(st.range(0))));
}
BENCHMARK(BM_MonodromyLattice)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_BetheVector(benchmark::State& st) {
  const int N = int(st.range(0));
  std::vector<int> idx;
  for (int i = 1; i <= N / 2; ++i) idx.push_back(i);
  for (auto _ : st) benchmark::DoNotOptimize(bethe_vector_ordered(N, idx));
}
BENCHMARK(BM_BetheVector)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_SchubertTwistedDemazure(benchmark::State& st) {
  const int N = int(st.range(0));
  const Permutation w = Permutation::longest(N);
  const auto words = words_of_weight(N, N / 2);
  for (auto _ : st)
    for (const auto& l : words) benchmark::DoNotOptimize(schubert_class_twisted_demazure(w, l));
}
BENCHMARK(BM_SchubertTwistedDemazure)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_BetheMatrixInverse(benchmark::State& st) {
  const int N = int(st.range(0));
  const FracMatrix a = bethe_matrix(N, N / 2);
  for (auto _ : st) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_BetheMatrixInverse)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_PushforwardBn(benchmark::State& st) {
  const int N = int(st.range(0));
  for (auto _ : st)
    for (int n = 0; n < N; ++n) benchmark::DoNotOptimize(bn_cn_ab(N, n));
}
BENCHMARK(BM_PushforwardBn)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_SixteenRelations(benchmark::State& st) {
  const VertexModel m = VertexModel::osc();
  for (auto _ : st) benchmark::DoNotOptimize(check_sixteen(m, int(st.range(0))));
}
BENCHMARK(BM_SixteenRelations)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
