#include <benchmark/benchmark.h>

#include <tropic/tropic.hpp>

namespace {

using namespace tropic;
using Q = MaxPlusRational;
using R = MaxPlusFloat;

template <class F>
void BM_DistanceToSpan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [A, d] = random_instance<F>(17, n, n, 0.8, -50, 50);
  for (auto _ : state) benchmark::DoNotOptimize(distance_to_span(A, d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_TEMPLATE(BM_DistanceToSpan, Q)->RangeMultiplier(2)->Range(4, 128)->Complexity();
BENCHMARK_TEMPLATE(BM_DistanceToSpan, R)->RangeMultiplier(2)->Range(4, 256)->Complexity();

void BM_GeneralSolution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [A, unused] = random_instance<Q>(23, 4, n, 0.5, -3, 3);
  std::vector<Q::scalar_type> x(n, Q().one());
  auto d = mat_vec(A, Vector<Q>(Q(), x));
  for (auto _ : state) benchmark::DoNotOptimize(general_solution(A, d));
}
BENCHMARK(BM_GeneralSolution)->DenseRange(4, 16, 4);

void BM_ReduceToIndependent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [A, d] = random_instance<Q>(29, 6, n, 0.7, -3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_independent(A));
}
BENCHMARK(BM_ReduceToIndependent)->RangeMultiplier(2)->Range(4, 32);

void BM_GridOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [A, d] = random_instance<Q>(31, 4, n, 0.75, -5, 5);
  GridSpec<Rational> g{Rational(-15), Rational(15), ratio(1, 2), n};
  g.prune = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(grid_min_distance(A, d, g));
}
BENCHMARK(BM_GridOracle)->Args({2, 0})->Args({2, 1})->Args({3, 1})->Args({4, 1});

}  // namespace
BENCHMARK_MAIN();
