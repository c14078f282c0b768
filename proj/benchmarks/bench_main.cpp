#include <benchmark/benchmark.h>

#include "lhl/inversion.hpp"
#include "lhl/order_polytope.hpp"
#include "lhl/poset.hpp"
#include "lhl/roots.hpp"
#include "lhl/simplex.hpp"
#include "lhl/triangulation.hpp"

namespace {

using namespace lhl;

SSequence staircase(std::int64_t n) {
  std::vector<std::int64_t> s;
  for (std::int64_t i = 2; i <= n + 1; ++i) s.push_back(i);
  return SSequence(std::move(s));
}

void BM_DerangementRecursive(benchmark::State& state) {
  const SSequence s = staircase(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_derangement_recursive(s));
}
BENCHMARK(BM_DerangementRecursive)->DenseRange(4, 10, 2);

void BM_DerangementEnumerated(benchmark::State& state) {
  const SSequence s = staircase(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_derangement_enum(s));
}
BENCHMARK(BM_DerangementEnumerated)->DenseRange(4, 8, 2);

void BM_LocalHstarNormalForm(benchmark::State& state) {
  const LatticeSimplex t = lecture_hall_simplex(staircase(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(local_hstar(t));
}
BENCHMARK(BM_LocalHstarNormalForm)->DenseRange(3, 7, 1);

void BM_HalfOpenBoundingBox(benchmark::State& state) {
  const LatticeSimplex t = lecture_hall_simplex(staircase(state.range(0)));
  EnumerationOptions options;
  options.method = EnumerationMethod::BoundingBox;
  for (auto _ : state) benchmark::DoNotOptimize(half_open_points(t, options));
}
BENCHMARK(BM_HalfOpenBoundingBox)->DenseRange(2, 4, 1);

void BM_SturmRealRooted(benchmark::State& state) {
  const IntPolynomial d = s_derangement_recursive(staircase(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_real_rooted(d));
}
BENCHMARK(BM_SturmRealRooted)->DenseRange(6, 14, 4);

void BM_EhrhartVersusBetkeMcMullen(benchmark::State& state) {
  const bool bm = state.range(0) == 1;
  const OrderPolytope o(Poset(4, {{1, 3}, {2, 3}, {2, 4}}), SSequence({2, 3, 2, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(bm ? betke_mcmullen_hstar(o) : ehrhart_hstar(o));
  state.SetLabel(bm ? "betke-mcmullen" : "ehrhart");
}
BENCHMARK(BM_EhrhartVersusBetkeMcMullen)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
