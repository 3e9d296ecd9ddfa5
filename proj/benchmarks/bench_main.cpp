#include <benchmark/benchmark.h>

#include <random>

#include "wlp/algebra.hpp"
#include "wlp/indpoly.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/rank.hpp"

namespace {

void BM_IndependencePolynomialLollipop(benchmark::State& state) {
  const wlp::Graph g = wlp::lollipop(8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wlp::independence_polynomial(g));
}
BENCHMARK(BM_IndependencePolynomialLollipop)->Arg(10)->Arg(20);

void BM_BasisFromGraph(benchmark::State& state) {
  const wlp::Graph g = wlp::path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wlp::from_graph(g));
}
BENCHMARK(BM_BasisFromGraph)->Arg(12)->Arg(20);

wlp::IntMatrix random_dense(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> value(-9, 9);
  std::vector<std::vector<long>> rows(dim, std::vector<long>(dim));
  for (auto& row : rows) {
    for (auto& x : row) x = value(rng);
  }
  return wlp::IntMatrix::from_dense(rows);
}

void BM_BareissRank(benchmark::State& state) {
  const wlp::IntMatrix m = random_dense(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(wlp::bareiss_rank(m));
}
BENCHMARK(BM_BareissRank)->Arg(20)->Arg(60);

void BM_ModularRank(benchmark::State& state) {
  const wlp::IntMatrix m = random_dense(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(wlp::modular_rank(m));
}
BENCHMARK(BM_ModularRank)->Arg(20)->Arg(60);

void BM_ExactRankMultiplicationMap(benchmark::State& state) {
  const wlp::MonomialAlgebra a = wlp::from_graph(wlp::path(18));
  const wlp::GradedMap map = wlp::multiplication_map(a, wlp::LinearForm::all_ones(18), 5);
  for (auto _ : state) benchmark::DoNotOptimize(wlp::exact_rank(map.matrix()));
}
BENCHMARK(BM_ExactRankMultiplicationMap);

void BM_WlpReportLollipop(benchmark::State& state) {
  const wlp::MonomialAlgebra a =
      wlp::from_graph(wlp::lollipop(static_cast<std::size_t>(state.range(0)),
                                    static_cast<std::size_t>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(wlp::wlp_report(a));
}
BENCHMARK(BM_WlpReportLollipop)->Args({3, 9})->Args({4, 14})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
