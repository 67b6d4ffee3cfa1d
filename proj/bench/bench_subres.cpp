// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "msres/check.hpp"
#include "msres/index.hpp"
#include "msres/parallel.hpp"

namespace {

using namespace msres;

PolyTuple<Rational> bench_tuple(unsigned d0, std::size_t t) {
  std::mt19937_64 rng(12345);
  std::vector<UPoly<Rational>> polys{random_rooted_poly(rng, d0, 20)};
  for (std::size_t i = 0; i < t; ++i) polys.push_back(random_poly(rng, d0 - 1, 20));
  return PolyTuple<Rational>(std::move(polys));
}

template <bool Parallel>
void BM_table(benchmark::State& state) {
  const auto F = bench_tuple(static_cast<unsigned>(state.range(0)), 2);
  const auto deltas = enumerate_deltas(2, static_cast<unsigned>(state.range(0)));
  const auto method = static_cast<Method>(state.range(1));
  for (auto _ : state) {
    auto out = Parallel ? subresultant_table(F, std::span<const DeltaIndex>(deltas), method)
                        : subresultant_table_serial(F, std::span<const DeltaIndex>(deltas), method);
    benchmark::DoNotOptimize(out);
  }
  state.counters["deltas"] = static_cast<double>(deltas.size());
}

template <bool Parallel>
void BM_check(benchmark::State& state) {
  CheckOptions opts;
  opts.seed = 3;
  opts.cases = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = Parallel ? run_check(opts) : run_check_serial(opts);
    benchmark::DoNotOptimize(report);
  }
}

void table_args(benchmark::internal::Benchmark* b) {
  for (int d0 : {4, 6, 8})
    for (auto m : {Method::sylvester, Method::barnett, Method::bezout})
      b->Args({d0, static_cast<int>(m)});
}

}  // namespace

BENCHMARK(BM_table<false>)->Name("table/serial")->Apply(table_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table<true>)->Name("table/openmp")->Apply(table_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check<false>)->Name("check/serial")->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check<true>)->Name("check/openmp")->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
