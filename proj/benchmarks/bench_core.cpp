// Microbenchmarks for the enumeration core. The census loops dominate every
// command's runtime, so regressions here are what would blow the command
// budgets.

#include <benchmark/benchmark.h>

#include "gsdet/counting.hpp"
#include "gsdet/determinant.hpp"
#include "gsdet/enumerate.hpp"
#include "gsdet/multinomial.hpp"
#include "gsdet/ntable.hpp"
#include "gsdet/partition.hpp"
#include "gsdet/series.hpp"

using namespace gsdet;

namespace {

void BM_PartitionEnumeration(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        // bypass the cache: enumerate into a fresh vector each iteration
        std::vector<Partition> out;
        for (const Partition& p : partitions_of(n)) out.push_back(p);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_PartitionEnumeration)->Arg(20)->Arg(30);

void BM_HookLengthDimension(benchmark::State& state) {
    const auto& all = partitions_of(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        BigInt sum = 0;
        for (const Partition& p : all) sum += dim_sym(p);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_HookLengthDimension)->Arg(15)->Arg(25);

void BM_DetCensusComposition(benchmark::State& state) {
    const Composition a({3, 2, 2, 1, 0});
    for (auto _ : state) {
        DetAccumulator acc(5);
        accumulate_dets(a, 5, acc);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_DetCensusComposition);

void BM_AggregateCensus(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const unsigned r = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        const NTable t = n_table_aggregate({n, r}, EnumerationOptions{1, 50'000'000});
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_AggregateCensus)->Args({8, 3})->Args({8, 5})->Args({10, 7});

void BM_SingleDeterminant(benchmark::State& state) {
    const Multipartition lambda(
        {Partition({3, 1}), Partition({2, 2}), Partition({2}), Partition({1})});
    const WreathParams params{lambda.n(), lambda.r()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_irrep(lambda, params));
    }
}
BENCHMARK(BM_SingleDeterminant);

void BM_LucasResidue(benchmark::State& state) {
    const std::vector<long long> bottom{17, 13, 12, 9, 9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(multinomial_mod_p_lucas(60, bottom, 7));
    }
}
BENCHMARK(BM_LucasResidue);

void BM_SeriesPow(benchmark::State& state) {
    const CoefficientSeries p = partition_series(12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.pow(84)[7]);
    }
}
BENCHMARK(BM_SeriesPow);

} // namespace
