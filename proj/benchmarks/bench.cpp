#include "fgord/verify.hpp"

#include <benchmark/benchmark.h>

using namespace fgord;

namespace {

const Rank k2(2);

void BM_Tau(benchmark::State& state) {
    OrientedWord u = parse_oriented("abBA", k2);
    Word g = parse_word("BAbAbaBAba", k2);
    for (auto _ : state) benchmark::DoNotOptimize(tau(u, g));
}
BENCHMARK(BM_Tau);

void BM_EnumerateBall(benchmark::State& state) {
    int radius = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(k2, radius));
}
BENCHMARK(BM_EnumerateBall)->Arg(3)->Arg(5)->Arg(7);

void BM_SortBall(benchmark::State& state) {
    OrientedWord u = parse_oriented("abBA", k2);
    auto ball = enumerate_ball(k2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sort_words(u, ball));
}
BENCHMARK(BM_SortBall)->Arg(3)->Arg(4);

void BM_CheckDefect(benchmark::State& state) {
    OrientedWord u = parse_oriented("abBA", k2);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_defect(u, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CheckDefect)->Arg(2)->Arg(3);

void BM_DistinctWitness(benchmark::State& state) {
    OrientedWord u = parse_oriented("abBA", k2);
    OrientedWord u2 = parse_oriented("abAB", k2);
    for (auto _ : state) benchmark::DoNotOptimize(distinct_witness(u, u2, 4));
}
BENCHMARK(BM_DistinctWitness);

} // namespace

BENCHMARK_MAIN();
