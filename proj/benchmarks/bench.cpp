#include <benchmark/benchmark.h>

#include "multiseg/criteria.hpp"
#include "multiseg/involution.hpp"
#include "multiseg/order.hpp"
#include "multiseg/speh.hpp"

using namespace multiseg;

static void BM_MwaRectangle(benchmark::State& state) {
    Multisegment a = a_nd(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mwa_left(a));
}
BENCHMARK(BM_MwaRectangle)->Arg(4)->Arg(8)->Arg(16);

static void BM_MwaStaircaseSum(benchmark::State& state) {
    Multisegment a = speh_multisegment(SpehParams(0, 3, 4, 7)) +
                     speh_multisegment(SpehParams(1, 4, 5, 8));
    for (auto _ : state) benchmark::DoNotOptimize(mwa_left(a));
}
BENCHMARK(BM_MwaStaircaseSum);

static void BM_StrictDownset(benchmark::State& state) {
    Multisegment b = a_nd(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(strict_downset(b));
}
BENCHMARK(BM_StrictDownset)->Arg(2)->Arg(3)->Arg(4);

static void BM_Thm72Sweep(benchmark::State& state) {
    std::vector<SpehParams> grid;
    for (int A = 0; A <= 7; ++A)
        for (int D = A; D <= 7; ++D)
            for (int B = A; B <= D; ++B) grid.emplace_back(A, B, D + A - B, D);
    for (auto _ : state) {
        int reducible = 0;
        for (const auto& p : grid)
            for (const auto& q : grid)
                reducible += speh_reducible_thm72(p, q).status == Status::Reducible;
        benchmark::DoNotOptimize(reducible);
    }
}
BENCHMARK(BM_Thm72Sweep);

static void BM_RcCheck(benchmark::State& state) {
    Multisegment a = speh_multisegment(SpehParams(0, 3, 4, 7));
    Multisegment b = speh_multisegment(SpehParams(1, 4, 5, 8));
    for (auto _ : state) benchmark::DoNotOptimize(rc_check(a, b));
}
BENCHMARK(BM_RcCheck);

BENCHMARK_MAIN();
