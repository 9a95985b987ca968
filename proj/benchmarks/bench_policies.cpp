#include <benchmark/benchmark.h>

#include <vector>

#include "gridpatrol/env.hpp"
#include "gridpatrol/feasibility.hpp"
#include "gridpatrol/grid.hpp"
#include "gridpatrol/policy.hpp"
#include "gridpatrol/simulate.hpp"

using namespace gridpatrol;

static void BM_make_move_all(benchmark::State& state) {
    GridDims dims = {4, 4, 4, 4};
    std::vector<SenseData> senses;
    for (long long i = 0; i < vertex_count(dims); ++i) {
        senses.push_back(boundary_distances(dims, position_at(dims, i), 1));
    }
    std::size_t at = 0;
    MemVal mem = 0;
    for (auto _ : state) {
        Move mv = make_move_all(senses[at], mem);
        benchmark::DoNotOptimize(mv);
        mem = mv.mem;
        if (++at == senses.size()) at = 0;
    }
}
BENCHMARK(BM_make_move_all);

static void BM_verify_one_bit_4x4x4(benchmark::State& state) {
    GridDims dims = {4, 4, 4};
    for (auto _ : state) {
        VerifyReport rep = verify_patrols(dims, policy_make_move(), {}, 128);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_verify_one_bit_4x4x4);

static void BM_sensing_regions_9x9x9(benchmark::State& state) {
    for (auto _ : state) {
        RegionGraph rg = sensing_regions({9, 9, 9}, 3);
        benchmark::DoNotOptimize(rg);
    }
}
BENCHMARK(BM_sensing_regions_9x9x9);

static void BM_zero_bit_search_5x5(benchmark::State& state) {
    for (auto _ : state) {
        auto found = zero_bit_policy_search({5, 5}, 1);
        benchmark::DoNotOptimize(found);
    }
}
BENCHMARK(BM_zero_bit_search_5x5);

static void BM_dirseq_step_lshape(benchmark::State& state) {
    Environment env = env_l_shape(4, 2, 2, 4);
    EnvPolicy pol = dirseq_patroller(env).policy();
    EnvSense sense = env_sense(env, {2, 2}, 1);
    MemVal mem = 0;
    for (auto _ : state) {
        Move mv = pol.eval(sense, mem);
        benchmark::DoNotOptimize(mv);
        mem = mv.mem;
    }
}
BENCHMARK(BM_dirseq_step_lshape);

BENCHMARK_MAIN();
