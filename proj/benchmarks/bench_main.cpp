#include <benchmark/benchmark.h>

#include "swarmforage/experiment.hpp"
#include "swarmforage/world.hpp"

using namespace swarmforage;

namespace {

void BM_AdaptationRound(benchmark::State& state) {
    const AdaptationWeights weights;
    Battery battery = make_battery(0.3, 0.5);
    RoundOutcome outcome{false, 3, 0.45, 400, 120};
    for (auto _ : state) {
        battery.lower = update_lower_threshold(battery, outcome, weights);
        battery.capacity = update_capacity(battery, outcome, weights);
        reallocate_thresholds(battery);
        benchmark::DoNotOptimize(battery);
        outcome.success = !outcome.success;
        battery.lower = 0.3;
        battery.capacity = 0.5;
    }
}
BENCHMARK(BM_AdaptationRound);

void BM_WorldStep(benchmark::State& state) {
    SimConfig config;
    config.tick_limit = 1L << 40; // never stops during the benchmark
    World world(config, StrategyId::AdaptiveNull, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        if (world.terminated()) state.SkipWithError("world terminated mid-benchmark");
        world.step();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WorldStep)->Arg(8)->Arg(32)->Arg(128);

void BM_SingleRun(benchmark::State& state) {
    SimConfig config;
    config.arena.width = 5.0;
    config.arena.height = 5.0;
    config.arena.sensing_radius = 0.3;
    config.resources.density = 6;
    config.resources.respawn_until = 10;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const RunRecord record =
            run_single(config, StrategyId::AdaptiveNull, 8, seed++);
        benchmark::DoNotOptimize(record);
    }
}
BENCHMARK(BM_SingleRun);

} // namespace

BENCHMARK_MAIN();
