#include <cmath>
#include <map>
#include <sstream>

#include <doctest.h>

#include "support/scenarios.hpp"
#include "swarmforage/errors.hpp"
#include "swarmforage/metrics.hpp"
#include "swarmforage/world.hpp"

using namespace swarmforage;
using swarmforage::testsupport::Corridor;

namespace {

constexpr double kTol = 1e-9;

RunRecord record_with(long r, long ticks, std::vector<double> depleted,
                      std::vector<double> residual) {
    RunRecord record;
    record.strategy = "naive";
    record.swarm_size = static_cast<int>(depleted.size());
    record.resources_collected = r;
    record.total_ticks = ticks;
    record.depleted = std::move(depleted);
    record.residual = std::move(residual);
    record.termination_reason = "all_collected";
    return record;
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("eta: resources per tick") {
    CHECK(eta(record_with(125, 50000, {1.0}, {0.5})) == doctest::Approx(0.0025).epsilon(kTol));
    CHECK(eta(record_with(0, 100, {1.0}, {0.5})) == doctest::Approx(0.0).epsilon(kTol));
    CHECK(eta(record_with(10, 10, {1.0}, {0.5})) == doctest::Approx(1.0).epsilon(kTol));
    CHECK_THROWS_AS(eta(record_with(5, 0, {1.0}, {0.5})), MetricError);
}

TEST_CASE("eta': resources per total energy footprint") {
    CHECK(eta_prime(record_with(10, 100, {4.0, 5.0}, {0.5, 0.5})) ==
          doctest::Approx(1.0).epsilon(kTol));
    CHECK(eta_prime(record_with(0, 100, {1.0}, {0.0})) == doctest::Approx(0.0).epsilon(kTol));
    CHECK_THROWS_AS(eta_prime(record_with(10, 100, {0.0}, {0.0})), MetricError);
}

TEST_CASE("eta' strictly decreases when residual charge grows, r fixed") {
    const RunRecord base = record_with(10, 100, {4.0, 5.0}, {0.5, 0.5});
    RunRecord fatter = base;
    fatter.residual[1] = 0.9;
    CHECK(eta_prime(fatter) < eta_prime(base));
}

TEST_CASE("idle fully-charged robots drag eta' below a lean run") {
    // Same income and drains; one swarm parks everyone at full charge.
    const RunRecord lean = record_with(20, 500, {3.0, 3.0, 3.0}, {0.2, 0.1, 0.2});
    const RunRecord idle = record_with(20, 500, {3.0, 3.0, 3.0}, {1.0, 1.0, 1.0});
    CHECK(eta_prime(idle) < eta_prime(lean));
}

TEST_CASE("aggregate: textbook mean and sample deviation") {
    std::vector<RunRecord> records;
    for (int i = 0; i < 20; ++i) {
        records.push_back(record_with(10, 100, {4.0, 5.0}, {0.5, 0.5}));
    }
    auto summaries = aggregate(records);
    REQUIRE(summaries.size() == 1);
    CHECK(summaries[0].count == 20);
    CHECK(summaries[0].std_eta_prime == doctest::Approx(0.0).epsilon(kTol));

    records.clear();
    records.push_back(record_with(10, 100, {9.0}, {1.0}));  // eta' = 1.0
    records.push_back(record_with(30, 100, {9.0}, {1.0}));  // eta' = 3.0
    summaries = aggregate(records);
    REQUIRE(summaries.size() == 1);
    CHECK(summaries[0].mean_eta_prime == doctest::Approx(2.0).epsilon(kTol));
    CHECK(summaries[0].std_eta_prime == doctest::Approx(std::sqrt(2.0)).epsilon(kTol));

    CHECK_THROWS_AS(aggregate({}), MetricError);
}

TEST_CASE("aggregate groups by strategy and swarm size exactly") {
    std::vector<RunRecord> records;
    auto make = [&](const char* strategy, int k, long r) {
        RunRecord record = record_with(r, 100, {1.0}, {0.5});
        record.strategy = strategy;
        record.swarm_size = k;
        records.push_back(record);
    };
    make("naive", 2, 10);
    make("naive", 4, 20);
    make("adaptive-null", 2, 30);
    make("naive", 2, 50);

    const auto summaries = aggregate(records);
    REQUIRE(summaries.size() == 3);
    // Sorted by (strategy, K).
    CHECK(summaries[0].strategy == "adaptive-null");
    CHECK(summaries[0].swarm_size == 2);
    CHECK(summaries[0].count == 1);
    CHECK(summaries[1].strategy == "naive");
    CHECK(summaries[1].swarm_size == 2);
    CHECK(summaries[1].count == 2);
    CHECK(summaries[2].swarm_size == 4);
}

TEST_CASE("run CSV schema is pinned") {
    std::ostringstream out;
    write_run_csv_header(out);
    CHECK(out.str() == "strategy,K,seed,r,ticks,sum_Ed,sum_Eb,eta,eta_prime,termination_reason\n");

    RunRecord record = record_with(10, 100, {4.0, 5.0}, {0.5, 0.5});
    record.seed = 42;
    std::ostringstream row;
    write_run_csv_row(row, record);
    CHECK(row.str() == "naive,2,42,10,100,9,1,0.1,1,all_collected\n");
}

TEST_CASE("depleted energy equals the telescoped event-log drains") {
    Corridor corridor;
    corridor.config.resources.respawn_until = 2; // a couple of rounds
    EventLog log;
    World world(corridor.config, StrategyId::Naive, 1, 21, &log);
    world.robot_mutable(0).position = corridor.start;
    world.robot_mutable(0).heading = 0.0;
    world.resources_mutable().set_position(0, corridor.resource);
    world.resources_mutable().set_position(1, {2.875, 5.0}); // west corridor leg

    for (int t = 0; t < 5000 && !world.terminated(); ++t) world.step();

    std::map<int, double> from_log;
    for (const Event& event : log.events()) {
        if (event.kind == EventKind::Drain || event.kind == EventKind::Collect) {
            from_log[event.robot] += std::stod(event.payload);
        }
    }
    REQUIRE(from_log.count(0) == 1);
    CHECK(from_log[0] ==
          doctest::Approx(world.robots()[0].depleted_total).epsilon(kTol));
    CHECK(world.robots()[0].depleted_total > 0.0);
}

} // TEST_SUITE
