#include <cmath>

#include <doctest.h>

#include "swarmforage/errors.hpp"
#include "swarmforage/robot.hpp"

using namespace swarmforage;

namespace {

constexpr double kTol = 1e-9;

Robot searching_robot(double level, double lower, double capacity) {
    Robot robot;
    robot.state = RobotState::Searching;
    robot.battery = make_battery(lower, capacity);
    robot.battery.level = level;
    return robot;
}

struct Fixture {
    FsmParams params{};
    StrategyConfig cfg{};
    std::unique_ptr<EnergyPolicy> policy = make_policy(StrategyId::Naive, cfg);
    Rng rng{99};

    TickEffect run(Robot& robot, const SensorReport& sensed) {
        return tick(robot, sensed, params, *policy, rng);
    }
};

} // namespace

TEST_SUITE("robot") {

TEST_CASE("searching drains and retreats the tick the threshold is crossed") {
    Fixture fx;
    fx.params.rates.alpha_search = 0.02;
    Robot robot = searching_robot(0.31, 0.30, 0.5);

    const TickEffect effect = fx.run(robot, SensorReport{});
    CHECK(robot.battery.level == doctest::Approx(0.29).epsilon(kTol));
    CHECK(robot.state == RobotState::Retreating);
    CHECK(robot.round.t_search == 1);
    CHECK(effect.motion == Motion::SearchStep); // the crossing tick still moves as a search step
}

TEST_CASE("resource contact: pickup costs only the collection fee") {
    Fixture fx;
    fx.params.rates.collection_cost = 0.05;
    Robot robot = searching_robot(0.5, 0.1, 0.5);

    SensorReport sensed;
    sensed.resource_contact = true;
    sensed.resource_index = 3;
    const TickEffect effect = fx.run(robot, sensed);

    CHECK(robot.state == RobotState::Retreating);
    CHECK(robot.carrying);
    CHECK(robot.round.success);
    CHECK(robot.battery.level == doctest::Approx(0.45).epsilon(kTol));
    CHECK(robot.round.t_search == 0); // no search drain on the pickup tick
    CHECK(effect.collected);
    CHECK(effect.motion == Motion::None);
}

TEST_CASE("retreating robot inside the nest deposits and starts charging") {
    Fixture fx;
    fx.params.nest_delay = 20;
    Robot robot = searching_robot(0.4, 0.3, 0.5);
    robot.state = RobotState::Retreating;
    robot.carrying = true;

    SensorReport sensed;
    sensed.in_nest = true;
    const TickEffect effect = fx.run(robot, sensed);

    CHECK(robot.state == RobotState::Charging);
    CHECK(robot.nest_delay == 20);
    CHECK_FALSE(robot.carrying);
    CHECK(effect.deposited);
    CHECK(effect.arrived);
    CHECK(effect.drained == doctest::Approx(0.0).epsilon(kTol)); // arrival tick is free
}

TEST_CASE("charge tick counts the delay down") {
    Fixture fx;
    Robot robot = searching_robot(0.2, 0.3, 0.5);
    robot.state = RobotState::Charging;
    robot.nest_delay = 3;

    charge_tick(robot, *fx.policy, fx.rng);
    CHECK(robot.nest_delay == 2);
    CHECK(robot.state == RobotState::Charging);
}

TEST_CASE("charge tick after the delay adapts, refills and departs") {
    StrategyConfig cfg;
    auto policy = make_policy(StrategyId::AdaptiveNull, cfg);
    Rng rng(1);

    Robot robot;
    robot.state = RobotState::Charging;
    robot.nest_delay = 0;
    robot.battery = make_battery(0.3, 0.5);
    robot.battery.level = 0.25;
    // Crowded failure that ran the budget dry: composition of the threshold
    // update examples gives upper = 1 after adaptation.
    robot.round = {false, 2, 0.5, 400, 100};

    const TickEffect effect = charge_tick(robot, *policy, rng);

    CHECK(effect.round_ended);
    CHECK(effect.departed);
    CHECK(robot.state == RobotState::Searching);
    CHECK(robot.battery.lower == doctest::Approx(0.41).epsilon(kTol));
    CHECK(robot.battery.level == doctest::Approx(1.0).epsilon(kTol));
    CHECK(robot.round.t_search == 0); // accumulator reset
    CHECK_FALSE(robot.round.success);
    CHECK(robot.round.energy_spent == doctest::Approx(0.0).epsilon(kTol));
}

TEST_CASE("charge tick parks a null-informed robot that hit the endgame") {
    StrategyConfig cfg;
    auto policy = make_policy(StrategyId::AdaptiveNull, cfg);
    Rng rng(1);

    Robot robot;
    robot.state = RobotState::Charging;
    robot.nest_delay = 0;
    robot.battery = make_battery(0.41, 0.62); // saturated
    robot.battery.level = 0.3;
    robot.round = {false, 0, 1.0, 900, 100};

    const TickEffect effect = charge_tick(robot, *policy, rng);

    CHECK(effect.parked);
    CHECK(robot.state == RobotState::Inactive);
    CHECK(robot.battery.level == doctest::Approx(0.3).epsilon(kTol)); // parks as it arrived
}

TEST_CASE("extra nest delay from the endgame keeps the robot charging") {
    StrategyConfig cfg;
    auto policy = make_policy(StrategyId::AdaptiveWell, cfg);
    Rng rng(1);

    Robot robot;
    robot.state = RobotState::Charging;
    robot.nest_delay = 0;
    robot.battery = make_battery(0.41, 0.62);
    robot.battery.level = 0.3;
    robot.round = {false, 0, 1.0, 900, 100};

    TickEffect effect = charge_tick(robot, *policy, rng);
    CHECK(effect.round_ended);
    CHECK_FALSE(effect.departed);
    CHECK(robot.state == RobotState::Charging);
    CHECK(robot.nest_delay == cfg.eee_tau);

    // Sit the extra delay out, then depart without re-running the adaptation.
    for (int i = 0; i < cfg.eee_tau; ++i) {
        effect = charge_tick(robot, *policy, rng);
    }
    effect = charge_tick(robot, *policy, rng);
    CHECK(effect.departed);
    CHECK_FALSE(effect.round_ended);
    CHECK(robot.state == RobotState::Searching);
}

TEST_CASE("contract violations throw simulation faults") {
    Fixture fx;
    Robot robot = searching_robot(0.5, 0.3, 0.5);
    robot.state = RobotState::Dead;
    CHECK_THROWS_AS(fx.run(robot, SensorReport{}), SimulationFault);

    robot.state = RobotState::Searching;
    CHECK_THROWS_AS(charge_tick(robot, *fx.policy, fx.rng), SimulationFault);
}

TEST_CASE("draining to zero in the field kills the robot") {
    Fixture fx;
    fx.params.rates.alpha_retreat = 0.05;
    Robot robot = searching_robot(0.04, 0.3, 0.5);
    robot.state = RobotState::Retreating;
    robot.carrying = true;

    const TickEffect effect = fx.run(robot, SensorReport{});
    CHECK(robot.state == RobotState::Dead);
    CHECK_FALSE(robot.carrying);
    CHECK(effect.died);
    CHECK(robot.battery.level == doctest::Approx(0.0).epsilon(kTol));
    CHECK(robot.round.energy_spent == doctest::Approx(0.04).epsilon(kTol)); // partial drain
}

TEST_CASE("a pickup that flattens the battery kills without collecting") {
    Fixture fx;
    fx.params.rates.collection_cost = 0.05;
    Robot robot = searching_robot(0.03, 0.0, 0.5);

    SensorReport sensed;
    sensed.resource_contact = true;
    const TickEffect effect = fx.run(robot, sensed);

    CHECK(robot.state == RobotState::Dead);
    CHECK_FALSE(effect.collected);
    CHECK_FALSE(robot.carrying);
}

TEST_CASE("inactive robots are absorbing no-ops") {
    Fixture fx;
    Robot robot = searching_robot(1.0, 0.3, 0.5);
    robot.state = RobotState::Inactive;
    const TickEffect effect = fx.run(robot, SensorReport{});
    CHECK(robot.state == RobotState::Inactive);
    CHECK(effect.drained == doctest::Approx(0.0).epsilon(kTol));
    CHECK(effect.motion == Motion::None);
}

TEST_CASE("per-round accounting identity on a scripted round") {
    Fixture fx;
    fx.params.rates = {0.003, 0.002, 0.05};
    Robot robot = searching_robot(0.8, 0.1, 0.7);
    const double departure_level = robot.battery.level;

    // 25 searching ticks, then a pickup, then 40 retreating ticks, then home.
    for (int i = 0; i < 25; ++i) fx.run(robot, SensorReport{});
    SensorReport pickup;
    pickup.resource_contact = true;
    fx.run(robot, pickup);
    for (int i = 0; i < 40; ++i) fx.run(robot, SensorReport{});
    SensorReport home;
    home.in_nest = true;
    fx.run(robot, home);

    CHECK(robot.state == RobotState::Charging);
    CHECK(robot.round.t_search == 25);
    CHECK(robot.round.t_retreat == 40);
    CHECK(robot.round.success);
    const double expected = 0.003 * 25 + 0.05 + 0.002 * 40;
    CHECK(robot.round.energy_spent == doctest::Approx(expected).epsilon(kTol));
    CHECK(departure_level - robot.battery.level ==
          doctest::Approx(robot.round.energy_spent).epsilon(kTol));
    CHECK(-round_energy_delta(fx.params.rates, robot.round) ==
          doctest::Approx(robot.round.energy_spent).epsilon(kTol));
}

} // TEST_SUITE
