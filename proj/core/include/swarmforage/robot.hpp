#pragma once

#include "swarmforage/battery.hpp"
#include "swarmforage/geometry.hpp"
#include "swarmforage/strategies.hpp"

namespace swarmforage {

/// Controller states. Picking a resource up is an instantaneous
/// searching -> retreating step, so it needs no state of its own. Dead and
/// Inactive are absorbing.
enum class RobotState { Charging, Searching, Retreating, Dead, Inactive };

std::string_view to_string(RobotState s);

struct Robot {
    int id = 0;
    Vec2 position{};
    double heading = 0.0;
    RobotState state = RobotState::Searching;
    Battery battery{};
    bool carrying = false;
    RoundOutcome round{};
    int nest_delay = 0;
    bool recharged = false;       // round settled; waiting on the departure gate
    double depleted_total = 0.0;  // lifetime energy drained, for the metrics
};

/// What the robot perceived this tick, computed by the world before the
/// controller runs. Positions of other robots are a tick-start snapshot so
/// contacts come out symmetric.
struct SensorReport {
    bool resource_contact = false;
    std::size_t resource_index = 0;
    int robot_contacts = 0;
    bool in_nest = false;
};

/// Controller knobs that are fixed for a run.
struct FsmParams {
    EnergyRates rates{};
    int nest_delay = 20;              // recharge wait on each nest arrival
    double collection_success = 1.0;  // pickup success probability
};

enum class Motion { None, SearchStep, RetreatStep };

/// Side effects of one controller tick, for the world to apply and log.
struct TickEffect {
    Motion motion = Motion::None;
    bool collected = false;
    bool deposited = false;
    bool arrived = false;
    bool departed = false;
    bool parked = false;
    bool died = false;
    bool round_ended = false;
    double drained = 0.0;
};

/// Advances the robot's state machine by one tick. Event transitions
/// (pickup, nest arrival, recharge) take the whole tick; otherwise the
/// robot drains at the state's rate and asks for a movement step.
/// Throws SimulationFault when called on a dead robot.
TickEffect tick(Robot& robot, const SensorReport& sensed, const FsmParams& params,
                EnergyPolicy& policy, Rng& rng);

/// One tick of the charging branch: counts the nest delay down, then runs
/// the policy's round-end adaptation, refills to the directed target and
/// releases the robot through the departure gate (or parks it).
/// Throws SimulationFault when called outside the Charging state.
TickEffect charge_tick(Robot& robot, EnergyPolicy& policy, Rng& rng);

} // namespace swarmforage
