#include "swarmforage/robot.hpp"

#include <algorithm>

#include "swarmforage/errors.hpp"

namespace swarmforage {

std::string_view to_string(RobotState s) {
    switch (s) {
    case RobotState::Charging: return "charging";
    case RobotState::Searching: return "searching";
    case RobotState::Retreating: return "retreating";
    case RobotState::Dead: return "dead";
    case RobotState::Inactive: return "inactive";
    }
    return "?";
}

// Removes up to `amount` from the battery, recording it both in the round
// accumulator and the lifetime total. Returns what was actually drained.
static double drain(Robot& robot, double amount) {
    const double actual = std::min(amount, robot.battery.level);
    robot.battery.level -= actual;
    robot.round.energy_spent += actual;
    robot.depleted_total += actual;
    return actual;
}

static bool flat(const Robot& robot) { return robot.battery.level <= 0.0; }

TickEffect charge_tick(Robot& robot, EnergyPolicy& policy, Rng& rng) {
    if (robot.state != RobotState::Charging) {
        throw SimulationFault("charge_tick outside the Charging state");
    }
    TickEffect effect;
    if (robot.nest_delay > 0) {
        robot.nest_delay -= 1;
        return effect;
    }
    if (!robot.recharged) {
        const ChargeDirective directive = policy.on_round_end(robot.battery, robot.round);
        robot.battery.level = directive.target_level;
        robot.round = RoundOutcome{};
        robot.recharged = true;
        effect.round_ended = true;
        if (directive.park) {
            robot.state = RobotState::Inactive;
            effect.parked = true;
            return effect;
        }
        if (directive.extra_nest_delay > 0) {
            robot.nest_delay = directive.extra_nest_delay;
            return effect;
        }
    }
    if (policy.may_depart(rng)) {
        robot.state = RobotState::Searching;
        robot.recharged = false;
        effect.departed = true;
    }
    return effect;
}

TickEffect tick(Robot& robot, const SensorReport& sensed, const FsmParams& params,
                EnergyPolicy& policy, Rng& rng) {
    if (robot.state == RobotState::Dead) {
        throw SimulationFault("tick on a dead robot");
    }
    TickEffect effect;
    switch (robot.state) {
    case RobotState::Inactive:
        return effect;

    case RobotState::Charging:
        return charge_tick(robot, policy, rng);

    case RobotState::Searching:
        if (sensed.resource_contact &&
            (params.collection_success >= 1.0 || rng.bernoulli(params.collection_success))) {
            // Pickup is instantaneous: the tick costs only the collection fee.
            effect.drained = drain(robot, params.rates.collection_cost);
            if (flat(robot) && !sensed.in_nest) {
                robot.state = RobotState::Dead;
                effect.died = true;
                return effect;
            }
            robot.carrying = true;
            robot.round.success = true;
            robot.state = RobotState::Retreating;
            effect.collected = true;
            return effect;
        }
        effect.drained = drain(robot, params.rates.alpha_search);
        robot.round.t_search += 1;
        robot.round.encounters += sensed.robot_contacts;
        if (flat(robot) && !sensed.in_nest) {
            robot.state = RobotState::Dead;
            effect.died = true;
            return effect;
        }
        if (robot.battery.level <= robot.battery.lower || policy.wants_retreat(robot.round)) {
            robot.state = RobotState::Retreating;
        }
        effect.motion = Motion::SearchStep;
        return effect;

    case RobotState::Retreating:
        if (sensed.in_nest) {
            if (robot.carrying) {
                robot.carrying = false;
                effect.deposited = true;
            }
            robot.state = RobotState::Charging;
            robot.nest_delay = params.nest_delay;
            robot.recharged = false;
            effect.arrived = true;
            return effect;
        }
        effect.drained = drain(robot, params.rates.alpha_retreat);
        robot.round.t_retreat += 1;
        robot.round.encounters += sensed.robot_contacts;
        if (flat(robot)) {
            robot.state = RobotState::Dead;
            robot.carrying = false;
            effect.died = true;
            return effect;
        }
        effect.motion = Motion::RetreatStep;
        return effect;

    case RobotState::Dead:
        break;
    }
    return effect;
}

} // namespace swarmforage
