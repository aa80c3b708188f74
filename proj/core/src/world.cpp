#include "swarmforage/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swarmforage/errors.hpp"

namespace swarmforage {

std::string_view to_string(TerminationReason reason) {
    switch (reason) {
    case TerminationReason::None: return "none";
    case TerminationReason::AllCollected: return "all_collected";
    case TerminationReason::EeeStop: return "eee_stop";
    case TerminationReason::AllDead: return "all_dead";
    case TerminationReason::TickLimit: return "tick_limit";
    }
    return "?";
}

Vec2 sample_field_position(const ArenaConfig& arena, Rng& rng) {
    const Rect nest = arena.nest();
    for (;;) {
        Vec2 p{rng.uniform(0.0, arena.width), rng.uniform(0.0, arena.height)};
        if (!nest.contains(p)) return p;
    }
}

ResourcePool::ResourcePool(const ResourceProtocol& protocol, const ArenaConfig& arena,
                           Rng& rng)
    : protocol_(protocol), initial_(protocol.density) {
    live_.reserve(static_cast<std::size_t>(protocol.density));
    for (int i = 0; i < protocol.density; ++i) {
        live_.push_back(sample_field_position(arena, rng));
    }
}

std::optional<std::size_t> ResourcePool::find_within(Vec2 p, double radius) const {
    const double r2 = radius * radius;
    double best = std::numeric_limits<double>::infinity();
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < live_.size(); ++i) {
        const double d2 = distance_sq(live_[i], p);
        if (d2 <= r2 && d2 < best) {
            best = d2;
            found = i;
        }
    }
    return found;
}

std::optional<Vec2> ResourcePool::collect(std::size_t index, const ArenaConfig& arena,
                                          Rng& rng) {
    live_[index] = live_.back();
    live_.pop_back();
    collected_ += 1;
    if (collected_ < protocol_.respawn_until) {
        const Vec2 replacement = sample_field_position(arena, rng);
        live_.push_back(replacement);
        respawned_ += 1;
        return replacement;
    }
    if (collected_ == protocol_.respawn_until) {
        // The respawn phase ends here: exactly `final_batch` resources stay
        // in the field and deplete.
        const std::size_t target = static_cast<std::size_t>(protocol_.final_batch);
        while (live_.size() > target) {
            const std::size_t victim = static_cast<std::size_t>(rng.below(live_.size()));
            live_[victim] = live_.back();
            live_.pop_back();
            trimmed_ += 1;
        }
        while (live_.size() < target) {
            live_.push_back(sample_field_position(arena, rng));
            respawned_ += 1;
        }
    }
    return std::nullopt;
}

World::World(const SimConfig& config, StrategyId strategy, int swarm_size,
             std::uint64_t seed, EventLog* log)
    : config_(config), strategy_(strategy), rng_(seed),
      pool_(config.resources, config.arena, rng_), log_(log) {
    if (swarm_size < 1) {
        throw ConfigError("swarm_size", "must be at least 1");
    }
    const Rect nest = config_.arena.nest();
    robots_.reserve(static_cast<std::size_t>(swarm_size));
    policies_.reserve(static_cast<std::size_t>(swarm_size));
    for (int id = 0; id < swarm_size; ++id) {
        Robot robot;
        robot.id = id;
        robot.position = {rng_.uniform(nest.min_x, nest.max_x),
                          rng_.uniform(nest.min_y, nest.max_y)};
        robot.heading = rng_.uniform(-M_PI, M_PI);
        robot.state = RobotState::Searching;
        robot.battery = initial_battery(strategy, config_.strategy);
        robots_.push_back(robot);
        policies_.push_back(make_policy(strategy, config_.strategy));
    }
    refresh_termination();
}

std::vector<int> World::contact_counts() const {
    std::vector<int> counts(robots_.size(), 0);
    const double r2 = config_.arena.collision_radius * config_.arena.collision_radius;
    for (std::size_t a = 0; a < robots_.size(); ++a) {
        const Robot& ra = robots_[a];
        if (ra.state != RobotState::Searching && ra.state != RobotState::Retreating) continue;
        for (std::size_t b = a + 1; b < robots_.size(); ++b) {
            const Robot& rb = robots_[b];
            if (rb.state != RobotState::Searching && rb.state != RobotState::Retreating)
                continue;
            if (distance_sq(ra.position, rb.position) <= r2) {
                counts[a] += 1;
                counts[b] += 1;
            }
        }
    }
    return counts;
}

void World::move_search(Robot& robot, bool bounce) {
    const ArenaConfig& arena = config_.arena;
    if (bounce) {
        robot.heading = wrap_angle(robot.heading + M_PI);
    }
    robot.heading =
        wrap_angle(robot.heading + rng_.uniform(-arena.turn_max, arena.turn_max));
    double nx = robot.position.x + arena.robot_speed * std::cos(robot.heading);
    double ny = robot.position.y + arena.robot_speed * std::sin(robot.heading);
    double heading = robot.heading;
    if (nx < 0.0) {
        nx = -nx;
        heading = M_PI - heading;
    } else if (nx > arena.width) {
        nx = 2.0 * arena.width - nx;
        heading = M_PI - heading;
    }
    if (ny < 0.0) {
        ny = -ny;
        heading = -heading;
    } else if (ny > arena.height) {
        ny = 2.0 * arena.height - ny;
        heading = -heading;
    }
    robot.position = {std::clamp(nx, 0.0, arena.width), std::clamp(ny, 0.0, arena.height)};
    robot.heading = wrap_angle(heading);
}

void World::move_retreat(Robot& robot) {
    const Vec2 target = config_.arena.nest().center();
    const Vec2 d = target - robot.position;
    const double dist = norm(d);
    if (dist <= 1e-12) return;
    robot.heading = std::atan2(d.y, d.x);
    const double step = std::min(config_.arena.robot_speed, dist);
    robot.position = robot.position + (step / dist) * d;
}

void World::step() {
    if (terminated()) {
        throw SimulationFault("step on a terminated world");
    }
    const Rect nest = config_.arena.nest();
    const std::vector<int> contacts = contact_counts();

    for (Robot& robot : robots_) {
        if (robot.state == RobotState::Dead || robot.state == RobotState::Inactive) continue;

        SensorReport report;
        report.in_nest = nest.contains(robot.position);
        report.robot_contacts = contacts[static_cast<std::size_t>(robot.id)];
        if (robot.state == RobotState::Searching) {
            if (auto idx = pool_.find_within(robot.position, config_.arena.sensing_radius)) {
                report.resource_contact = true;
                report.resource_index = *idx;
            }
        }

        const TickEffect effect =
            swarmforage::tick(robot, report, config_.fsm, *policies_[robot.id], rng_);

        if (effect.collected) {
            const auto replacement = pool_.collect(report.resource_index, config_.arena, rng_);
            if (log_ && replacement) {
                log_->append(tick_, -1, EventKind::Respawn,
                             format_double(replacement->x) + ";" + format_double(replacement->y));
            }
        }
        if (effect.motion == Motion::SearchStep) {
            move_search(robot, report.robot_contacts > 0);
        } else if (effect.motion == Motion::RetreatStep) {
            move_retreat(robot);
        }

        if (log_) {
            if (effect.drained > 0.0) {
                log_->append(tick_, robot.id,
                             effect.collected ? EventKind::Collect : EventKind::Drain,
                             format_double(effect.drained));
            }
            if (effect.deposited) {
                log_->append(tick_, robot.id, EventKind::Deposit,
                             std::to_string(pool_.collected_total()));
            }
            if (effect.arrived) log_->append(tick_, robot.id, EventKind::Arrive);
            if (effect.round_ended) {
                log_->append(tick_, robot.id, EventKind::RoundEnd,
                             format_double(robot.battery.lower) + ";" +
                                 format_double(robot.battery.upper) + ";" +
                                 format_double(robot.battery.level));
            }
            if (effect.departed) log_->append(tick_, robot.id, EventKind::Depart);
            if (effect.parked) log_->append(tick_, robot.id, EventKind::Park);
            if (effect.died) log_->append(tick_, robot.id, EventKind::Death);
        }
    }

    tick_ += 1;
    refresh_termination();
}

long World::run_to_completion() {
    while (!terminated()) step();
    return tick_;
}

void World::refresh_termination() {
    if (pool_.exhausted()) {
        reason_ = TerminationReason::AllCollected;
        return;
    }
    int living = 0;
    int parked = 0;
    int foraging = 0;
    bool all_triggered = true;
    for (const Robot& robot : robots_) {
        if (robot.state == RobotState::Dead) continue;
        living += 1;
        if (robot.state == RobotState::Inactive) parked += 1;
        if (robot.state == RobotState::Searching || robot.state == RobotState::Retreating)
            foraging += 1;
        if (!policies_[robot.id]->eee_triggered()) all_triggered = false;
    }
    if (living == 0) {
        reason_ = TerminationReason::AllDead;
        return;
    }
    switch (eee_stop_rule(strategy_)) {
    case EeeStopRule::AllParked:
        if (parked == living) {
            reason_ = TerminationReason::EeeStop;
            return;
        }
        break;
    case EeeStopRule::NoneForaging:
        if (all_triggered && foraging == 0) {
            reason_ = TerminationReason::EeeStop;
            return;
        }
        break;
    case EeeStopRule::None:
        break;
    }
    if (tick_ >= config_.tick_limit) {
        reason_ = TerminationReason::TickLimit;
    }
}

} // namespace swarmforage
