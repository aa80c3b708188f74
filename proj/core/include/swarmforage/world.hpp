#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "swarmforage/events.hpp"
#include "swarmforage/geometry.hpp"
#include "swarmforage/robot.hpp"
#include "swarmforage/rng.hpp"
#include "swarmforage/strategies.hpp"

namespace swarmforage {

/// Flat, open 2D arena with a central rectangular nest.
struct ArenaConfig {
    double width = 10.0;
    double height = 10.0;
    double nest_width = 1.0;
    double nest_height = 1.0;
    double robot_speed = 0.05;      // meters per tick
    double sensing_radius = 0.25;   // resource pickup range
    double collision_radius = 0.07;  // robot-encounter range
    double turn_max = 0.25;         // random-walk heading jitter (radians/tick)

    Rect bounds() const { return {0.0, 0.0, width, height}; }
    Rect nest() const {
        return Rect::centered({width / 2, height / 2}, nest_width, nest_height);
    }
};

/// Respawn protocol: the live set is topped back up to `density` on every
/// pickup until `respawn_until` resources have been collected. At that
/// point the field is reduced (or topped up) to exactly `final_batch`
/// resources, which deplete with no further respawn.
struct ResourceProtocol {
    int density = 80;
    int respawn_until = 100;
    int final_batch = 25;
};

/// Everything one simulation run needs besides strategy, swarm size, seed.
struct SimConfig {
    ArenaConfig arena{};
    FsmParams fsm{};
    StrategyConfig strategy{};
    ResourceProtocol resources{};
    long tick_limit = 200000;
};

class ResourcePool {
public:
    ResourcePool(const ResourceProtocol& protocol, const ArenaConfig& arena, Rng& rng);

    /// Index of a live resource within `radius` of `p`, preferring the
    /// nearest one.
    std::optional<std::size_t> find_within(Vec2 p, double radius) const;

    /// Removes a picked-up resource and, while the respawn phase lasts,
    /// places a replacement. Returns the replacement position if one spawned.
    std::optional<Vec2> collect(std::size_t index, const ArenaConfig& arena, Rng& rng);

    const std::vector<Vec2>& live() const { return live_; }
    int collected_total() const { return collected_; }
    int respawned_total() const { return respawned_; }
    int trimmed_total() const { return trimmed_; }
    int initial_count() const { return initial_; }
    bool exhausted() const { return live_.empty(); }

    /// Conservation check: what entered minus what left must be live.
    bool conserved() const {
        return collected_ + static_cast<int>(live_.size()) - respawned_ + trimmed_ ==
               initial_;
    }

    /// Scenario hook: pin a live resource to an exact position.
    void set_position(std::size_t index, Vec2 p) { live_[index] = p; }

private:
    std::vector<Vec2> live_;
    ResourceProtocol protocol_{};
    int collected_ = 0;
    int respawned_ = 0;
    int trimmed_ = 0;
    int initial_ = 0;
};

/// Uniform point in the arena but outside the nest.
Vec2 sample_field_position(const ArenaConfig& arena, Rng& rng);

enum class TerminationReason { None, AllCollected, EeeStop, AllDead, TickLimit };

std::string_view to_string(TerminationReason reason);

/// One simulation run: robots stepped in id order over a shared arena,
/// everything drawn from one seeded stream. Two worlds built with the same
/// arguments replay identically.
class World {
public:
    World(const SimConfig& config, StrategyId strategy, int swarm_size, std::uint64_t seed,
          EventLog* log = nullptr);

    /// Advances every active robot one tick and re-evaluates termination.
    /// Throws SimulationFault if the run is already over.
    void step();

    /// Runs to termination. Returns the ticks executed.
    long run_to_completion();

    bool terminated() const { return reason_ != TerminationReason::None; }
    TerminationReason termination_reason() const { return reason_; }

    long tick() const { return tick_; }
    StrategyId strategy() const { return strategy_; }
    const SimConfig& config() const { return config_; }
    const std::vector<Robot>& robots() const { return robots_; }
    const ResourcePool& resources() const { return pool_; }
    const EnergyPolicy& policy(int robot_id) const { return *policies_[robot_id]; }

    /// Scenario hooks for placed setups (tests, recorded cases).
    Robot& robot_mutable(int id) { return robots_[static_cast<std::size_t>(id)]; }
    ResourcePool& resources_mutable() { return pool_; }

private:
    SimConfig config_;
    StrategyId strategy_;
    Rng rng_;
    ResourcePool pool_;
    std::vector<Robot> robots_;
    std::vector<std::unique_ptr<EnergyPolicy>> policies_;
    long tick_ = 0;
    TerminationReason reason_ = TerminationReason::None;
    EventLog* log_ = nullptr;

    std::vector<int> contact_counts() const;
    void move_search(Robot& robot, bool bounce);
    void move_retreat(Robot& robot);
    void refresh_termination();
};

} // namespace swarmforage
