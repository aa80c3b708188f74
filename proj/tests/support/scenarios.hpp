#pragma once

// Shared placed-scenario builders. The corridor setup keeps every distance a
// multiple of the per-tick step (1/16 m) and all coordinates exactly
// representable, so tick counts equal distance/speed with no rounding edge.

#include "swarmforage/world.hpp"

namespace swarmforage::testsupport {

struct Corridor {
    SimConfig config;
    Vec2 start{5.0, 5.0};        // nest center
    Vec2 resource{7.125, 5.0};   // 2.125 m east of the start
    long search_ticks = 32;      // (2.125 - 0.125) / 0.0625
    long retreat_ticks = 24;     // (7.0 - 5.5) / 0.0625

    Corridor() {
        config.arena.width = 10.0;
        config.arena.height = 10.0;
        config.arena.nest_width = 1.0;
        config.arena.nest_height = 1.0;
        config.arena.robot_speed = 0.0625;
        config.arena.sensing_radius = 0.125;
        config.arena.collision_radius = 0.2;
        config.arena.turn_max = 0.0; // straight line
        config.resources.density = 2;
        config.resources.respawn_until = 0;
        config.resources.final_batch = 2;
        config.tick_limit = 100000;
    }

    World make(StrategyId strategy, std::uint64_t seed = 1) const {
        World world(config, strategy, 1, seed);
        Robot& robot = world.robot_mutable(0);
        robot.position = start;
        robot.heading = 0.0; // due east
        world.resources_mutable().set_position(0, resource);
        world.resources_mutable().set_position(1, {0.5, 0.5}); // out of the way
        return world;
    }
};

/// Steps until the robot reaches the given state (or the guard expires).
inline bool step_until_state(World& world, int robot_id, RobotState state,
                             long max_ticks = 100000) {
    while (world.robots()[static_cast<std::size_t>(robot_id)].state != state) {
        if (world.terminated() || world.tick() >= max_ticks) return false;
        world.step();
    }
    return true;
}

} // namespace swarmforage::testsupport
