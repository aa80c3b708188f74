#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swarmforage/strategies.hpp"
#include "swarmforage/world.hpp"

namespace swarmforage {

/// Full sweep description: which strategies and swarm sizes to run, how
/// many replicates, and every simulation knob.
struct ExperimentConfig {
    SimConfig sim{};
    std::vector<StrategyId> strategies = all_strategies();
    std::vector<int> swarm_sizes = {2, 4, 8, 16, 32, 64};
    int replicates = 20;
    std::uint64_t master_seed = 1;
    int workers = 0; // 0 = hardware concurrency
    std::string out = "sweep.csv";
};

/// Swarm sizes of the complete published-style sweep (2 .. 256).
std::vector<int> full_sweep_sizes();

/// Parses the flat `key = value` config grammar ('#' starts a comment,
/// blank lines ignored, lists are comma-separated). Unknown keys and
/// malformed values raise ConfigError with the offending key.
ExperimentConfig parse_config_text(std::string_view text);

/// Reads and parses a config file. The literal name "default" yields the
/// built-in defaults.
ExperimentConfig load_config(const std::string& path);

/// Checks every invariant the simulation relies on; throws ConfigError
/// naming the first offending field.
void validate(const ExperimentConfig& config);

/// The default config in config-file form, with comments. Serves as both
/// documentation and a starting point for experiments.
std::string default_config_text();

} // namespace swarmforage
