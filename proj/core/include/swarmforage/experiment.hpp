#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swarmforage/config.hpp"
#include "swarmforage/metrics.hpp"
#include "swarmforage/world.hpp"

namespace swarmforage {

/// Child seed for one run. Keyed by the strategy's name (not its list
/// position), so reordering the strategy list never changes a run.
std::uint64_t derive_run_seed(std::uint64_t master_seed, StrategyId strategy, int swarm_size,
                              int replicate);

/// Runs one world to termination and summarizes it.
RunRecord run_single(const SimConfig& config, StrategyId strategy, int swarm_size,
                     std::uint64_t seed, EventLog* log = nullptr);

struct SweepJob {
    StrategyId strategy{};
    int swarm_size = 0;
    int replicate = 0;
    std::uint64_t seed = 0;
};

/// The full (strategy x size x replicate) job list, in output order.
std::vector<SweepJob> sweep_jobs(const ExperimentConfig& config);

/// Executes every job, replicates spread over a worker pool. Results come
/// back in job order regardless of scheduling.
std::vector<RunRecord> run_sweep(const ExperimentConfig& config);

/// Where the aggregate rows go for a given runs path: `x.csv` ->
/// `x_summary.csv`.
std::string summary_path(const std::string& runs_path);

/// Writes the per-run CSV to config.out and the aggregates next to it.
/// Returns the summary table for terminal display.
std::string write_sweep_outputs(const ExperimentConfig& config,
                                const std::vector<RunRecord>& records);

} // namespace swarmforage
