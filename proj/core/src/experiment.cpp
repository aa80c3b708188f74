#include "swarmforage/experiment.hpp"

#include <atomic>
#include <fstream>
#include <thread>

#include "swarmforage/errors.hpp"

namespace swarmforage {

std::uint64_t derive_run_seed(std::uint64_t master_seed, StrategyId strategy, int swarm_size,
                              int replicate) {
    std::uint64_t x = mix64(master_seed ^ hash_string(to_string(strategy)));
    x = mix64(x ^ static_cast<std::uint64_t>(swarm_size));
    x = mix64(x ^ static_cast<std::uint64_t>(replicate));
    return x;
}

RunRecord run_single(const SimConfig& config, StrategyId strategy, int swarm_size,
                     std::uint64_t seed, EventLog* log) {
    World world(config, strategy, swarm_size, seed, log);
    world.run_to_completion();

    RunRecord record;
    record.strategy = std::string(to_string(strategy));
    record.swarm_size = swarm_size;
    record.seed = seed;
    record.resources_collected = world.resources().collected_total();
    record.total_ticks = world.tick();
    record.depleted.reserve(world.robots().size());
    record.residual.reserve(world.robots().size());
    for (const Robot& robot : world.robots()) {
        record.depleted.push_back(robot.depleted_total);
        record.residual.push_back(robot.battery.level);
    }
    record.termination_reason = std::string(to_string(world.termination_reason()));
    return record;
}

std::vector<SweepJob> sweep_jobs(const ExperimentConfig& config) {
    std::vector<SweepJob> jobs;
    jobs.reserve(config.strategies.size() * config.swarm_sizes.size() *
                 static_cast<std::size_t>(config.replicates));
    for (StrategyId strategy : config.strategies) {
        for (int size : config.swarm_sizes) {
            for (int rep = 0; rep < config.replicates; ++rep) {
                jobs.push_back({strategy, size, rep,
                                derive_run_seed(config.master_seed, strategy, size, rep)});
            }
        }
    }
    return jobs;
}

std::vector<RunRecord> run_sweep(const ExperimentConfig& config) {
    validate(config);
    const std::vector<SweepJob> jobs = sweep_jobs(config);
    std::vector<RunRecord> records(jobs.size());

    unsigned workers = config.workers > 0 ? static_cast<unsigned>(config.workers)
                                          : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));

    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            const SweepJob& job = jobs[i];
            records[i] = run_single(config.sim, job.strategy, job.swarm_size, job.seed);
        }
        return records;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const SweepJob& job = jobs[i];
            records[i] = run_single(config.sim, job.strategy, job.swarm_size, job.seed);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return records;
}

std::string summary_path(const std::string& runs_path) {
    const std::size_t dot = runs_path.rfind('.');
    const std::size_t slash = runs_path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return runs_path + "_summary";
    }
    return runs_path.substr(0, dot) + "_summary" + runs_path.substr(dot);
}

std::string write_sweep_outputs(const ExperimentConfig& config,
                                const std::vector<RunRecord>& records) {
    std::ofstream runs(config.out, std::ios::binary);
    if (!runs) {
        throw std::runtime_error("cannot write '" + config.out + "'");
    }
    runs << runs_to_csv(records);
    runs.close();
    if (!runs) {
        throw std::runtime_error("failed while writing '" + config.out + "'");
    }

    const std::vector<GroupSummary> summaries = aggregate(records);
    const std::string agg_path = summary_path(config.out);
    std::ofstream agg(agg_path, std::ios::binary);
    if (!agg) {
        throw std::runtime_error("cannot write '" + agg_path + "'");
    }
    agg << summaries_to_csv(summaries);
    agg.close();
    if (!agg) {
        throw std::runtime_error("failed while writing '" + agg_path + "'");
    }
    return summary_table(summaries);
}

} // namespace swarmforage
