#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace swarmforage {

/// Everything one run leaves behind for the efficiency metrics.
struct RunRecord {
    std::string strategy;
    int swarm_size = 0;
    std::uint64_t seed = 0;
    long resources_collected = 0;
    long total_ticks = 0;
    std::vector<double> depleted; // per-robot energy drained over the whole run
    std::vector<double> residual; // per-robot battery level at termination
    std::string termination_reason;

    double sum_depleted() const;
    double sum_residual() const;
};

/// Resources per tick. Throws MetricError when no time elapsed.
double eta(const RunRecord& record);

/// Resources per unit of total energy footprint: everything drained plus
/// everything still sitting in the batteries at the end. Throws MetricError
/// on a zero footprint.
double eta_prime(const RunRecord& record);

/// Per-(strategy, swarm size) distribution summary.
struct GroupSummary {
    std::string strategy;
    int swarm_size = 0;
    int count = 0;
    double mean_eta = 0.0;
    double std_eta = 0.0;
    double mean_eta_prime = 0.0;
    double std_eta_prime = 0.0;
};

/// Mean and sample standard deviation of both metrics, grouped by
/// (strategy, swarm size), sorted by key. Throws MetricError on no input.
std::vector<GroupSummary> aggregate(const std::vector<RunRecord>& records);

// CSV emission. Column order is part of the format contract.
void write_run_csv_header(std::ostream& out);
void write_run_csv_row(std::ostream& out, const RunRecord& record);
void write_summary_csv_header(std::ostream& out);
void write_summary_csv_row(std::ostream& out, const GroupSummary& summary);

std::string runs_to_csv(const std::vector<RunRecord>& records);
std::string summaries_to_csv(const std::vector<GroupSummary>& summaries);

/// Fixed-width table for terminal output.
std::string summary_table(const std::vector<GroupSummary>& summaries);

} // namespace swarmforage
