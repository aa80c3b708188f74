#include "swarmforage/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "swarmforage/errors.hpp"
#include "swarmforage/events.hpp"

namespace swarmforage {

double RunRecord::sum_depleted() const {
    return std::accumulate(depleted.begin(), depleted.end(), 0.0);
}

double RunRecord::sum_residual() const {
    return std::accumulate(residual.begin(), residual.end(), 0.0);
}

double eta(const RunRecord& record) {
    if (record.total_ticks <= 0) {
        throw MetricError("eta undefined: no time elapsed");
    }
    return static_cast<double>(record.resources_collected) /
           static_cast<double>(record.total_ticks);
}

double eta_prime(const RunRecord& record) {
    const double footprint = record.sum_depleted() + record.sum_residual();
    if (footprint <= 0.0) {
        throw MetricError("eta' undefined: zero energy footprint");
    }
    return static_cast<double>(record.resources_collected) / footprint;
}

namespace {

struct Moments {
    std::vector<double> values;

    double mean() const {
        return std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
    }

    // Sample standard deviation; 0 for a single observation.
    double stddev() const {
        if (values.size() < 2) return 0.0;
        const double m = mean();
        double acc = 0.0;
        for (double v : values) acc += (v - m) * (v - m);
        return std::sqrt(acc / static_cast<double>(values.size() - 1));
    }
};

} // namespace

std::vector<GroupSummary> aggregate(const std::vector<RunRecord>& records) {
    if (records.empty()) {
        throw MetricError("aggregate over an empty record set");
    }
    std::map<std::pair<std::string, int>, std::pair<Moments, Moments>> groups;
    for (const RunRecord& record : records) {
        auto& [etas, eta_primes] = groups[{record.strategy, record.swarm_size}];
        etas.values.push_back(eta(record));
        eta_primes.values.push_back(eta_prime(record));
    }
    std::vector<GroupSummary> out;
    out.reserve(groups.size());
    for (const auto& [key, moments] : groups) {
        const auto& [etas, eta_primes] = moments;
        GroupSummary s;
        s.strategy = key.first;
        s.swarm_size = key.second;
        s.count = static_cast<int>(etas.values.size());
        s.mean_eta = etas.mean();
        s.std_eta = etas.stddev();
        s.mean_eta_prime = eta_primes.mean();
        s.std_eta_prime = eta_primes.stddev();
        out.push_back(std::move(s));
    }
    return out;
}

void write_run_csv_header(std::ostream& out) {
    out << "strategy,K,seed,r,ticks,sum_Ed,sum_Eb,eta,eta_prime,termination_reason\n";
}

void write_run_csv_row(std::ostream& out, const RunRecord& record) {
    out << record.strategy << ',' << record.swarm_size << ',' << record.seed << ','
        << record.resources_collected << ',' << record.total_ticks << ','
        << format_double(record.sum_depleted()) << ',' << format_double(record.sum_residual())
        << ',' << format_double(eta(record)) << ',' << format_double(eta_prime(record)) << ','
        << record.termination_reason << '\n';
}

void write_summary_csv_header(std::ostream& out) {
    out << "strategy,K,count,mean_eta,std_eta,mean_eta_prime,std_eta_prime\n";
}

void write_summary_csv_row(std::ostream& out, const GroupSummary& s) {
    out << s.strategy << ',' << s.swarm_size << ',' << s.count << ','
        << format_double(s.mean_eta) << ',' << format_double(s.std_eta) << ','
        << format_double(s.mean_eta_prime) << ',' << format_double(s.std_eta_prime) << '\n';
}

std::string runs_to_csv(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    write_run_csv_header(out);
    for (const RunRecord& record : records) write_run_csv_row(out, record);
    return out.str();
}

std::string summaries_to_csv(const std::vector<GroupSummary>& summaries) {
    std::ostringstream out;
    write_summary_csv_header(out);
    for (const GroupSummary& s : summaries) write_summary_csv_row(out, s);
    return out.str();
}

std::string summary_table(const std::vector<GroupSummary>& summaries) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-14s %6s %6s %12s %12s %14s %14s\n", "strategy", "K",
                  "runs", "mean_eta", "std_eta", "mean_eta'", "std_eta'");
    out << line;
    for (const GroupSummary& s : summaries) {
        std::snprintf(line, sizeof(line), "%-14s %6d %6d %12.6f %12.6f %14.6f %14.6f\n",
                      s.strategy.c_str(), s.swarm_size, s.count, s.mean_eta, s.std_eta,
                      s.mean_eta_prime, s.std_eta_prime);
        out << line;
    }
    return out.str();
}

} // namespace swarmforage
