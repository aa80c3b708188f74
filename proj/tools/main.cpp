#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swarmforage/config.hpp"
#include "swarmforage/errors.hpp"
#include "swarmforage/experiment.hpp"
#include "swarmforage/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::string strategy_enumeration() {
    std::ostringstream out;
    const auto& ids = swarmforage::all_strategies();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << " | ";
        out << swarmforage::to_string(ids[i]);
    }
    return out.str();
}

struct RunArgs {
    std::string strategy;
    int swarm_size = 8;
    std::uint64_t seed = 1;
    std::string config = "default";
    std::string out;
    std::string log_events;
};

int do_run(const RunArgs& args) {
    const auto id = swarmforage::parse_strategy(args.strategy);
    if (!id) {
        std::cerr << "unknown strategy '" << args.strategy << "'\nvalid strategies: "
                  << strategy_enumeration() << "\n";
        return kExitConfig;
    }
    swarmforage::ExperimentConfig cfg = swarmforage::load_config(args.config);
    cfg.strategies = {*id};
    cfg.swarm_sizes = {args.swarm_size};
    cfg.replicates = 1;
    swarmforage::validate(cfg);

    swarmforage::EventLog log;
    swarmforage::EventLog* log_ptr = args.log_events.empty() ? nullptr : &log;
    const swarmforage::RunRecord record =
        swarmforage::run_single(cfg.sim, *id, args.swarm_size, args.seed, log_ptr);

    std::ostringstream csv;
    swarmforage::write_run_csv_header(csv);
    swarmforage::write_run_csv_row(csv, record);
    std::cout << csv.str();

    if (!args.out.empty()) {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + args.out + "'");
        out << csv.str();
    }
    if (log_ptr) {
        std::ofstream out(args.log_events, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + args.log_events + "'");
        log.write_tsv(out);
    }
    return kExitOk;
}

struct SweepArgs {
    std::string config = "default";
    std::string out;
    bool full = false;
};

int do_sweep(const SweepArgs& args) {
    swarmforage::ExperimentConfig cfg = swarmforage::load_config(args.config);
    if (!args.out.empty()) cfg.out = args.out;
    if (args.full) cfg.swarm_sizes = swarmforage::full_sweep_sizes();
    swarmforage::validate(cfg);

    const auto records = swarmforage::run_sweep(cfg);
    const std::string table = swarmforage::write_sweep_outputs(cfg, records);
    std::cout << table << "\nwrote " << records.size() << " runs to " << cfg.out
              << " and aggregates to " << swarmforage::summary_path(cfg.out) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"swarmforage: energy-aware swarm foraging simulator"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run a single simulation");
    run->add_option("--strategy", run_args.strategy,
                    "Strategy (" + strategy_enumeration() + ")")
        ->required();
    run->add_option("--swarm-size", run_args.swarm_size, "Number of robots");
    run->add_option("--seed", run_args.seed, "Run seed");
    run->add_option("--config", run_args.config, "Config file path or 'default'");
    run->add_option("--out", run_args.out, "Also write the CSV row here");
    run->add_option("--log-events", run_args.log_events, "Write the TSV event log here");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Run the strategy/size/replicate sweep");
    sweep->add_option("--config", sweep_args.config, "Config file path or 'default'");
    sweep->add_option("--out", sweep_args.out, "Per-run CSV path (overrides config)");
    sweep->add_flag("--full", sweep_args.full, "Sweep the full size ladder 2..256");

    std::string validate_config = "default";
    bool emit_default = false;
    CLI::App* validate = app.add_subcommand("validate", "Check a config file");
    validate->add_option("--config", validate_config, "Config file path or 'default'");
    validate->add_flag("--emit-default", emit_default,
                       "Print the default config file and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) return do_run(run_args);
        if (sweep->parsed()) return do_sweep(sweep_args);
        if (validate->parsed()) {
            if (emit_default) {
                std::cout << swarmforage::default_config_text();
                return kExitOk;
            }
            swarmforage::validate(swarmforage::load_config(validate_config));
            std::cout << "config OK\n";
            return kExitOk;
        }
    } catch (const swarmforage::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
