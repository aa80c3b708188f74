#include "swarmforage/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "swarmforage/errors.hpp"
#include "swarmforage/events.hpp"

namespace swarmforage {

std::vector<int> full_sweep_sizes() { return {2, 4, 8, 16, 32, 64, 128, 256}; }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double to_double(std::string_view key, std::string_view value) {
    const std::string buf(value);
    char* end = nullptr;
    const double parsed = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty() || !std::isfinite(parsed)) {
        throw ConfigError(std::string(key), "expected a finite number, got '" + buf + "'");
    }
    return parsed;
}

long to_long(std::string_view key, std::string_view value) {
    long parsed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key),
                          "expected an integer, got '" + std::string(value) + "'");
    }
    return parsed;
}

std::uint64_t to_u64(std::string_view key, std::string_view value) {
    std::uint64_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key),
                          "expected an unsigned integer, got '" + std::string(value) + "'");
    }
    return parsed;
}

std::vector<std::string_view> split_list(std::string_view value) {
    std::vector<std::string_view> items;
    while (!value.empty()) {
        const std::size_t comma = value.find(',');
        items.push_back(trim(value.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        value.remove_prefix(comma + 1);
    }
    return items;
}

void apply(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
    SimConfig& sim = cfg.sim;
    if (key == "strategies") {
        cfg.strategies.clear();
        for (std::string_view item : split_list(value)) {
            const auto id = parse_strategy(item);
            if (!id) {
                throw ConfigError("strategies", "unknown strategy '" + std::string(item) + "'");
            }
            cfg.strategies.push_back(*id);
        }
    } else if (key == "sizes") {
        cfg.swarm_sizes.clear();
        for (std::string_view item : split_list(value)) {
            cfg.swarm_sizes.push_back(static_cast<int>(to_long(key, item)));
        }
    } else if (key == "replicates") {
        cfg.replicates = static_cast<int>(to_long(key, value));
    } else if (key == "seed") {
        cfg.master_seed = to_u64(key, value);
    } else if (key == "workers") {
        cfg.workers = static_cast<int>(to_long(key, value));
    } else if (key == "out") {
        cfg.out = std::string(value);
    } else if (key == "tick_limit") {
        sim.tick_limit = to_long(key, value);
    } else if (key == "arena.width") {
        sim.arena.width = to_double(key, value);
    } else if (key == "arena.height") {
        sim.arena.height = to_double(key, value);
    } else if (key == "arena.nest_width") {
        sim.arena.nest_width = to_double(key, value);
    } else if (key == "arena.nest_height") {
        sim.arena.nest_height = to_double(key, value);
    } else if (key == "arena.speed") {
        sim.arena.robot_speed = to_double(key, value);
    } else if (key == "arena.sensing_radius") {
        sim.arena.sensing_radius = to_double(key, value);
    } else if (key == "arena.collision_radius") {
        sim.arena.collision_radius = to_double(key, value);
    } else if (key == "arena.turn_max") {
        sim.arena.turn_max = to_double(key, value);
    } else if (key == "rates.alpha_search") {
        sim.fsm.rates.alpha_search = to_double(key, value);
    } else if (key == "rates.alpha_retreat") {
        sim.fsm.rates.alpha_retreat = to_double(key, value);
    } else if (key == "rates.collection_cost") {
        sim.fsm.rates.collection_cost = to_double(key, value);
    } else if (key == "battery.init_lower") {
        sim.strategy.init_lower = to_double(key, value);
    } else if (key == "battery.init_capacity") {
        sim.strategy.init_capacity = to_double(key, value);
    } else if (key == "weights.w1") {
        sim.strategy.weights.w1 = to_double(key, value);
    } else if (key == "weights.w2") {
        sim.strategy.weights.w2 = to_double(key, value);
    } else if (key == "weights.w3") {
        sim.strategy.weights.w3 = to_double(key, value);
    } else if (key == "weights.w1c") {
        sim.strategy.weights.w1c = to_double(key, value);
    } else if (key == "weights.w2c") {
        sim.strategy.weights.w2c = to_double(key, value);
    } else if (key == "weights.w3c") {
        sim.strategy.weights.w3c = to_double(key, value);
    } else if (key == "eee.tau") {
        sim.strategy.eee_tau = static_cast<int>(to_long(key, value));
    } else if (key == "nest.delay") {
        sim.fsm.nest_delay = static_cast<int>(to_long(key, value));
    } else if (key == "collection.success") {
        sim.fsm.collection_success = to_double(key, value);
    } else if (key == "resources.density") {
        sim.resources.density = static_cast<int>(to_long(key, value));
    } else if (key == "resources.respawn_until") {
        sim.resources.respawn_until = static_cast<int>(to_long(key, value));
    } else if (key == "resources.final_batch") {
        sim.resources.final_batch = static_cast<int>(to_long(key, value));
    } else if (key == "labella.p_min") {
        sim.strategy.labella.p_min = to_double(key, value);
    } else if (key == "labella.p_max") {
        sim.strategy.labella.p_max = to_double(key, value);
    } else if (key == "labella.p_init") {
        sim.strategy.labella.p_init = to_double(key, value);
    } else if (key == "labella.delta") {
        sim.strategy.labella.delta = to_double(key, value);
    } else if (key == "liu.t_init") {
        sim.strategy.liu.t_init = to_long(key, value);
    } else if (key == "liu.step_up") {
        sim.strategy.liu.step_up = to_long(key, value);
    } else if (key == "liu.step_down") {
        sim.strategy.liu.step_down = to_long(key, value);
    } else if (key == "liu.t_min") {
        sim.strategy.liu.t_min = to_long(key, value);
    } else if (key == "liu.t_max") {
        sim.strategy.liu.t_max = to_long(key, value);
    } else {
        throw ConfigError(std::string(key), "unknown config key");
    }
}

} // namespace

ExperimentConfig parse_config_text(std::string_view text) {
    ExperimentConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        line_no += 1;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no),
                              "expected 'key = value', got '" + std::string(line) + "'");
        }
        apply(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    if (path.empty() || path == "default") {
        return ExperimentConfig{};
    }
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

namespace {

void require(bool ok, const char* field, const std::string& message) {
    if (!ok) throw ConfigError(field, message);
}

} // namespace

void validate(const ExperimentConfig& cfg) {
    const SimConfig& sim = cfg.sim;
    const ArenaConfig& arena = sim.arena;

    require(!cfg.strategies.empty(), "strategies", "must list at least one strategy");
    require(!cfg.swarm_sizes.empty(), "sizes", "must list at least one swarm size");
    for (int k : cfg.swarm_sizes) require(k >= 1, "sizes", "swarm sizes must be positive");
    require(cfg.replicates >= 1, "replicates", "must be at least 1");
    require(cfg.workers >= 0, "workers", "must be non-negative");
    require(!cfg.out.empty(), "out", "output path must not be empty");
    require(sim.tick_limit >= 1, "tick_limit", "must be at least 1");

    require(arena.width > 0 && arena.height > 0, "arena", "arena dimensions must be positive");
    require(arena.nest_width > 0 && arena.nest_height > 0, "arena.nest_width",
            "nest dimensions must be positive");
    require(arena.nest_width < arena.width && arena.nest_height < arena.height,
            "arena.nest_width", "nest must be strictly inside the arena");
    require(arena.robot_speed > 0, "arena.speed", "must be positive");
    require(arena.sensing_radius > 0, "arena.sensing_radius", "must be positive");
    require(arena.collision_radius > 0, "arena.collision_radius", "must be positive");
    require(arena.turn_max >= 0, "arena.turn_max", "must be non-negative");

    const EnergyRates& rates = sim.fsm.rates;
    require(rates.alpha_search > 0, "rates.alpha_search", "must be strictly positive");
    require(rates.alpha_retreat > 0, "rates.alpha_retreat", "must be strictly positive");
    require(rates.collection_cost >= 0, "rates.collection_cost", "must be non-negative");

    require(sim.fsm.nest_delay >= 0, "nest.delay", "must be non-negative");
    require(sim.fsm.collection_success >= 0 && sim.fsm.collection_success <= 1,
            "collection.success", "must be a probability in [0, 1]");

    const StrategyConfig& strat = sim.strategy;
    require(strat.init_lower >= 0 && strat.init_lower <= 1, "battery.init_lower",
            "must lie in [0, 1]");
    require(strat.init_capacity >= 0, "battery.init_capacity", "must be non-negative");
    const AdaptationWeights& w = strat.weights;
    for (double value : {w.w1, w.w2, w.w3, w.w1c, w.w2c, w.w3c}) {
        require(value >= 0 && std::isfinite(value), "weights", "must be finite and >= 0");
    }
    require(strat.eee_tau >= 0, "eee.tau", "must be non-negative");

    require(sim.resources.density >= 1, "resources.density", "must be at least 1");
    require(sim.resources.respawn_until >= 0, "resources.respawn_until",
            "must be non-negative");
    require(sim.resources.final_batch >= 0, "resources.final_batch", "must be non-negative");

    const LabellaParams& lab = strat.labella;
    require(lab.p_min >= 0 && lab.p_max <= 1 && lab.p_min <= lab.p_max, "labella.p_min",
            "bounds must satisfy 0 <= p_min <= p_max <= 1");
    require(lab.p_init >= lab.p_min && lab.p_init <= lab.p_max, "labella.p_init",
            "must lie within [p_min, p_max]");
    require(lab.delta >= 0, "labella.delta", "must be non-negative");

    const LiuParams& liu = strat.liu;
    require(liu.t_min >= 1, "liu.t_min", "must be at least 1");
    require(liu.t_min <= liu.t_max, "liu.t_min", "bounds must satisfy t_min <= t_max");
    require(liu.t_init >= liu.t_min && liu.t_init <= liu.t_max, "liu.t_init",
            "must lie within [t_min, t_max]");
    require(liu.step_up >= 0 && liu.step_down >= 0, "liu.step_up", "steps must be >= 0");
}

std::string default_config_text() {
    const ExperimentConfig d;
    const SimConfig& sim = d.sim;
    std::ostringstream out;
    out << "# swarmforage experiment configuration (defaults)\n"
        << "# grammar: one 'key = value' per line; '#' starts a comment;\n"
        << "# lists are comma-separated.\n\n";

    out << "strategies = ";
    for (std::size_t i = 0; i < d.strategies.size(); ++i) {
        if (i) out << ", ";
        out << to_string(d.strategies[i]);
    }
    out << "\nsizes = ";
    for (std::size_t i = 0; i < d.swarm_sizes.size(); ++i) {
        if (i) out << ", ";
        out << d.swarm_sizes[i];
    }
    out << "\nreplicates = " << d.replicates << "\nseed = " << d.master_seed
        << "\nworkers = " << d.workers << "        # 0 = all hardware threads\nout = "
        << d.out << "\ntick_limit = " << sim.tick_limit << "\n\n";

    const ArenaConfig& a = sim.arena;
    out << "arena.width = " << format_double(a.width) << "\narena.height = "
        << format_double(a.height) << "\narena.nest_width = " << format_double(a.nest_width)
        << "\narena.nest_height = " << format_double(a.nest_height) << "\narena.speed = "
        << format_double(a.robot_speed) << "\narena.sensing_radius = "
        << format_double(a.sensing_radius) << "\narena.collision_radius = "
        << format_double(a.collision_radius) << "\narena.turn_max = "
        << format_double(a.turn_max) << "\n\n";

    const EnergyRates& r = sim.fsm.rates;
    out << "rates.alpha_search = " << format_double(r.alpha_search)
        << "\nrates.alpha_retreat = " << format_double(r.alpha_retreat)
        << "\nrates.collection_cost = " << format_double(r.collection_cost) << "\n\n";

    const StrategyConfig& s = sim.strategy;
    out << "battery.init_lower = " << format_double(s.init_lower)
        << "\nbattery.init_capacity = " << format_double(s.init_capacity) << "\n\n"
        << "weights.w1 = " << format_double(s.weights.w1) << "\nweights.w2 = "
        << format_double(s.weights.w2) << "\nweights.w3 = " << format_double(s.weights.w3)
        << "\nweights.w1c = " << format_double(s.weights.w1c) << "\nweights.w2c = "
        << format_double(s.weights.w2c) << "\nweights.w3c = " << format_double(s.weights.w3c)
        << "\n\n";

    out << "eee.tau = " << s.eee_tau << "\nnest.delay = " << sim.fsm.nest_delay
        << "\ncollection.success = " << format_double(sim.fsm.collection_success) << "\n\n";

    out << "resources.density = " << sim.resources.density << "\nresources.respawn_until = "
        << sim.resources.respawn_until << "\nresources.final_batch = "
        << sim.resources.final_batch << "\n\n";

    out << "labella.p_min = " << format_double(s.labella.p_min) << "\nlabella.p_max = "
        << format_double(s.labella.p_max) << "\nlabella.p_init = "
        << format_double(s.labella.p_init) << "\nlabella.delta = "
        << format_double(s.labella.delta) << "\n\n";

    // Liu budget constants are project defaults, not published values.
    out << "liu.t_init = " << s.liu.t_init << "\nliu.step_up = " << s.liu.step_up
        << "\nliu.step_down = " << s.liu.step_down << "\nliu.t_min = " << s.liu.t_min
        << "\nliu.t_max = " << s.liu.t_max << "\n";

    return out.str();
}

} // namespace swarmforage
