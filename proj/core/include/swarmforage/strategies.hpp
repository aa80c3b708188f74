#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "swarmforage/battery.hpp"
#include "swarmforage/rng.hpp"

namespace swarmforage {

/// What a policy tells the robot to do once its recharge delay has run out.
struct ChargeDirective {
    double target_level = 1.0; // charge to this level before departing
    int extra_nest_delay = 0;  // additional ticks to sit out before departing
    bool park = false;         // retire in the nest for the rest of the run
};

enum class EeeVariant { Well, Ill, Null };

/// Endgame bookkeeping. `triggered` latches the first time the thresholds
/// are seen covering the full battery and never resets.
struct EeeState {
    bool triggered = false;
    int rounds_since_trigger = 0;
    int current_extra_delay = 0;
};

struct LabellaParams {
    double p_min = 0.0015;
    double p_max = 0.05;
    double p_init = 0.033;
    double delta = 0.005;
};

/// Departure probability, consulted once per tick while charged in the nest.
struct LabellaState {
    double p = 0.033;
};

/// Liu-style search-time budget. Defaults are not from the original
/// experiments (those constants are unpublished); all are configurable.
struct LiuParams {
    long t_init = 200;
    long step_up = 20;
    long step_down = 10;
    long t_min = 50;
    long t_max = 1000;
};

struct LiuState {
    long budget = 200;
};

LabellaState labella_update(LabellaState state, bool success, const LabellaParams& params);
LiuState liu_update(LiuState state, bool success, const LiuParams& params);

/// One round-end step of the adaptive battery method, including the endgame
/// handling for the given variant. Mutates the battery thresholds and the
/// EEE latch.
ChargeDirective adaptive_on_round_end(Battery& battery, const RoundOutcome& outcome,
                                      EeeState& eee, EeeVariant variant,
                                      const AdaptationWeights& weights, int tau);

/// Per-robot energy/departure policy. One instance per robot; all state a
/// policy keeps is private to that robot.
class EnergyPolicy {
public:
    virtual ~EnergyPolicy() = default;

    /// Runs once per round, after the nest delay expires. May adapt the
    /// battery thresholds; returns the recharge directive.
    virtual ChargeDirective on_round_end(Battery& battery, const RoundOutcome& outcome) = 0;

    /// Consulted every tick the robot sits charged in the nest.
    virtual bool may_depart(Rng&) { return true; }

    /// Extra retreat trigger, consulted on every searching tick.
    virtual bool wants_retreat(const RoundOutcome&) const { return false; }

    /// Whether this robot has entered the endgame (used by run stop rules).
    virtual bool eee_triggered() const { return false; }

    /// Policies that pick their own charge target cannot be used as the
    /// base of a composite.
    virtual bool battery_targeting() const { return true; }
};

enum class StrategyId {
    Naive,
    AdaptiveWell,
    AdaptiveIll,
    AdaptiveNull,
    Labella,
    Liu,
    LabellaNull,
    LiuNull,
};

/// All strategies, in the order used by docs and default sweeps.
const std::vector<StrategyId>& all_strategies();
std::string_view to_string(StrategyId id);
std::optional<StrategyId> parse_strategy(std::string_view name);

/// Knobs shared by the policy implementations.
struct StrategyConfig {
    AdaptationWeights weights;
    double init_lower = 0.3;
    double init_capacity = 0.5;
    int eee_tau = 10;
    LabellaParams labella;
    LiuParams liu;
};

/// Fresh per-robot policy instance.
std::unique_ptr<EnergyPolicy> make_policy(StrategyId id, const StrategyConfig& cfg);

/// Wraps a departure/search-time policy with the adaptive battery targeting
/// and Null endgame. Throws ConfigError if the base already targets the
/// battery itself.
std::unique_ptr<EnergyPolicy> compose(std::unique_ptr<EnergyPolicy> base,
                                      const StrategyConfig& cfg);

/// Starting battery for a robot running the given strategy. Adaptive
/// strategies start from the configured split; fixed strategies keep the
/// same reserve but charge to full.
Battery initial_battery(StrategyId id, const StrategyConfig& cfg);

/// How the run may stop early for this strategy (see Table-driven stop
/// rules in the world module).
enum class EeeStopRule { None, AllParked, NoneForaging };
EeeStopRule eee_stop_rule(StrategyId id);

} // namespace swarmforage
