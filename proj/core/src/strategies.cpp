#include "swarmforage/strategies.hpp"

#include <algorithm>

#include "swarmforage/errors.hpp"

namespace swarmforage {

LabellaState labella_update(LabellaState state, bool success, const LabellaParams& params) {
    const double delta = success ? params.delta : -params.delta;
    state.p = std::clamp(state.p + delta, params.p_min, params.p_max);
    return state;
}

LiuState liu_update(LiuState state, bool success, const LiuParams& params) {
    const long delta = success ? -params.step_down : params.step_up;
    state.budget = std::clamp(state.budget + delta, params.t_min, params.t_max);
    return state;
}

ChargeDirective adaptive_on_round_end(Battery& battery, const RoundOutcome& outcome,
                                      EeeState& eee, EeeVariant variant,
                                      const AdaptationWeights& weights, int tau) {
    if (!eee.triggered && is_eee(battery)) {
        eee.triggered = true;
    }

    if (!eee.triggered) {
        // Both updates read the pre-round thresholds.
        const double new_lower = update_lower_threshold(battery, outcome, weights);
        const double new_capacity = update_capacity(battery, outcome, weights);
        battery.lower = new_lower;
        battery.capacity = new_capacity;
        reallocate_thresholds(battery);
        return {battery.upper, 0, false};
    }

    eee.rounds_since_trigger += 1;
    switch (variant) {
    case EeeVariant::Well:
        // Thresholds freeze; the robot just sits out longer each round.
        eee.current_extra_delay += tau;
        return {battery.upper, eee.current_extra_delay, false};
    case EeeVariant::Ill:
        // Keeps re-deciding the retreat reserve while the delay grows.
        battery.lower = update_lower_threshold(battery, outcome, weights);
        reallocate_thresholds(battery);
        eee.current_extra_delay += tau;
        return {battery.upper, eee.current_extra_delay, false};
    case EeeVariant::Null:
        // Retire as-is: no refill, so the run ends with no fresh charge
        // stranded in a parked robot.
        return {battery.level, 0, true};
    }
    return {battery.upper, 0, false};
}

namespace {

class NaivePolicy final : public EnergyPolicy {
public:
    ChargeDirective on_round_end(Battery& battery, const RoundOutcome&) override {
        return {battery.upper, 0, false};
    }
};

class AdaptivePolicy final : public EnergyPolicy {
public:
    AdaptivePolicy(EeeVariant variant, const StrategyConfig& cfg)
        : variant_(variant), weights_(cfg.weights), tau_(cfg.eee_tau) {}

    ChargeDirective on_round_end(Battery& battery, const RoundOutcome& outcome) override {
        return adaptive_on_round_end(battery, outcome, eee_, variant_, weights_, tau_);
    }

    bool eee_triggered() const override { return eee_.triggered; }

private:
    EeeVariant variant_;
    AdaptationWeights weights_;
    int tau_;
    EeeState eee_;
};

class LabellaPolicy final : public EnergyPolicy {
public:
    explicit LabellaPolicy(const LabellaParams& params)
        : params_(params), state_{params.p_init} {}

    ChargeDirective on_round_end(Battery& battery, const RoundOutcome& outcome) override {
        state_ = labella_update(state_, outcome.success, params_);
        return {battery.upper, 0, false};
    }

    bool may_depart(Rng& rng) override { return rng.bernoulli(state_.p); }

    bool battery_targeting() const override { return false; }

    double departure_probability() const { return state_.p; }

private:
    LabellaParams params_;
    LabellaState state_;
};

class LiuPolicy final : public EnergyPolicy {
public:
    explicit LiuPolicy(const LiuParams& params) : params_(params), state_{params.t_init} {}

    ChargeDirective on_round_end(Battery& battery, const RoundOutcome& outcome) override {
        state_ = liu_update(state_, outcome.success, params_);
        return {battery.upper, 0, false};
    }

    bool wants_retreat(const RoundOutcome& round) const override {
        return round.t_search >= state_.budget;
    }

    bool battery_targeting() const override { return false; }

    long search_budget() const { return state_.budget; }

private:
    LiuParams params_;
    LiuState state_;
};

/// Base policy's departure/search-time logic plus adaptive battery
/// targeting with the Null endgame.
class CompositePolicy final : public EnergyPolicy {
public:
    CompositePolicy(std::unique_ptr<EnergyPolicy> base, const StrategyConfig& cfg)
        : base_(std::move(base)), adaptive_(EeeVariant::Null, cfg) {}

    ChargeDirective on_round_end(Battery& battery, const RoundOutcome& outcome) override {
        base_->on_round_end(battery, outcome); // base never touches the battery
        return adaptive_.on_round_end(battery, outcome);
    }

    bool may_depart(Rng& rng) override { return base_->may_depart(rng); }

    bool wants_retreat(const RoundOutcome& round) const override {
        return base_->wants_retreat(round);
    }

    bool eee_triggered() const override { return adaptive_.eee_triggered(); }

private:
    std::unique_ptr<EnergyPolicy> base_;
    AdaptivePolicy adaptive_;
};

} // namespace

const std::vector<StrategyId>& all_strategies() {
    static const std::vector<StrategyId> ids = {
        StrategyId::Naive,        StrategyId::AdaptiveWell, StrategyId::AdaptiveIll,
        StrategyId::AdaptiveNull, StrategyId::Labella,      StrategyId::Liu,
        StrategyId::LabellaNull,  StrategyId::LiuNull,
    };
    return ids;
}

std::string_view to_string(StrategyId id) {
    switch (id) {
    case StrategyId::Naive: return "naive";
    case StrategyId::AdaptiveWell: return "adaptive-well";
    case StrategyId::AdaptiveIll: return "adaptive-ill";
    case StrategyId::AdaptiveNull: return "adaptive-null";
    case StrategyId::Labella: return "labella";
    case StrategyId::Liu: return "liu";
    case StrategyId::LabellaNull: return "labella+null";
    case StrategyId::LiuNull: return "liu+null";
    }
    return "?";
}

std::optional<StrategyId> parse_strategy(std::string_view name) {
    for (StrategyId id : all_strategies()) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

std::unique_ptr<EnergyPolicy> compose(std::unique_ptr<EnergyPolicy> base,
                                      const StrategyConfig& cfg) {
    if (base->battery_targeting()) {
        throw ConfigError("strategy", "composite base must not target the battery itself");
    }
    return std::make_unique<CompositePolicy>(std::move(base), cfg);
}

std::unique_ptr<EnergyPolicy> make_policy(StrategyId id, const StrategyConfig& cfg) {
    switch (id) {
    case StrategyId::Naive:
        return std::make_unique<NaivePolicy>();
    case StrategyId::AdaptiveWell:
        return std::make_unique<AdaptivePolicy>(EeeVariant::Well, cfg);
    case StrategyId::AdaptiveIll:
        return std::make_unique<AdaptivePolicy>(EeeVariant::Ill, cfg);
    case StrategyId::AdaptiveNull:
        return std::make_unique<AdaptivePolicy>(EeeVariant::Null, cfg);
    case StrategyId::Labella:
        return std::make_unique<LabellaPolicy>(cfg.labella);
    case StrategyId::Liu:
        return std::make_unique<LiuPolicy>(cfg.liu);
    case StrategyId::LabellaNull:
        return compose(std::make_unique<LabellaPolicy>(cfg.labella), cfg);
    case StrategyId::LiuNull:
        return compose(std::make_unique<LiuPolicy>(cfg.liu), cfg);
    }
    throw ConfigError("strategy", "unknown strategy id");
}

Battery initial_battery(StrategyId id, const StrategyConfig& cfg) {
    switch (id) {
    case StrategyId::AdaptiveWell:
    case StrategyId::AdaptiveIll:
    case StrategyId::AdaptiveNull:
    case StrategyId::LabellaNull:
    case StrategyId::LiuNull:
        return make_battery(cfg.init_lower, cfg.init_capacity);
    default:
        // Fixed reserve, charge to full.
        return make_battery(cfg.init_lower, 1.0 - cfg.init_lower);
    }
}

EeeStopRule eee_stop_rule(StrategyId id) {
    switch (id) {
    case StrategyId::AdaptiveWell:
    case StrategyId::AdaptiveIll:
        return EeeStopRule::NoneForaging;
    case StrategyId::AdaptiveNull:
    case StrategyId::LabellaNull:
    case StrategyId::LiuNull:
        return EeeStopRule::AllParked;
    default:
        return EeeStopRule::None;
    }
}

} // namespace swarmforage
