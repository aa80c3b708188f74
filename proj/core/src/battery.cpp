#include "swarmforage/battery.hpp"

#include <algorithm>

namespace swarmforage {

Battery make_battery(double lower, double capacity) {
    Battery b;
    b.lower = std::clamp(lower, 0.0, 1.0);
    b.capacity = std::max(0.0, capacity);
    reallocate_thresholds(b);
    b.level = b.upper;
    return b;
}

double round_energy_delta(const EnergyRates& rates, const RoundOutcome& outcome) {
    const double collected = outcome.success ? rates.collection_cost : 0.0;
    return -(rates.alpha_search * static_cast<double>(outcome.t_search) + collected +
             rates.alpha_retreat * static_cast<double>(outcome.t_retreat));
}

// Unused part of the round's search budget. Zero whenever the robot ran its
// allocation dry (the usual case on failures).
static double leftover_budget(const Battery& battery, const RoundOutcome& outcome) {
    return std::max(0.0, battery.capacity - outcome.energy_spent);
}

double update_capacity(const Battery& battery, const RoundOutcome& outcome,
                       const AdaptationWeights& w) {
    const double f = outcome.success ? 1.0 : 0.0;
    const double delta = -f * leftover_budget(battery, outcome) * w.w1c +
                         (1.0 - f) * w.w2c +
                         static_cast<double>(outcome.encounters) * w.w3c;
    return std::max(0.0, battery.capacity + delta);
}

double update_lower_threshold(const Battery& battery, const RoundOutcome& outcome,
                              const AdaptationWeights& w) {
    const double f = outcome.success ? 1.0 : 0.0;
    const double delta = -leftover_budget(battery, outcome) * w.w1 +
                         (1.0 - f) * w.w2 +
                         static_cast<double>(outcome.encounters) * w.w3;
    return std::clamp(battery.lower + delta, 0.0, 1.0);
}

void reallocate_thresholds(Battery& battery) {
    battery.lower = std::clamp(battery.lower, 0.0, 1.0);
    battery.capacity = std::max(0.0, battery.capacity);
    battery.upper = std::min(1.0, battery.lower + battery.capacity);
    battery.lower = std::min(battery.lower, battery.upper);
}

bool is_eee(const Battery& battery) {
    return battery.lower + battery.capacity >= 1.0;
}

} // namespace swarmforage
