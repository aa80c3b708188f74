#pragma once

namespace swarmforage {

/// Per-robot battery bookkeeping. All quantities are normalized energy
/// units: 1.0 is the full physical capacity of the cell.
///
/// The charge is split into two adaptive allocations: `capacity` is the
/// budget for searching and collecting in one round, `lower` is the reserve
/// kept for the trip home. `upper` is the derived charge target,
/// min(1, lower + capacity).
struct Battery {
    double level = 0.0;
    double lower = 0.0;
    double capacity = 0.0;
    double upper = 0.0;
};

/// Builds a battery with the given allocation, fully charged to its target.
Battery make_battery(double lower, double capacity);

/// Drain rates per tick plus the one-off pickup cost. Retreating is dearer
/// than searching: the robot drives straight under load instead of drifting.
struct EnergyRates {
    double alpha_search = 0.001;
    double alpha_retreat = 0.0015;
    double collection_cost = 0.01;
};

/// Weights of the three per-round adaptation signals: leftover budget,
/// round failure, robot encounters. The *_c set drives the capacity update,
/// the plain set drives the retreat-threshold update.
struct AdaptationWeights {
    double w1 = 0.3;
    double w2 = 0.1;
    double w3 = 0.005;
    double w1c = 0.2;
    double w2c = 0.1;
    double w3c = 0.005;
};

/// One foraging round as accounted at nest arrival.
struct RoundOutcome {
    bool success = false;      // brought a resource home
    int encounters = 0;        // robot contacts along the way
    double energy_spent = 0.0; // total drained since departure (magnitude)
    long t_search = 0;         // ticks spent searching
    long t_retreat = 0;        // ticks spent retreating
};

/// Signed battery change over a round: always <= 0.
double round_energy_delta(const EnergyRates& rates, const RoundOutcome& outcome);

/// New search budget after a round. Quick successful rounds shrink it by the
/// unused fraction; failures and crowding grow it. Clamped at 0 from below;
/// the physical-capacity cap is applied later in reallocate_thresholds.
double update_capacity(const Battery& battery, const RoundOutcome& outcome,
                       const AdaptationWeights& w);

/// New retreat reserve after a round, clamped to [0, 1]. Note the leftover
/// term is applied on failures as well, unlike the capacity update.
double update_lower_threshold(const Battery& battery, const RoundOutcome& outcome,
                              const AdaptationWeights& w);

/// Recomputes the charge target from lower + capacity and restores the
/// battery invariants (0 <= lower <= upper <= 1).
void reallocate_thresholds(Battery& battery);

/// True once the allocations cover the whole physical battery, i.e. the
/// charge target is saturated at full. Entering this regime is what trips
/// the endgame policies.
bool is_eee(const Battery& battery);

} // namespace swarmforage
