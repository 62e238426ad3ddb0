#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shopflow/params.hpp"
#include "shopflow/series.hpp"

namespace shopflow {

// Integer-exit rounding. Each exit index is chosen by accumulating rate
// terms until the partial sum reaches its target; the final term is kept
// when the target sits at least keep_threshold of the way through it
// (normalized to [0,1]), and dropped otherwise. An exact hit always keeps.
//
// The flip point is deliberately not 0.5: thresholds in (0.55, 0.58) are
// the ones that put the bifurcation between 41 and 42 seconds for the
// default constants, with steady occupancies 37 (42 s) and 18 (60 s).
// 0.565 is the center of that window.
struct RoundingRule {
    double keep_threshold = 0.565;
};

struct DiscreteStep {
    std::int64_t exit_index = 0;
    double residual = 0.0;  // chosen sum minus target
    bool kept_final_term = false;
    bool clamped = false;  // forced to J_{r-1}+1 to keep J strictly increasing
};

// Step-function counterpart of ContinuousTrajectory: integer J_r, departed
// counts K_r, occupancy-at-entry L_r = r - K_r, and the gap
// g(r) = J_r - (2r - (K_{r-1}+1)) against the unit-gap steady profile.
struct DiscreteTrajectory {
    ModelParams params;
    RoundingRule rule;
    std::vector<std::int64_t> exit_index;        // J_r, [0] unused
    std::vector<std::int64_t> departed;          // K_r
    std::vector<std::int64_t> occupancy_entry;   // L_r
    std::vector<std::int64_t> eq_gap;            // g(r), valid from r = 2
    std::vector<double> residual;                // per-step rounding residual
    int customers = 0;
    int clamped_steps = 0;

    // First r with J_r - J_{r-1} = 1 (unit gaps persist from here on).
    std::optional<int> equilibrium_index;
    // First r from which J_r = 2r - (K_{r-1}+1) holds through the horizon;
    // this lags equilibrium_index until the pre-lock customers have left.
    std::optional<int> identity_index;
    std::optional<std::int64_t> steady_occupancy;  // J_r - r at the lock

    double entry_time_s(int r) const { return (r - 1) * params.entry_interval_s; }
    double exit_time_s(int r) const {
        return double(exit_index[r] - 1) * params.entry_interval_s;
    }
    double shop_time_s(int r) const {
        return params.entry_interval_s * double(exit_index[r] - r);
    }

    int next_exit = 1;  // departure cursor
};

// Smallest-odds integer first exit; Mf < 1 degenerates to J1 = 2 (the
// entrant cannot exit before the next arrival) and flags the step clamped.
std::int64_t first_exit_discrete(const ModelParams& params, const RoundingRule& rule = {},
                                 DiscreteStep* info = nullptr);

// Appends J_r (r == customers+1, r >= 2). Throws on runaway term counts.
std::int64_t step_discrete(DiscreteTrajectory& traj, int r);

DiscreteTrajectory run_discrete(const ModelParams& params, double horizon_s,
                                const RoundingRule& rule = {});
DiscreteTrajectory run_discrete_customers(const ModelParams& params, int n_customers,
                                          const RoundingRule& rule = {});

// First r with a unit gap; also fills identity_index and steady_occupancy.
std::optional<int> detect_equilibrium(DiscreteTrajectory& traj);

struct EquilibriumPrediction {
    bool will_equilibrate = false;
    std::optional<int> r0;  // where the gap series first strictly moves
};

// Trichotomy on g(r): the first strict change decides (decrease ->
// equilibrium at that index, increase -> never); a gap series that never
// moves and sits at zero is already at equilibrium.
EquilibriumPrediction predict_equilibrium(const DiscreteTrajectory& traj);

SeriesBundle extract_series_discrete(const DiscreteTrajectory& traj, double tick_s,
                                     double window_s);

// True when the entry-sampled total spending rate never drops except at
// departure events, while per-customer rates never rise except at those
// same events, up to the equilibrium index. Requires detected equilibrium.
bool total_spend_monotonic(const DiscreteTrajectory& traj);

}  // namespace shopflow
