#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace shopflow {

enum class Quadrant : int {
    receding = 0,       // other moving away (or standing still)
    crossing_left = 1,  // other crossing toward the actor's left
    crossing_right = 2,
    approaching = 3,    // head-on
};

enum class AvoidAction : int { step_right = 0, step_left = 1, back = 2, wait = 3 };

// Row-stochastic 4x4: P(action | other's quadrant). The published figure for
// these probabilities is not legible, so the defaults are invented and
// tunable; they are what the shipped calibration uses.
struct AvoidanceTable {
    std::array<std::array<double, 4>, 4> rows{{
        {0.35, 0.35, 0.10, 0.20},  // receding
        {0.55, 0.10, 0.20, 0.15},  // crossing left
        {0.10, 0.55, 0.20, 0.15},  // crossing right
        {0.35, 0.35, 0.25, 0.05},  // approaching
    }};

    const std::array<double, 4>& row(Quadrant q) const { return rows[int(q)]; }
    void validate() const;  // rows sum to 1 within 1e-12, entries nonnegative
};

struct SimConfig {
    double walking_speed = 0.3;       // m/s
    double dwell_time_s = 15.0;       // per shopping point
    double social_distance = 2.0;     // m, hard constraint
    double list_length_mean = 15.0;
    double list_length_variance = 2.0;
    double entry_interval_s = 42.0;
    AvoidanceTable avoidance;
    double backstep_decay = 0.5;  // P(s) ~ decay^s over feasible depths
    int max_backstep = 10;
    double freeze_stationary_s = 200.0;
    // Admission stays deferred while the entrance is blocked; freezing is
    // declared when the deferral exceeds this grace (default: one entry
    // interval).
    std::optional<double> entrance_block_grace_s;
    double horizon_s = 3600.0;
    double tick_s = 1.0;
    double item_price = 0.148 / 15.0;  // M / mean list length
    std::uint64_t rng_seed = 1;

    bool naive_collisions = false;     // all-pairs checking (oracle mode)
    bool literal_risk_formula = false; // keep the printed risk-time form

    double grace_s() const {
        return entrance_block_grace_s ? *entrance_block_grace_s : entry_interval_s;
    }
    void validate() const;  // throws std::invalid_argument
};

}  // namespace shopflow
