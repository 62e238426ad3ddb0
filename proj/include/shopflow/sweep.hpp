#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shopflow/params.hpp"
#include "shopflow/simulation.hpp"

namespace shopflow {

// Replication protocol: per entry interval, run seeded attempts until the
// required number of successful (non-freezing) runs, discarding and
// replacing frozen ones while counting every attempt for the freeze rate.
struct SweepSpec {
    std::vector<double> delta_values_s = {28, 30, 31, 32, 33, 34, 35, 37,
                                          40, 42, 45, 47, 50, 55, 60, 65};
    int replicates_required = 100;
    std::uint64_t master_seed = 1;
    double horizon_s = 3600.0;
    int attempt_cap_factor = 20;  // per-delta cap = factor * replicates
    int threads = 0;              // 0: hardware concurrency

    bool run_continuous_model = true;
    bool run_discrete_model = true;
    bool run_simulation = true;

    ModelParams model;     // M, c, A1 (delta comes from delta_values_s)
    StoreLayout layout;
    SimConfig sim;         // entry_interval_s overridden per delta

    void validate() const;
};

struct DeltaResult {
    double delta_s = 0.0;
    int attempts = 0;
    int successes = 0;
    int failures = 0;
    bool saturated_freezing = false;  // attempt cap hit before enough successes
    double freeze_rate = 0.0;

    std::vector<double> mean_occupancy;   // per tick, over successes
    std::vector<double> mean_spend_rate;  // per tick, over successes
    double mean_completions = 0.0;        // at horizon
    double mean_shop_time_s = 0.0;        // completed customers only
    double mean_tail_occupancy = 0.0;     // final 600 s
    double mean_tail_shop_time_s = 0.0;   // completions in the final third

    // analytic layers at the same delta
    std::optional<double> analytic_occupancy;    // n = f*A when feasible
    std::optional<double> analytic_shop_time_s;  // A
    std::optional<std::int64_t> discrete_steady_occupancy;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<DeltaResult> per_delta;
};

SweepResult run_sweep(const SweepSpec& spec);

struct ComparisonRow {
    double delta_s = 0.0;
    std::optional<double> analytic_occupancy;
    std::optional<double> analytic_shop_time_s;
    std::optional<std::int64_t> discrete_steady_occupancy;
    std::optional<double> sim_tail_occupancy;
    std::optional<double> littles_residual;  // |n - f*A_bar| / n for the simulation
    std::string analytic_class;   // "equilibrium" / "unbounded"
    std::string discrete_class;   // "equilibrium" / "unbounded"
    std::string sim_class;        // "steady" / "growing" / "freezing" / "missing"
};

std::vector<ComparisonRow> compare_models(const SweepResult& sweep);

}  // namespace shopflow
