#pragma once

#include <vector>

#include "shopflow/params.hpp"
#include "shopflow/series.hpp"

namespace shopflow {

// Exact trajectory of real-valued exit indices J_r from an empty store.
//
// Index convention: customer r enters at the r-th entry event, i.e. clock
// time (r-1)*delta, and exits at interval coordinate J_r, i.e. clock time
// (J_r-1)*delta; delta*(J_r - r) is her realized shopping time. Exits are
// FIFO in this model.
struct ContinuousTrajectory {
    ModelParams params;
    std::vector<double> exit_index;  // J_r, [0] unused
    std::vector<int> departed;       // K_r = #{i : J_i <= r}, [0] unused
    int customers = 0;
    int multi_exit_windows = 0;  // entry intervals that contained >1 exit

    double entry_time_s(int r) const { return (r - 1) * params.entry_interval_s; }
    double exit_time_s(int r) const { return (exit_index[r] - 1.0) * params.entry_interval_s; }
    double shop_time_s(int r) const { return params.entry_interval_s * (exit_index[r] - r); }

    // bookkeeping cursor: first customer whose exit is still pending
    int next_exit = 1;
};

// J1 = cA1*(e^{Mf/cA1} - 1) + 1. Throws std::domain_error when Mf/cA1 is
// large enough to overflow the exponential.
double first_exit_continuous(const ModelParams& params);

// Appends J_r (r must equal customers+1, r >= 2) and updates departure
// bookkeeping. Exposed separately so tests can drive single steps.
double step_recurrence(ContinuousTrajectory& traj, int r);

// Runs until the entry time (r-1)*delta exceeds the horizon.
ContinuousTrajectory run_continuous(const ModelParams& params, double horizon_s);

// Series over [0, window_s] at the given tick.
SeriesBundle extract_series_continuous(const ContinuousTrajectory& traj, double tick_s,
                                       double window_s);

}  // namespace shopflow
