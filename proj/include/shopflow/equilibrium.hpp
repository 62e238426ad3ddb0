#pragma once

#include "shopflow/params.hpp"

namespace shopflow {

// Closed-form stationary state: occupancy n = f*A (Little's law) with
// shopping time A solving f*A^2 - (c+1)*A + c*A1 = 0. The smaller root is
// the physical branch: it is continuous with the single-customer fixed
// point A = A1 at f = 1/A1 and stays finite as f -> 0.
struct EquilibriumSolution {
    double shop_time_h = 0.0;        // A
    double occupancy = 0.0;          // n = f*A
    double per_customer_rate = 0.0;  // e = M/A, currency per hour
    double total_rate = 0.0;         // E = f*M, currency per hour
    bool feasible = false;
    bool at_boundary = false;
};

// Largest flow (smallest entry interval) still compatible with equilibrium.
struct IntakeOptimum {
    double flow_per_hour = 0.0;     // f* = (c+1)^2 / (4 c A1)
    double entry_interval_s = 0.0;  // delta* = 3600 / f*
    double shop_time_h = 0.0;       // A* = 2 c A1 / (c+1)
    double occupancy = 0.0;         // n* = (c+1) / 2
    double total_rate = 0.0;        // E* = f* * M
};

// delta* in seconds; equilibrium exists iff delta >= delta*.
double equilibrium_threshold_s(const ModelParams& params);

// Infeasible flow returns feasible=false with the time/occupancy fields
// zeroed; it never throws past the positivity check.
EquilibriumSolution solve_equilibrium(const ModelParams& params);

// E = f*M is increasing in f over the feasible range, so the optimum sits
// on the feasibility boundary.
IntakeOptimum optimal_intake(const ModelParams& params);

}  // namespace shopflow
