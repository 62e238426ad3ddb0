#pragma once

#include <string>
#include <vector>

namespace shopflow {

// Macroscopic parameters shared by the analytic layers.
//
// Canonical internal units: shopping times in hours, flow in customers per
// hour, entry interval in seconds. All conversions happen at these accessors;
// nothing downstream re-derives units. M is the total spend per customer
// (M = list length * item price).
struct ModelParams {
    double money_per_customer = 0.148;  // M, currency units
    double capacity_coeff = 70.58;      // c, dimensionless
    double base_shop_time_h = 0.2108;   // A1, hours (empty-store shopping time)
    double entry_interval_s = 42.0;     // delta, seconds

    double flow_per_hour() const { return 3600.0 / entry_interval_s; }
    // M*f and c*A1 as the dimensionless groupings the recurrences work in.
    double mf() const { return money_per_customer * flow_per_hour(); }
    double ca1() const { return capacity_coeff * base_shop_time_h; }
};

// Soft feasibility flags. Unrealistic values never throw here; the sweep
// harness has to cross the bifurcation on purpose.
struct ValidationReport {
    bool a1f_ok = false;               // A1*f > 1
    bool m_lower_bound_ok = false;     // M > (cA1/f) * ln(f/c + 1)
    bool equilibrium_feasible = false; // f <= (c+1)^2 / (4 c A1)
    std::vector<std::string> messages;

    bool all_ok() const { return a1f_ok && m_lower_bound_ok && equilibrium_feasible; }
};

// Throws std::invalid_argument on non-positive M, c, A1 or delta.
void require_positive(const ModelParams& params);

ValidationReport validate_params(const ModelParams& params);

}  // namespace shopflow
