#include "shopflow/equilibrium.hpp"

#include <cmath>

namespace shopflow {

double equilibrium_threshold_s(const ModelParams& p) {
    require_positive(p);
    const double c1 = p.capacity_coeff + 1.0;
    return 3600.0 * 4.0 * p.ca1() / (c1 * c1);
}

EquilibriumSolution solve_equilibrium(const ModelParams& p) {
    require_positive(p);
    EquilibriumSolution sol;
    const double f = p.flow_per_hour();
    const double c1 = p.capacity_coeff + 1.0;
    double disc = c1 * c1 - 4.0 * f * p.ca1();
    if (disc < 0.0 && disc > -1e-12 * c1 * c1) disc = 0.0;  // boundary, fp slack
    if (disc < 0.0) return sol;  // no real root: flow too high for equilibrium

    sol.feasible = true;
    sol.at_boundary = disc <= 1e-9 * c1 * c1;
    sol.shop_time_h = (c1 - std::sqrt(disc)) / (2.0 * f);  // smaller root
    sol.occupancy = f * sol.shop_time_h;
    sol.per_customer_rate = p.money_per_customer / sol.shop_time_h;
    sol.total_rate = f * p.money_per_customer;
    return sol;
}

IntakeOptimum optimal_intake(const ModelParams& p) {
    require_positive(p);
    IntakeOptimum opt;
    const double c = p.capacity_coeff;
    const double c1 = c + 1.0;
    opt.flow_per_hour = c1 * c1 / (4.0 * p.ca1());
    opt.entry_interval_s = 3600.0 / opt.flow_per_hour;
    opt.shop_time_h = 2.0 * p.ca1() / c1;
    opt.occupancy = c1 / 2.0;
    opt.total_rate = opt.flow_per_hour * p.money_per_customer;
    return opt;
}

}  // namespace shopflow
