#include "shopflow/params.hpp"

#include <cmath>
#include <stdexcept>

namespace shopflow {

void require_positive(const ModelParams& p) {
    if (!(p.money_per_customer > 0.0))
        throw std::invalid_argument("money_per_customer must be positive");
    if (!(p.capacity_coeff > 0.0))
        throw std::invalid_argument("capacity_coeff must be positive");
    if (!(p.base_shop_time_h > 0.0))
        throw std::invalid_argument("base_shop_time_h must be positive");
    if (!(p.entry_interval_s > 0.0))
        throw std::invalid_argument("entry_interval_s must be positive");
}

ValidationReport validate_params(const ModelParams& p) {
    require_positive(p);
    ValidationReport rep;

    // (A1*3600)/delta so that delta == A1*3600 lands exactly on 1.0.
    const double a1f = p.base_shop_time_h * 3600.0 / p.entry_interval_s;
    rep.a1f_ok = a1f > 1.0;
    if (!rep.a1f_ok)
        rep.messages.push_back("A1*f = " + std::to_string(a1f) +
                               " <= 1: entry interval is not small against the base shopping time");

    const double f = p.flow_per_hour();
    const double lower = p.ca1() / f * std::log(f / p.capacity_coeff + 1.0);
    rep.m_lower_bound_ok = p.money_per_customer > lower;
    if (!rep.m_lower_bound_ok)
        rep.messages.push_back("M = " + std::to_string(p.money_per_customer) +
                               " <= " + std::to_string(lower) +
                               ": first exit may precede the steady entrant stream");

    const double c1 = p.capacity_coeff + 1.0;
    rep.equilibrium_feasible = f <= c1 * c1 / (4.0 * p.ca1());
    if (!rep.equilibrium_feasible)
        rep.messages.push_back("flow " + std::to_string(f) +
                               "/h exceeds the equilibrium bound; occupancy will grow without limit");
    return rep;
}

}  // namespace shopflow
