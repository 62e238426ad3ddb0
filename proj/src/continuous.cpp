#include "shopflow/continuous.hpp"

#include <cmath>
#include <stdexcept>

namespace shopflow {

double first_exit_continuous(const ModelParams& p) {
    require_positive(p);
    const double expo = p.mf() / p.ca1();
    if (expo > 690.0) throw std::domain_error("Mf/(cA1) too large: first exit overflows");
    return p.ca1() * (std::exp(expo) - 1.0) + 1.0;
}

double step_recurrence(ContinuousTrajectory& traj, int r) {
    if (r < 2 || r != traj.customers + 1)
        throw std::invalid_argument("step_recurrence: r must extend the trajectory");
    const double ca1 = traj.params.ca1();
    auto& J = traj.exit_index;

    // Departures up to entry event r-1; exits are FIFO so a cursor suffices.
    int p = traj.next_exit;
    while (p <= traj.customers && J[p] <= double(r - 1)) ++p;
    traj.next_exit = p;
    const int k_prev = p - 1;

    // The shopping-rate balance between customers r-1 and r telescopes into
    // a product of one factor per occupancy segment of the entry interval
    // (r-1, r): with no interior exit this is the plain recurrence, with one
    // exit J* it is the corrected form, and further exits each contribute
    // their own factor.
    double factor = 1.0;
    double x = double(r - 2 - k_prev);  // other-customers coordinate
    double tau = double(r - 1);
    int q = p;
    int exits_inside = 0;
    while (q <= traj.customers && J[q] < double(r)) {
        const double b = x + (J[q] - tau);
        if (ca1 + x <= 0.0 || ca1 + b <= 0.0)
            throw std::runtime_error("step_recurrence: nonpositive rate denominator");
        factor *= (ca1 + b) / (ca1 + x);
        x = b - 1.0;
        tau = J[q];
        ++q;
        ++exits_inside;
    }
    const double b = x + (double(r) - tau);
    if (ca1 + x <= 0.0 || ca1 + b <= 0.0)
        throw std::runtime_error("step_recurrence: nonpositive rate denominator");
    factor *= (ca1 + b) / (ca1 + x);
    if (exits_inside > 1) ++traj.multi_exit_windows;

    const double j_r = (ca1 + J[r - 1] - double(r)) * factor - ca1 + double(r);
    J.push_back(j_r);
    traj.customers = r;

    int pk = traj.next_exit;
    while (pk <= traj.customers && J[pk] <= double(r)) ++pk;
    traj.departed.push_back(pk - 1);
    return j_r;
}

ContinuousTrajectory run_continuous(const ModelParams& p, double horizon_s) {
    if (!(horizon_s > 0.0)) throw std::invalid_argument("horizon must be positive");
    ContinuousTrajectory traj;
    traj.params = p;
    traj.exit_index.assign(2, 0.0);
    traj.exit_index[1] = first_exit_continuous(p);
    traj.departed.assign(2, 0);
    traj.departed[1] = traj.exit_index[1] <= 1.0 ? 1 : 0;
    traj.customers = 1;

    const int last = int(std::floor(horizon_s / p.entry_interval_s)) + 1;
    for (int r = 2; r <= last; ++r) step_recurrence(traj, r);
    return traj;
}

SeriesBundle extract_series_continuous(const ContinuousTrajectory& traj, double tick_s,
                                       double window_s) {
    if (!(tick_s > 0.0) || window_s < 0.0)
        throw std::invalid_argument("extract_series: bad tick/window");
    const ModelParams& p = traj.params;
    SeriesBundle out;
    out.tick_s = tick_s;
    const int n = traj.customers;
    if (n > 0 && traj.entry_time_s(n) + p.entry_interval_s < window_s)
        throw std::invalid_argument("extract_series: trajectory shorter than window");
    const std::size_t ticks = std::size_t(window_s / tick_s) + 1;

    // Exit times are already sorted (FIFO).
    double sum_shop = 0.0;
    int entered = 0, exited = 0;
    out.t_s.reserve(ticks);
    for (std::size_t k = 0; k < ticks; ++k) {
        const double t = double(k) * tick_s;
        while (entered < n && traj.entry_time_s(entered + 1) <= t) ++entered;
        while (exited < n && traj.exit_time_s(exited + 1) <= t) {
            sum_shop += traj.shop_time_s(exited + 1);
            ++exited;
        }
        const double occ = double(entered - exited);
        out.t_s.push_back(t);
        out.occupancy.push_back(occ);
        out.completions.push_back(double(exited));
        out.avg_shop_time_s.push_back(exited > 0 ? sum_shop / exited : 0.0);
        const double rate =
            occ > 0.0 ? occ * p.money_per_customer /
                            (p.base_shop_time_h + (occ - 1.0) / p.capacity_coeff)
                      : 0.0;
        out.total_spend_rate.push_back(rate);
    }
    return out;
}

}  // namespace shopflow
