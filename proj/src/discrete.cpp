#include "shopflow/discrete.hpp"

#include <cmath>
#include <stdexcept>

namespace shopflow {

namespace {

constexpr std::int64_t kTermGuard = 1'000'000;

double rate_term(double ca1, double idx) { return ca1 / (ca1 + idx); }

// Accumulate rate terms from start_idx until the running sum reaches
// `target`, then apply the keep/drop rule to the final term. Returns the
// number of terms kept and fills the residual bookkeeping.
std::int64_t accumulate_to_target(double ca1, std::int64_t start_idx, double target,
                                  const RoundingRule& rule, DiscreteStep& info) {
    double sum = 0.0;
    std::int64_t m = start_idx - 1;
    double term = 0.0, prev = 0.0;
    do {
        ++m;
        if (m - start_idx > kTermGuard)
            throw std::runtime_error("discrete step: no crossing within term guard");
        term = rate_term(ca1, double(m));
        if (term <= 0.0) throw std::runtime_error("discrete step: nonpositive rate term");
        prev = sum;
        sum += term;
    } while (sum < target * (1.0 - 1e-12));

    bool keep;
    if (std::abs(sum - target) <= 1e-12 * target) {
        keep = true;  // exact hit; sustains the unit-gap steady state
    } else {
        const double pos = (target - prev) / term;
        keep = pos >= rule.keep_threshold;
    }
    info.kept_final_term = keep;
    info.residual = (keep ? sum : prev) - target;
    return keep ? (m - start_idx + 1) : (m - start_idx);
}

}  // namespace

std::int64_t first_exit_discrete(const ModelParams& p, const RoundingRule& rule,
                                 DiscreteStep* out) {
    require_positive(p);
    DiscreteStep info;
    const double ca1 = p.ca1();
    const std::int64_t kept = accumulate_to_target(ca1, 0, p.mf(), rule, info);
    std::int64_t j1 = kept + 1;
    if (j1 < 2) {  // Mf < 1: the whole list fits inside one entry interval
        j1 = 2;
        info.clamped = true;
        info.residual = rate_term(ca1, 0.0) - p.mf();
    }
    info.exit_index = j1;
    if (out) *out = info;
    return j1;
}

std::int64_t step_discrete(DiscreteTrajectory& traj, int r) {
    if (r < 2 || r != traj.customers + 1)
        throw std::invalid_argument("step_discrete: r must extend the trajectory");
    const double ca1 = traj.params.ca1();
    auto& J = traj.exit_index;
    const std::int64_t k_prev = traj.departed[r - 1];

    // Balance target: the rate of the previous entrant over her first
    // interval, with r - (K_{r-1}+2) other customers present.
    const std::int64_t target_idx = std::int64_t(r) - k_prev - 2;
    if (target_idx < 0) throw std::runtime_error("step_discrete: negative target index");
    const double target = rate_term(ca1, double(target_idx));

    DiscreteStep info;
    const std::int64_t start = J[r - 1] - r;
    const std::int64_t kept = accumulate_to_target(ca1, start, target, traj.rule, info);
    std::int64_t j_r = r + start + kept;
    if (j_r <= J[r - 1]) {  // exits stay strictly ordered
        j_r = J[r - 1] + 1;
        info.clamped = true;
        info.residual = rate_term(ca1, double(start)) - target;  // one term realized
        ++traj.clamped_steps;
    }
    info.exit_index = j_r;

    J.push_back(j_r);
    traj.residual.push_back(info.residual);
    traj.customers = r;

    while (traj.next_exit <= traj.customers && J[traj.next_exit] <= std::int64_t(r))
        ++traj.next_exit;
    const std::int64_t k_r = traj.next_exit - 1;
    traj.departed.push_back(k_r);
    traj.occupancy_entry.push_back(std::int64_t(r) - k_r);
    traj.eq_gap.push_back(j_r - (2 * std::int64_t(r) - (k_prev + 1)));
    return j_r;
}

static DiscreteTrajectory start_trajectory(const ModelParams& p, const RoundingRule& rule) {
    DiscreteTrajectory traj;
    traj.params = p;
    traj.rule = rule;
    DiscreteStep info;
    const std::int64_t j1 = first_exit_discrete(p, rule, &info);
    traj.exit_index = {0, j1};
    traj.departed = {0, j1 <= 1 ? std::int64_t(1) : std::int64_t(0)};
    traj.occupancy_entry = {0, 1 - traj.departed[1]};
    traj.eq_gap = {0, 0};  // g is defined from r = 2
    traj.residual = {0.0, info.residual};
    traj.customers = 1;
    if (info.clamped) ++traj.clamped_steps;
    return traj;
}

DiscreteTrajectory run_discrete_customers(const ModelParams& p, int n_customers,
                                          const RoundingRule& rule) {
    if (n_customers < 1) throw std::invalid_argument("need at least one customer");
    DiscreteTrajectory traj = start_trajectory(p, rule);
    for (int r = 2; r <= n_customers; ++r) step_discrete(traj, r);
    detect_equilibrium(traj);
    return traj;
}

DiscreteTrajectory run_discrete(const ModelParams& p, double horizon_s,
                                const RoundingRule& rule) {
    if (!(horizon_s > 0.0)) throw std::invalid_argument("horizon must be positive");
    const int last = int(std::floor(horizon_s / p.entry_interval_s)) + 1;
    return run_discrete_customers(p, last, rule);
}

std::optional<int> detect_equilibrium(DiscreteTrajectory& traj) {
    traj.equilibrium_index.reset();
    traj.identity_index.reset();
    traj.steady_occupancy.reset();
    const auto& J = traj.exit_index;
    for (int r = 2; r <= traj.customers; ++r) {
        if (J[r] - J[r - 1] == 1) {
            traj.equilibrium_index = r;
            traj.steady_occupancy = J[r] - r;
            break;
        }
    }
    if (!traj.equilibrium_index) return std::nullopt;

    // The unit-gap profile identity kicks in once the pre-lock customers
    // have all departed; locate the first index from which it holds through
    // the horizon.
    int first_ok = traj.customers + 1;
    for (int r = traj.customers; r >= *traj.equilibrium_index; --r) {
        if (J[r] == 2 * std::int64_t(r) - (traj.departed[r - 1] + 1))
            first_ok = r;
        else
            break;
    }
    if (first_ok <= traj.customers) traj.identity_index = first_ok;
    return traj.equilibrium_index;
}

EquilibriumPrediction predict_equilibrium(const DiscreteTrajectory& traj) {
    EquilibriumPrediction pred;
    const auto& g = traj.eq_gap;
    for (int r = 3; r <= traj.customers; ++r) {
        if (g[r] != g[r - 1]) {
            pred.will_equilibrate = g[r] < g[r - 1];
            pred.r0 = r;
            return pred;
        }
    }
    // Never moved: an all-zero gap means the profile was steady from the
    // start; any other flat value stays undecided and reports false.
    pred.will_equilibrate = traj.customers >= 2 && g[2] == 0;
    return pred;
}

SeriesBundle extract_series_discrete(const DiscreteTrajectory& traj, double tick_s,
                                     double window_s) {
    if (!(tick_s > 0.0) || window_s < 0.0)
        throw std::invalid_argument("extract_series: bad tick/window");
    const ModelParams& p = traj.params;
    const int n = traj.customers;
    if (n > 0 && traj.entry_time_s(n) + p.entry_interval_s < window_s)
        throw std::invalid_argument("extract_series: trajectory shorter than window");

    SeriesBundle out;
    out.tick_s = tick_s;
    const std::size_t ticks = std::size_t(window_s / tick_s) + 1;
    double sum_shop = 0.0;
    int entered = 0, exited = 0;
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
        out.total_spend_rate.push_back(
            occ > 0.0 ? occ * p.money_per_customer /
                            (p.base_shop_time_h + (occ - 1.0) / p.capacity_coeff)
                      : 0.0);
    }
    if (traj.steady_occupancy) {
        out.steady_occupancy_direct = double(*traj.steady_occupancy);
        if (exited > 0)
            out.steady_flow_times_shoptime =
                p.flow_per_hour() * (sum_shop / exited) / 3600.0;
    }
    return out;
}

bool total_spend_monotonic(const DiscreteTrajectory& traj) {
    if (!traj.equilibrium_index)
        throw std::invalid_argument("total_spend_monotonic: no equilibrium detected");
    const double ca1 = traj.params.ca1();
    const int r_eq = *traj.equilibrium_index;
    for (int r = 2; r <= r_eq; ++r) {
        const double occ = double(traj.occupancy_entry[r]);
        const double occ_prev = double(traj.occupancy_entry[r - 1]);
        const double total = occ * rate_term(ca1, occ - 1.0);
        const double total_prev = occ_prev * rate_term(ca1, occ_prev - 1.0);
        const bool exit_event = traj.departed[r] > traj.departed[r - 1];
        if (total < total_prev - 1e-12 && !exit_event) return false;
        // per-customer rate may only recover at a departure
        if (rate_term(ca1, occ - 1.0) > rate_term(ca1, occ_prev - 1.0) + 1e-12 && !exit_event)
            return false;
    }
    return true;
}

}  // namespace shopflow
