#include "shopflow/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "shopflow/continuous.hpp"
#include "shopflow/discrete.hpp"
#include "shopflow/equilibrium.hpp"

namespace shopflow {

void SweepSpec::validate() const {
    if (delta_values_s.empty())
        throw std::invalid_argument("sweep: delta_values_s must be nonempty");
    for (double d : delta_values_s)
        if (!(d > 0.0)) throw std::invalid_argument("sweep: entry intervals must be positive");
    if (replicates_required < 1)
        throw std::invalid_argument("sweep: replicates_required must be >= 1");
    if (attempt_cap_factor < 1)
        throw std::invalid_argument("sweep: attempt_cap_factor must be >= 1");
}

namespace {

// Attempts are seeded by index; the kept replicates are always the
// lowest-indexed successes, so the outcome is independent of scheduling.
DeltaResult sweep_one_delta(const SweepSpec& spec, double delta_s, int n_threads) {
    DeltaResult res;
    res.delta_s = delta_s;

    SimConfig cfg = spec.sim;
    cfg.entry_interval_s = delta_s;
    cfg.horizon_s = spec.horizon_s;

    const int cap = spec.attempt_cap_factor * spec.replicates_required;
    std::vector<char> success;
    std::vector<RunRecord> kept;  // records of successes, by attempt index
    std::vector<std::int64_t> kept_idx;

    int next_index = 0;
    int successes_seen = 0;
    while (successes_seen < spec.replicates_required && next_index < cap) {
        const int batch = std::min(cap - next_index,
                                   std::max(n_threads, spec.replicates_required / 4 + 1));
        std::vector<std::future<RunRecord>> futs;
        futs.reserve(std::size_t(batch));
        for (int k = 0; k < batch; ++k) {
            const std::uint64_t seed =
                derive_seed(spec.master_seed, delta_s, std::uint64_t(next_index + k));
            futs.push_back(std::async(std::launch::async, [&spec, cfg, seed] {
                return run_sim(spec.layout, cfg, seed);
            }));
        }
        for (int k = 0; k < batch; ++k) {
            RunRecord r = futs[std::size_t(k)].get();
            success.push_back(!r.froze());
            if (!r.froze()) {
                kept.push_back(std::move(r));
                kept_idx.push_back(next_index + k);
            }
        }
        next_index += batch;
        successes_seen = int(kept.size());
    }

    // Sequential-protocol accounting: count attempts up to (and including)
    // the one that produced the required-th success.
    int cutoff = int(success.size());
    int count = 0;
    for (int i = 0; i < int(success.size()); ++i) {
        if (success[std::size_t(i)] && ++count == spec.replicates_required) {
            cutoff = i + 1;
            break;
        }
    }
    res.attempts = cutoff;
    res.successes = std::min(count, spec.replicates_required);
    res.failures = res.attempts - res.successes;
    res.saturated_freezing = res.successes < spec.replicates_required;
    res.freeze_rate = res.attempts > 0 ? double(res.failures) / double(res.attempts) : 0.0;

    // aggregate over the kept successes (lowest-indexed ones inside cutoff)
    std::size_t ticks = 0;
    int used = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept_idx[i] >= cutoff) break;
        ticks = std::max(ticks, kept[i].occupancy.size());
        ++used;
    }
    if (used > 0) {
        res.mean_occupancy.assign(ticks, 0.0);
        res.mean_spend_rate.assign(ticks, 0.0);
        double comp = 0.0, shop_sum = 0.0, tail_shop_sum = 0.0;
        std::int64_t shop_n = 0, tail_n = 0, tail_shop_n = 0;
        double tail = 0.0;
        for (int i = 0; i < used; ++i) {
            const RunRecord& r = kept[std::size_t(i)];
            for (std::size_t t = 0; t < r.occupancy.size(); ++t) {
                res.mean_occupancy[t] += r.occupancy[t];
                res.mean_spend_rate[t] += r.spend_rate[t];
            }
            comp += r.completions.empty() ? 0.0 : double(r.completions.back());
            for (double s : r.shop_times_s) shop_sum += s;
            shop_n += std::int64_t(r.shop_times_s.size());
            tail += r.mean_occupancy_tail(600.0);
            ++tail_n;
            // steady-state shop-time estimate: completions in the final
            // third of the horizon (pairs with the tail-windowed occupancy)
            const double cut_tick = 2.0 / 3.0 * spec.horizon_s / cfg.tick_s;
            for (std::size_t k = 0; k < r.shop_times_s.size(); ++k) {
                if (double(r.completion_ticks[k]) >= cut_tick) {
                    tail_shop_sum += r.shop_times_s[k];
                    ++tail_shop_n;
                }
            }
        }
        for (auto& v : res.mean_occupancy) v /= used;
        for (auto& v : res.mean_spend_rate) v /= used;
        res.mean_completions = comp / used;
        res.mean_shop_time_s = shop_n > 0 ? shop_sum / double(shop_n) : 0.0;
        res.mean_tail_occupancy = tail_n > 0 ? tail / double(tail_n) : 0.0;
        res.mean_tail_shop_time_s =
            tail_shop_n > 0 ? tail_shop_sum / double(tail_shop_n) : res.mean_shop_time_s;
    }
    return res;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult out;
    out.spec = spec;

    const int n_threads = spec.threads > 0
                              ? spec.threads
                              : std::max(1u, std::thread::hardware_concurrency());

    for (double delta : spec.delta_values_s) {
        DeltaResult res;
        res.delta_s = delta;
        if (spec.run_simulation) res = sweep_one_delta(spec, delta, n_threads);

        ModelParams p = spec.model;
        p.entry_interval_s = delta;
        if (spec.run_continuous_model || spec.run_discrete_model) {
            const EquilibriumSolution eq = solve_equilibrium(p);
            if (eq.feasible) {
                res.analytic_occupancy = eq.occupancy;
                res.analytic_shop_time_s = eq.shop_time_h * 3600.0;
            }
        }
        if (spec.run_discrete_model) {
            DiscreteTrajectory traj = run_discrete(p, std::max(spec.horizon_s * 6.0, 20000.0));
            if (traj.steady_occupancy) res.discrete_steady_occupancy = *traj.steady_occupancy;
        }
        out.per_delta.push_back(std::move(res));
    }
    return out;
}

std::vector<ComparisonRow> compare_models(const SweepResult& sweep) {
    std::vector<ComparisonRow> rows;
    for (const DeltaResult& d : sweep.per_delta) {
        ComparisonRow row;
        row.delta_s = d.delta_s;
        row.analytic_occupancy = d.analytic_occupancy;
        row.analytic_shop_time_s = d.analytic_shop_time_s;
        row.discrete_steady_occupancy = d.discrete_steady_occupancy;
        row.analytic_class = d.analytic_occupancy ? "equilibrium" : "unbounded";
        row.discrete_class = d.discrete_steady_occupancy ? "equilibrium" : "unbounded";
        if (d.successes > 0) {
            row.sim_tail_occupancy = d.mean_tail_occupancy;
            const double f = 3600.0 / d.delta_s;
            const double a_bar_h = d.mean_tail_shop_time_s / 3600.0;
            if (d.mean_tail_occupancy > 0.0)
                row.littles_residual =
                    std::abs(d.mean_tail_occupancy - f * a_bar_h) / d.mean_tail_occupancy;
            if (d.freeze_rate > 0.5)
                row.sim_class = "freezing";
            else if (!d.mean_occupancy.empty()) {
                // growing when the last-quarter mean clearly exceeds the
                // mid-run mean
                const std::size_t n = d.mean_occupancy.size();
                double late = 0.0, mid = 0.0;
                for (std::size_t t = 3 * n / 4; t < n; ++t) late += d.mean_occupancy[t];
                for (std::size_t t = n / 2; t < 3 * n / 4; ++t) mid += d.mean_occupancy[t];
                late /= double(n - 3 * n / 4);
                mid /= double(3 * n / 4 - n / 2);
                row.sim_class = late > 1.15 * mid ? "growing" : "steady";
            }
        } else {
            row.sim_class = "missing";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace shopflow
