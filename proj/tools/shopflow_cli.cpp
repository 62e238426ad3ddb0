#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shopflow/continuous.hpp"
#include "shopflow/csv.hpp"
#include "shopflow/digamma.hpp"
#include "shopflow/discrete.hpp"
#include "shopflow/equilibrium.hpp"
#include "shopflow/simulation.hpp"
#include "shopflow/sweep.hpp"

namespace {

using namespace shopflow;

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void print_validation(const ModelParams& p) {
    const ValidationReport rep = validate_params(p);
    std::printf("validation: a1f_ok=%s m_lower_bound_ok=%s equilibrium_feasible=%s\n",
                rep.a1f_ok ? "yes" : "no", rep.m_lower_bound_ok ? "yes" : "no",
                rep.equilibrium_feasible ? "yes" : "no");
    for (const auto& msg : rep.messages) std::printf("  note: %s\n", msg.c_str());
}

int cmd_equilibrium(const ModelParams& p) {
    print_validation(p);
    std::printf("entry interval threshold: %s s\n",
                format_number(equilibrium_threshold_s(p)).c_str());
    const EquilibriumSolution sol = solve_equilibrium(p);
    if (sol.feasible) {
        std::printf("equilibrium at delta=%s s: A=%s s  n=%s  e=%s/h  E=%s/h%s\n",
                    format_number(p.entry_interval_s).c_str(),
                    format_number(sol.shop_time_h * 3600.0).c_str(),
                    format_number(sol.occupancy).c_str(),
                    format_number(sol.per_customer_rate).c_str(),
                    format_number(sol.total_rate).c_str(),
                    sol.at_boundary ? "  (boundary)" : "");
    } else {
        std::printf("no equilibrium at delta=%s s (flow too high)\n",
                    format_number(p.entry_interval_s).c_str());
    }
    const IntakeOptimum opt = optimal_intake(p);
    std::printf("spending-rate optimum: delta*=%s s  A*=%s s  n*=%s  E*=%s/h\n",
                format_number(opt.entry_interval_s).c_str(),
                format_number(opt.shop_time_h * 3600.0).c_str(),
                format_number(opt.occupancy).c_str(), format_number(opt.total_rate).c_str());
    const FirstExitCheck chk = digamma_check(p);
    std::printf("first-exit cross-check: J1_psi=%s  J1_log=%s\n",
                format_number(chk.j1_psi).c_str(), format_number(chk.j1_log).c_str());
    return 0;
}

int cmd_continuous(const ModelParams& p, double horizon_s, double tick_s,
                   const std::string& out_dir) {
    const ContinuousTrajectory traj = run_continuous(p, horizon_s);
    const SeriesBundle series = extract_series_continuous(traj, tick_s, horizon_s);
    std::filesystem::create_directories(out_dir);
    const std::string path = join_path(out_dir, "continuous_series.csv");
    write_series_csv(series, path);
    std::printf("continuous: %d customers, J1=%s, occupancy at horizon %s -> %s\n",
                traj.customers, format_number(traj.exit_index[1]).c_str(),
                format_number(horizon_s).c_str(),
                format_number(series.occupancy.back()).c_str());
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int cmd_discrete(const ModelParams& p, double horizon_s, double tick_s,
                 const std::string& out_dir) {
    DiscreteTrajectory traj = run_discrete(p, horizon_s);
    const SeriesBundle series = extract_series_discrete(traj, tick_s, horizon_s);
    std::filesystem::create_directories(out_dir);
    const std::string spath = join_path(out_dir, "discrete_series.csv");
    const std::string tpath = join_path(out_dir, "discrete_trajectory.csv");
    write_series_csv(series, spath);
    write_trajectory_csv(traj, tpath);
    if (traj.equilibrium_index)
        std::printf("discrete: unit exit gaps from r=%d, steady occupancy %lld\n",
                    *traj.equilibrium_index, (long long)*traj.steady_occupancy);
    else
        std::printf("discrete: no equilibrium within horizon (occupancy still growing)\n");
    const EquilibriumPrediction pred = predict_equilibrium(traj);
    std::printf("gap-series prediction: %s%s\n",
                pred.will_equilibrate ? "equilibrium" : "no equilibrium",
                pred.r0 ? (" (call at r=" + std::to_string(*pred.r0) + ")").c_str() : "");
    std::printf("wrote %s and %s\n", spath.c_str(), tpath.c_str());
    return 0;
}

int cmd_simulate(const StoreLayout& layout, SimConfig cfg, std::uint64_t seed, bool trace,
                 const std::string& out_dir) {
    const RunRecord rec = run_sim(layout, cfg, seed, trace);
    std::filesystem::create_directories(out_dir);
    const std::string path = join_path(out_dir, "run_summary.csv");
    write_run_summary_csv(rec, path);
    std::printf("simulate: delta=%s s seed=%llu entered=%d completed=%zu",
                format_number(cfg.entry_interval_s).c_str(), (unsigned long long)seed,
                rec.customers_entered, rec.shop_times_s.size());
    if (rec.froze())
        std::printf("  FROZE at t=%lld s (%s, %d customers)",
                    (long long)rec.freeze_tick,
                    rec.freeze == FreezeKind::stationary ? "stationary" : "entrance",
                    rec.frozen_count);
    std::printf("\n");
    std::printf("distance checks: %lld of %lld naive pair-ticks\n",
                (long long)rec.distance_checks, (long long)rec.pair_tick_budget);
    std::printf("wrote %s\n", path.c_str());
    if (trace) {
        const std::string tr = join_path(out_dir, "trace.csv");
        write_trace_csv(rec, tr);
        std::printf("wrote %s\n", tr.c_str());
    }
    return 0;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_dir) {
    const SweepResult result = run_sweep(spec);
    for (const std::string& f : export_csv(result, out_dir))
        std::printf("wrote %s\n", f.c_str());
    for (const DeltaResult& d : result.per_delta)
        std::printf("delta=%5s s: attempts=%4d successes=%4d freeze_rate=%s%s\n",
                    format_number(d.delta_s).c_str(), d.attempts, d.successes,
                    format_number(d.freeze_rate).c_str(),
                    d.saturated_freezing ? "  (saturated)" : "");
    return 0;
}

int cmd_compare(const SweepSpec& spec, const std::string& out_dir) {
    const SweepResult result = run_sweep(spec);
    export_csv(result, out_dir);
    std::printf("%8s %12s %12s %10s %10s %10s  %s/%s/%s\n", "delta_s", "analytic_n",
                "analytic_A_s", "discrete_n", "sim_n", "littles", "analytic", "discrete",
                "sim");
    for (const ComparisonRow& row : compare_models(result)) {
        auto opt = [](const auto& o) { return o ? format_number(double(*o)) : std::string("-"); };
        std::printf("%8s %12s %12s %10s %10s %10s  %s/%s/%s\n",
                    format_number(row.delta_s).c_str(), opt(row.analytic_occupancy).c_str(),
                    opt(row.analytic_shop_time_s).c_str(),
                    opt(row.discrete_steady_occupancy).c_str(),
                    opt(row.sim_tail_occupancy).c_str(), opt(row.littles_residual).c_str(),
                    row.analytic_class.c_str(), row.discrete_class.c_str(),
                    row.sim_class.c_str());
    }
    std::printf("wrote %s\n", join_path(out_dir, "comparison.csv").c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Store intake dynamics: equilibrium theory, exact intake-rate trajectories, "
                 "and a collision-avoiding agent simulation"};
    app.fallthrough();
    app.set_config("--config", "", "flat key=value config file (flags win)");

    ModelParams params;
    double horizon_s = 20000.0;
    double tick_s = 1.0;
    int replicates = 100;
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    bool trace = false;
    bool naive = false;
    double sim_horizon_s = 3600.0;
    std::vector<double> deltas;

    app.add_option("--delta-seconds", params.entry_interval_s, "entry interval in seconds");
    app.add_option("--m", params.money_per_customer, "total spend per customer M");
    app.add_option("--c", params.capacity_coeff, "effective-capacity coefficient c");
    app.add_option("--a1-hours", params.base_shop_time_h, "empty-store shopping time A1, hours");
    app.add_option("--horizon-seconds", horizon_s, "trajectory horizon, seconds");
    app.add_option("--sim-horizon-seconds", sim_horizon_s, "simulation horizon, seconds");
    app.add_option("--tick-seconds", tick_s, "series tick, seconds");
    app.add_option("--replicates", replicates, "successful runs required per delta");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--out-dir", out_dir, "output directory for CSV files");
    app.add_flag("--trace", trace, "write the per-tick position trace");
    app.add_flag("--naive-collisions", naive, "all-pairs distance checking (oracle mode)");
    app.add_option("--delta-grid", deltas, "sweep entry intervals, seconds");

    auto* sub_eq = app.add_subcommand("equilibrium", "closed-form stationary state and optimum");
    auto* sub_cont = app.add_subcommand("continuous", "exact real-valued exit trajectory");
    auto* sub_disc = app.add_subcommand("discrete", "integer exit trajectory and steady state");
    auto* sub_sim = app.add_subcommand("simulate", "one agent-based run");
    auto* sub_sweep = app.add_subcommand("sweep", "replicated sweep over entry intervals");
    auto* sub_cmp = app.add_subcommand("compare", "model-vs-simulation comparison table");
    app.require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        StoreLayout layout;
        SimConfig sim;
        sim.entry_interval_s = params.entry_interval_s;
        sim.horizon_s = sim_horizon_s;
        sim.item_price = params.money_per_customer / sim.list_length_mean;
        sim.naive_collisions = naive;
        sim.rng_seed = seed;

        SweepSpec spec;
        spec.model = params;
        spec.layout = layout;
        spec.sim = sim;
        spec.replicates_required = replicates;
        spec.master_seed = seed;
        spec.horizon_s = sim_horizon_s;
        if (!deltas.empty()) spec.delta_values_s = deltas;

        if (sub_eq->parsed()) return cmd_equilibrium(params);
        if (sub_cont->parsed()) return cmd_continuous(params, horizon_s, tick_s, out_dir);
        if (sub_disc->parsed()) return cmd_discrete(params, horizon_s, tick_s, out_dir);
        if (sub_sim->parsed()) return cmd_simulate(layout, sim, seed, trace, out_dir);
        if (sub_sweep->parsed()) return cmd_sweep(spec, out_dir);
        if (sub_cmp->parsed()) return cmd_compare(spec, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
