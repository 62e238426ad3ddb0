#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shopflow/customer.hpp"
#include "shopflow/layout.hpp"
#include "shopflow/risk_schedule.hpp"
#include "shopflow/rng.hpp"
#include "shopflow/sim_config.hpp"

namespace shopflow {

enum class FreezeKind : char { none = 'n', stationary = 's', entrance = 'e' };

struct AvoidanceEvent {
    std::int64_t tick;
    int actor;
    int other;
    AvoidAction action;
    int backsteps;  // depth for B, otherwise 0
};

struct TraceRow {
    std::int64_t tick;
    int id;
    double x;
    double y;
    char state;
};

// Everything a run produces. A record is a pure function of
// (layout, config, seed); the two instrumentation counters at the bottom
// are diagnostics and are excluded from equivalence comparisons between
// scheduler and naive collision modes.
struct RunRecord {
    SimConfig config;
    std::uint64_t seed = 0;

    std::vector<int> occupancy;        // per tick (post-update)
    std::vector<int> completions;      // cumulative per tick
    std::vector<double> spend_rate;    // currency/hour over a 60 s window
    std::vector<double> shop_times_s;  // per completed customer, completion order
    std::vector<int> completion_ids;
    std::vector<std::int64_t> completion_ticks;
    std::vector<AvoidanceEvent> avoidance_events;
    std::vector<TraceRow> trace;  // filled only when tracing is on

    FreezeKind freeze = FreezeKind::none;
    std::int64_t freeze_tick = -1;
    int frozen_count = 0;

    int customers_entered = 0;
    bool exit_order_inversion = false;  // completions out of entry order
    int entrance_block_events = 0;      // admissions deferred past the grace

    // diagnostics (not part of record equivalence)
    std::int64_t distance_checks = 0;
    std::int64_t pair_tick_budget = 0;  // what naive checking would cost

    bool froze() const { return freeze != FreezeKind::none; }
    double mean_occupancy_tail(double tail_s) const;
};

// Dynamics-content equality: everything except the two counters.
bool records_equivalent(const RunRecord& a, const RunRecord& b);

class World {
  public:
    World(const StoreLayout& layout, const SimConfig& config, std::uint64_t seed,
          bool record_trace = false);

    void step();  // one tick: admission, then per-customer updates in entry order
    bool finished() const;
    RunRecord take_record();

    // Current freeze status; evaluated as part of step() as well.
    FreezeKind detect_freeze() const { return freeze_; }

    const std::vector<Customer>& customers() const { return customers_; }
    const std::vector<int>& live_ids() const { return live_; }
    std::int64_t now() const { return tick_; }

    // exposed for tests
    Customer spawn_customer_preview();  // draws a customer without admitting it
    const RiskSchedule& schedule() const { return sched_; }

  private:
    void try_admission();
    void spawn();
    void update_customer(int id);
    void plan_next_target(Customer& c);
    Vec2 route_target(const Customer& c, Vec2 goal) const;
    bool violates(Vec2 p, const std::vector<int>& peers, int* binding, double* best_d2);
    void apply_avoidance(Customer& c, Vec2 heading, const std::vector<int>& peers, int other);
    Quadrant classify_quadrant(const Customer& me, const Customer& other) const;
    void commit_move(Customer& c, Vec2 to);
    void arrive(Customer& c);
    void depart(Customer& c);
    double risk_time_for(double d) const;
    void refresh_pairs(int id, const std::vector<int>& peers);
    void record_tick();

    StoreLayout layout_;
    SimConfig cfg_;
    Rng rng_;
    bool tracing_;

    std::vector<Customer> customers_;
    std::vector<int> live_;  // entry order
    RiskSchedule sched_;

    std::int64_t tick_ = 0;
    std::int64_t horizon_ticks_ = 0;
    int next_entrant_ = 0;      // entrants admitted so far
    bool deferral_counted_ = false;
    FreezeKind freeze_ = FreezeKind::none;

    RunRecord rec_;
    std::vector<double> credit_window_;  // item credits per tick, spend window
    double window_sum_ = 0.0;
    int last_completion_id_ = -1;
};

RunRecord run_sim(const StoreLayout& layout, const SimConfig& config, std::uint64_t seed,
                  bool record_trace = false);
inline RunRecord run_sim(const StoreLayout& layout, const SimConfig& config) {
    return run_sim(layout, config, config.rng_seed);
}

}  // namespace shopflow
