#include "shopflow/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace shopflow {

void AvoidanceTable::validate() const {
    for (const auto& row : rows) {
        double sum = 0.0;
        for (double p : row) {
            if (p < 0.0) throw std::invalid_argument("avoidance table: negative probability");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("avoidance table: row does not sum to 1");
    }
}

void SimConfig::validate() const {
    avoidance.validate();
    auto positive = [](double v, const char* what) {
        if (!(v > 0.0)) throw std::invalid_argument(std::string("sim config: ") + what);
    };
    positive(walking_speed, "walking_speed must be positive");
    positive(dwell_time_s, "dwell_time_s must be positive");
    positive(social_distance, "social_distance must be positive");
    positive(list_length_mean, "list_length_mean must be positive");
    if (list_length_variance < 0.0)
        throw std::invalid_argument("sim config: list_length_variance must be nonnegative");
    positive(entry_interval_s, "entry_interval_s must be positive");
    positive(freeze_stationary_s, "freeze_stationary_s must be positive");
    positive(tick_s, "tick_s must be positive");
    if (horizon_s < 0.0) throw std::invalid_argument("sim config: horizon_s must be nonnegative");
    if (!(backstep_decay > 0.0 && backstep_decay < 1.0))
        throw std::invalid_argument("sim config: backstep_decay must be in (0,1)");
    if (max_backstep < 1) throw std::invalid_argument("sim config: max_backstep must be >= 1");
    if (item_price < 0.0) throw std::invalid_argument("sim config: item_price must be nonnegative");
}

double RunRecord::mean_occupancy_tail(double tail_s) const {
    if (occupancy.empty()) return 0.0;
    const std::size_t ticks = std::min<std::size_t>(
        occupancy.size(), std::size_t(tail_s / config.tick_s) + 1);
    double sum = 0.0;
    for (std::size_t i = occupancy.size() - ticks; i < occupancy.size(); ++i)
        sum += occupancy[i];
    return sum / double(ticks);
}

bool records_equivalent(const RunRecord& a, const RunRecord& b) {
    auto ev = [](const AvoidanceEvent& e) {
        return std::tuple(e.tick, e.actor, e.other, int(e.action), e.backsteps);
    };
    if (a.occupancy != b.occupancy || a.completions != b.completions ||
        a.spend_rate != b.spend_rate || a.shop_times_s != b.shop_times_s ||
        a.completion_ids != b.completion_ids || a.completion_ticks != b.completion_ticks ||
        a.freeze != b.freeze ||
        a.freeze_tick != b.freeze_tick || a.frozen_count != b.frozen_count ||
        a.customers_entered != b.customers_entered ||
        a.exit_order_inversion != b.exit_order_inversion ||
        a.entrance_block_events != b.entrance_block_events)
        return false;
    if (a.avoidance_events.size() != b.avoidance_events.size()) return false;
    for (std::size_t i = 0; i < a.avoidance_events.size(); ++i)
        if (ev(a.avoidance_events[i]) != ev(b.avoidance_events[i])) return false;
    if (a.trace.size() != b.trace.size()) return false;
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        const TraceRow &ta = a.trace[i], &tb = b.trace[i];
        if (ta.tick != tb.tick || ta.id != tb.id || ta.x != tb.x || ta.y != tb.y ||
            ta.state != tb.state)
            return false;
    }
    return true;
}

World::World(const StoreLayout& layout, const SimConfig& config, std::uint64_t seed,
             bool record_trace)
    : layout_(layout), cfg_(config), rng_(seed), tracing_(record_trace) {
    layout_.validate();
    cfg_.validate();
    rec_.config = cfg_;
    rec_.seed = seed;
    horizon_ticks_ = std::int64_t(std::floor(cfg_.horizon_s / cfg_.tick_s));
    const std::size_t window_ticks = std::size_t(std::max(1.0, 60.0 / cfg_.tick_s));
    credit_window_.assign(window_ticks, 0.0);
}

bool World::finished() const { return tick_ >= horizon_ticks_ || freeze_ != FreezeKind::none; }

Customer World::spawn_customer_preview() {
    Customer c;
    c.id = next_entrant_;
    c.entry_tick = tick_;
    c.pos = layout_.entrance;
    c.stationary_since = tick_;

    const double sigma = std::sqrt(cfg_.list_length_variance);
    int n = int(std::lround(rng_.normal(cfg_.list_length_mean, sigma)));
    if (n < 1) n = 1;
    const double total = layout_.shoppable_length();
    c.items.reserve(n);
    for (int i = 0; i < n; ++i) c.items.push_back(layout_.point_at_arclength(rng_.uniform(0.0, total)));
    c.visited.assign(n, false);
    c.remaining_items = n;

    // forced first stop: a uniformly chosen list item
    const int first = int(rng_.uniform01() * n) % n;
    c.target_item = first;
    c.target = route_target(c, c.items[first]);
    return c;
}

void World::spawn() {
    Customer c = spawn_customer_preview();
    std::vector<std::pair<int, double>> risks;
    risks.reserve(live_.size());
    for (int id : live_) {
        const double d = dist(c.pos, customers_[id].pos);
        ++rec_.distance_checks;
        risks.emplace_back(id, double(tick_) * cfg_.tick_s + risk_time_for(d));
    }
    sched_.add_customer(c.id, risks);
    live_.push_back(c.id);
    customers_.push_back(std::move(c));
    ++next_entrant_;
    ++rec_.customers_entered;
}

double World::risk_time_for(double d) const {
    if (cfg_.literal_risk_formula)  // printed form, kept for comparison runs
        return std::max(0.0, d / (2.0 * cfg_.walking_speed) - cfg_.social_distance);
    return std::max(0.0, (d - cfg_.social_distance) / (2.0 * cfg_.walking_speed));
}

void World::try_admission() {
    const double now_s = double(tick_) * cfg_.tick_s;
    const double due_s = double(next_entrant_) * cfg_.entry_interval_s;
    if (now_s + 1e-9 < due_s) return;

    // Predecessor pinned at the entrance for a full entry interval is a
    // freezing event in its own right. Deferred admissions measure the
    // interval from the actual entry, not the schedule slot.
    if (next_entrant_ > 0) {
        const Customer& prev = customers_[next_entrant_ - 1];
        if (prev.live() && prev.pos == layout_.entrance) {
            if (double(tick_ - prev.entry_tick) * cfg_.tick_s >=
                cfg_.entry_interval_s - 1e-9) {
                freeze_ = FreezeKind::entrance;
                rec_.freeze = freeze_;
                rec_.freeze_tick = tick_;
                rec_.frozen_count = 1;
            }
            return;
        }
    }
    // Entrance blocked by passing traffic: hold the admission until the
    // spot is clear. Deferrals beyond the grace are recorded; a door jam
    // that never clears ends the run through the stationary rule instead.
    for (int id : live_) {
        ++rec_.distance_checks;
        if (dist(customers_[id].pos, layout_.entrance) < cfg_.social_distance) {
            if (now_s - due_s >= cfg_.grace_s() - 1e-9 && !deferral_counted_) {
                ++rec_.entrance_block_events;
                deferral_counted_ = true;
            }
            return;
        }
    }
    deferral_counted_ = false;
    spawn();
}

Vec2 World::route_target(const Customer& c, Vec2 goal) const {
    if (layout_.step_legal(c.pos, goal)) return goal;
    // Shortest detour around the display: one corner, or two adjacent ones.
    double best = std::numeric_limits<double>::infinity();
    Vec2 first_corner = goal;
    for (int i = 0; i < 4; ++i) {
        const Vec2 ci = layout_.display.corner(i);
        if (dist(c.pos, ci) < 1e-9 || !layout_.step_legal(c.pos, ci)) continue;
        if (layout_.step_legal(ci, goal)) {
            const double len = dist(c.pos, ci) + dist(ci, goal);
            if (len < best) {
                best = len;
                first_corner = ci;
            }
        }
        for (int j : {(i + 1) & 3, (i + 3) & 3}) {  // adjacent corners
            const Vec2 cj = layout_.display.corner(j);
            if (!layout_.step_legal(cj, goal)) continue;
            const double len = dist(c.pos, ci) + dist(ci, cj) + dist(cj, goal);
            if (len < best) {
                best = len;
                first_corner = ci;
            }
        }
    }
    return first_corner;
}

void World::plan_next_target(Customer& c) {
    if (c.remaining_items == 0) {
        c.heading_to_exit = true;
        c.target_item = -1;
        c.target = route_target(c, layout_.exit);
        return;
    }
    // nearest line-of-sight item wins; occluded ones wait their turn
    int best_visible = -1, best_any = -1;
    double dv = std::numeric_limits<double>::infinity();
    double da = dv;
    for (std::size_t i = 0; i < c.items.size(); ++i) {
        if (c.visited[i]) continue;
        const double d = dist(c.pos, c.items[i]);
        if (d < da) {
            da = d;
            best_any = int(i);
        }
        if (d < dv && !segment_crosses_interior(c.pos, c.items[i], layout_.display)) {
            dv = d;
            best_visible = int(i);
        }
    }
    if (best_visible >= 0) {
        c.target_item = best_visible;
        c.target = c.items[best_visible];
    } else {
        // none visible: head for the corner on the shortest way around
        c.target_item = best_any;
        c.target = route_target(c, c.items[best_any]);
    }
}

Quadrant World::classify_quadrant(const Customer& me, const Customer& other) const {
    const Vec2 v = other.last_move;
    // no movement to project: treat the standoff like a head-on encounter
    if (v.norm2() <= 0.0) return Quadrant::approaching;
    const Vec2 axis = (me.pos - other.pos).normalized();
    const Vec2 vn = v.normalized();
    const double c = dot(vn, axis);
    constexpr double kDiag = 0.70710678118654752;
    if (c >= kDiag) return Quadrant::approaching;
    if (c <= -kDiag) return Quadrant::receding;
    // side as seen by the actor facing the other
    const Vec2 a2o = (other.pos - me.pos).normalized();
    return cross(a2o, v) > 0.0 ? Quadrant::crossing_left : Quadrant::crossing_right;
}

bool World::violates(Vec2 p, const std::vector<int>& peers, int* binding, double* best_d2) {
    const double s2 = cfg_.social_distance * cfg_.social_distance;
    bool hit = false;
    double best = std::numeric_limits<double>::infinity();
    int best_id = std::numeric_limits<int>::max();
    for (int id : peers) {
        ++rec_.distance_checks;
        const double d2 = (customers_[id].pos - p).norm2();
        // id tie-break keeps the choice independent of peer iteration order
        if (d2 < s2 && (d2 < best || (d2 == best && id < best_id))) {
            best = d2;
            best_id = id;
            hit = true;
            if (binding) *binding = id;
        }
    }
    if (best_d2) *best_d2 = best;
    return hit;
}

void World::commit_move(Customer& c, Vec2 to) {
    if (to == c.pos) {
        c.last_move = Vec2{};
        return;
    }
    c.last_move = to - c.pos;
    c.pos = to;
    c.stationary_since = tick_;
}

void World::arrive(Customer& c) {
    if (c.heading_to_exit && c.pos == layout_.exit) {
        depart(c);
        return;
    }
    if (c.target_item >= 0 && c.pos == c.items[c.target_item]) {
        c.state = CustomerState::dwelling;
        c.dwell_remaining_s = cfg_.dwell_time_s;
        return;
    }
    // corner waypoint: replan from here
    if (c.heading_to_exit)
        c.target = route_target(c, layout_.exit);
    else
        plan_next_target(c);
}

void World::depart(Customer& c) {
    c.state = CustomerState::exited;
    c.exit_tick = tick_;
    live_.erase(std::find(live_.begin(), live_.end(), c.id));
    sched_.remove_customer(c.id);
    rec_.shop_times_s.push_back(double(tick_ - c.entry_tick) * cfg_.tick_s);
    rec_.completion_ids.push_back(c.id);
    rec_.completion_ticks.push_back(tick_);
    if (c.id < last_completion_id_) rec_.exit_order_inversion = true;
    last_completion_id_ = std::max(last_completion_id_, c.id);
}

void World::apply_avoidance(Customer& c, Vec2 heading, const std::vector<int>& peers,
                            int other) {
    const Quadrant q = classify_quadrant(c, customers_[other]);
    const auto& row = cfg_.avoidance.row(q);
    const std::size_t pick = rng_.pick_weighted({row[0], row[1], row[2], row[3]});
    AvoidAction action = AvoidAction(pick);
    const double step_len = cfg_.walking_speed * cfg_.tick_s;
    int depth = 0;

    auto lateral = [&](Vec2 dir) -> bool {
        const Vec2 to = c.pos + dir * step_len;
        if (!layout_.step_legal(c.pos, to)) return false;
        if (violates(to, peers, nullptr, nullptr)) return false;
        commit_move(c, to);
        return true;
    };

    bool moved = false;
    switch (action) {
        case AvoidAction::step_right:
            moved = lateral(heading.perp_right());
            break;
        case AvoidAction::step_left:
            moved = lateral(heading.perp_left());
            break;
        case AvoidAction::back: {
            const Vec2 back = heading * -1.0;
            // feasible depth against walls and display only
            int smax = 0;
            Vec2 probe = c.pos;
            for (int s = 1; s <= cfg_.max_backstep; ++s) {
                const Vec2 nxt = probe + back * step_len;
                if (!layout_.step_legal(probe, nxt)) break;
                probe = nxt;
                smax = s;
            }
            if (smax == 0) break;  // fully blocked: wait
            std::vector<double> w(static_cast<std::size_t>(smax), 0.0);
            double p = 1.0;
            for (int s = 0; s < smax; ++s) {
                p *= cfg_.backstep_decay;
                w[std::size_t(s)] = p;
            }
            depth = int(rng_.pick_weighted(w)) + 1;
            c.back_dir = back;
            if (lateral(back)) {
                moved = true;
                c.pending_backsteps = depth - 1;
            } else {
                depth = 0;  // first backstep blocked by a peer: wait instead
            }
            break;
        }
        case AvoidAction::wait:
            break;
    }
    // anything that could not be taken collapses to wait
    const AvoidAction recorded = moved ? action : AvoidAction::wait;
    if (!moved) {
        c.pending_backsteps = 0;
        c.last_move = Vec2{};
    }
    ++c.action_counts[std::size_t(recorded)];
    rec_.avoidance_events.push_back({tick_, c.id, other, recorded, moved ? depth : 0});
}

void World::update_customer(int id) {
    Customer& c = customers_[id];
    if (c.state == CustomerState::dwelling) {
        c.stationary_since = tick_;  // purposeful stationarity
        c.dwell_remaining_s -= cfg_.tick_s;
        c.last_move = Vec2{};
        if (c.dwell_remaining_s <= 1e-9) {
            c.state = CustomerState::moving;
            c.visited[std::size_t(c.target_item)] = true;
            --c.remaining_items;
            c.spend_accrued += cfg_.item_price;
            window_sum_ += cfg_.item_price;
            credit_window_[std::size_t(tick_ % std::int64_t(credit_window_.size()))] +=
                cfg_.item_price;
            plan_next_target(c);
        }
        return;
    }
    if (c.state != CustomerState::moving) return;

    const double step_len = cfg_.walking_speed * cfg_.tick_s;

    // intended step
    Vec2 intended;
    Vec2 heading;
    bool backstepping = c.pending_backsteps > 0;
    if (backstepping) {
        heading = c.back_dir * -1.0;  // nominal forward direction
        intended = c.pos + c.back_dir * step_len;
        if (!layout_.step_legal(c.pos, intended)) {
            c.pending_backsteps = 0;
            c.last_move = Vec2{};
            return;
        }
    } else {
        const Vec2 to_target = c.target - c.pos;
        const double d = to_target.norm();
        if (d <= 1e-12) {
            arrive(c);
            return;
        }
        heading = to_target.normalized();
        intended = d < step_len ? c.target : c.pos + heading * step_len;
    }

    // peers that could possibly matter this tick
    std::vector<int> peers;
    if (cfg_.naive_collisions) {
        peers.reserve(live_.size());
        for (int p : live_)
            if (p != id) peers.push_back(p);
    } else {
        const double limit = double(tick_ + 1) * cfg_.tick_s;
        peers = sched_.due_peers(id, limit);
    }
    rec_.pair_tick_budget += std::int64_t(live_.size()) - 1;

    int binding = -1;
    if (violates(intended, peers, &binding, nullptr)) {
        if (backstepping) {
            // a blocked committed backstep turns into a wait
            c.pending_backsteps = 0;
            c.last_move = Vec2{};
            ++c.action_counts[std::size_t(AvoidAction::wait)];
            rec_.avoidance_events.push_back({tick_, id, binding, AvoidAction::wait, 0});
        } else {
            apply_avoidance(c, heading, peers, binding);
        }
    } else {
        commit_move(c, intended);
        if (backstepping)
            --c.pending_backsteps;
        else if (c.pos == c.target)
            arrive(c);
    }

    if (!cfg_.naive_collisions && c.state != CustomerState::exited) refresh_pairs(id, peers);
}

void World::refresh_pairs(int id, const std::vector<int>& peers) {
    const Customer& c = customers_[id];
    const double now_s = double(tick_) * cfg_.tick_s;
    for (int p : peers) {
        if (!customers_[p].live()) continue;
        ++rec_.distance_checks;
        const double d = dist(c.pos, customers_[p].pos);
        sched_.update_pair(id, p, now_s + risk_time_for(d));
    }
}

void World::record_tick() {
    rec_.occupancy.push_back(int(live_.size()));
    rec_.completions.push_back(int(rec_.shop_times_s.size()));
    rec_.spend_rate.push_back(window_sum_ * 3600.0 / (double(credit_window_.size()) * cfg_.tick_s));
    if (tracing_) {
        for (int id : live_) {
            const Customer& c = customers_[id];
            rec_.trace.push_back({tick_, c.id, c.pos.x, c.pos.y, char(c.state)});
        }
    }
}

void World::step() {
    if (finished()) return;

    try_admission();
    if (freeze_ != FreezeKind::none) {
        record_tick();
        return;
    }

    for (std::size_t i = 0; i < live_.size();) {
        const int id = live_[i];
        update_customer(id);
        if (customers_[id].state != CustomerState::exited) ++i;
        // departures erase in place; the next live id slides into slot i
    }

    // expire the credit window slot that the next tick will reuse
    const std::int64_t nxt = (tick_ + 1) % std::int64_t(credit_window_.size());
    window_sum_ -= credit_window_[std::size_t(nxt)];
    credit_window_[std::size_t(nxt)] = 0.0;

    // stationary freeze: non-dwelling customers pinned in place too long
    int frozen = 0;
    for (int id : live_) {
        const Customer& c = customers_[id];
        if (c.state == CustomerState::moving &&
            double(tick_ - c.stationary_since) * cfg_.tick_s > cfg_.freeze_stationary_s)
            ++frozen;
    }
    if (frozen > 0) {
        freeze_ = FreezeKind::stationary;
        rec_.freeze = freeze_;
        rec_.freeze_tick = tick_;
        rec_.frozen_count = frozen;
        for (int id : live_) {
            Customer& c = customers_[id];
            if (c.state == CustomerState::moving &&
                double(tick_ - c.stationary_since) * cfg_.tick_s > cfg_.freeze_stationary_s)
                c.state = CustomerState::frozen;
        }
    }

    record_tick();
    ++tick_;
}

RunRecord World::take_record() { return std::move(rec_); }

RunRecord run_sim(const StoreLayout& layout, const SimConfig& config, std::uint64_t seed,
                  bool record_trace) {
    World w(layout, config, seed, record_trace);
    while (!w.finished()) w.step();
    return w.take_record();
}

}  // namespace shopflow
