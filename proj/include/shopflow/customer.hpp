#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "shopflow/geometry.hpp"

namespace shopflow {

enum class CustomerState : char { moving = 'm', dwelling = 'd', exited = 'x', frozen = 'f' };

struct Customer {
    int id = -1;  // entry order
    std::int64_t entry_tick = 0;

    std::vector<Vec2> items;
    std::vector<bool> visited;
    int remaining_items = 0;

    Vec2 pos;
    CustomerState state = CustomerState::moving;
    double dwell_remaining_s = 0.0;

    Vec2 target;                  // current item, corner waypoint, or exit
    int target_item = -1;         // index into items; -1 for waypoint/exit
    bool heading_to_exit = false;

    std::int64_t stationary_since = 0;  // last tick the position changed or a dwell ended
    double spend_accrued = 0.0;
    Vec2 last_move;  // most recent actual displacement (zero when waiting)
    int pending_backsteps = 0;
    Vec2 back_dir;

    std::array<int, 4> action_counts{};  // R, L, B, W
    std::int64_t exit_tick = -1;

    bool live() const {
        return state == CustomerState::moving || state == CustomerState::dwelling;
    }
};

}  // namespace shopflow
