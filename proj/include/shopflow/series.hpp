#pragma once

#include <limits>
#include <vector>

namespace shopflow {

// Aligned per-tick series shared by the continuous and discrete extractors.
// avg_shop_time_s is the running mean over customers who completed by t;
// total_spend_rate is the instantaneous occupancy-driven rate in currency
// per hour.
struct SeriesBundle {
    double tick_s = 1.0;
    std::vector<double> t_s;
    std::vector<double> occupancy;
    std::vector<double> completions;
    std::vector<double> avg_shop_time_s;
    std::vector<double> total_spend_rate;

    // Steady-state comparison pair, set by the discrete extractor once
    // equilibrium is known: occupancy read directly vs f times the mean
    // completed shopping time. NaN when not applicable.
    double steady_occupancy_direct = std::numeric_limits<double>::quiet_NaN();
    double steady_flow_times_shoptime = std::numeric_limits<double>::quiet_NaN();

    std::size_t size() const { return t_s.size(); }
};

}  // namespace shopflow
