#pragma once

#include <string>
#include <vector>

#include "shopflow/series.hpp"
#include "shopflow/simulation.hpp"
#include "shopflow/sweep.hpp"

namespace shopflow {

// Numbers are serialized with 6 significant digits; every file carries its
// header row even when empty. Unwritable paths raise std::runtime_error
// with the path in the message.
std::string format_number(double v);

void write_series_csv(const SeriesBundle& series, const std::string& path);
void write_trajectory_csv(const class DiscreteTrajectory& traj, const std::string& path);
void write_run_summary_csv(const RunRecord& rec, const std::string& path);
void write_trace_csv(const RunRecord& rec, const std::string& path);

// One file per figure analog under out_dir: freeze_rate.csv, occupancy.csv,
// completions.csv, shoptime.csv, spendrate.csv, comparison.csv.
std::vector<std::string> export_csv(const SweepResult& result, const std::string& out_dir);

// Flat key=value config file; unknown keys raise, '#' starts a comment.
struct KeyValueConfig {
    std::vector<std::pair<std::string, std::string>> entries;
    static KeyValueConfig load(const std::string& path);
    const std::string* find(const std::string& key) const;
};

}  // namespace shopflow
