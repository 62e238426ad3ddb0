#include "shopflow/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shopflow/discrete.hpp"

namespace shopflow {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

void write_series_csv(const SeriesBundle& s, const std::string& path) {
    std::ofstream out = open_or_throw(path);
    out << "t_seconds,occupancy,completions,avg_shop_time_s,total_spend_rate\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out << format_number(s.t_s[i]) << ',' << format_number(s.occupancy[i]) << ','
            << format_number(s.completions[i]) << ',' << format_number(s.avg_shop_time_s[i])
            << ',' << format_number(s.total_spend_rate[i]) << '\n';
}

void write_trajectory_csv(const DiscreteTrajectory& traj, const std::string& path) {
    std::ofstream out = open_or_throw(path);
    out << "r,J_r,K_r,L_r,g_r\n";
    for (int r = 1; r <= traj.customers; ++r)
        out << r << ',' << traj.exit_index[r] << ',' << traj.departed[r] << ','
            << traj.occupancy_entry[r] << ',' << (r >= 2 ? traj.eq_gap[r] : 0) << '\n';
}

void write_run_summary_csv(const RunRecord& rec, const std::string& path) {
    std::ofstream out = open_or_throw(path);
    out << "tick,occupancy,completions,spend_rate\n";
    for (std::size_t t = 0; t < rec.occupancy.size(); ++t)
        out << t << ',' << rec.occupancy[t] << ',' << rec.completions[t] << ','
            << format_number(rec.spend_rate[t]) << '\n';
}

void write_trace_csv(const RunRecord& rec, const std::string& path) {
    std::ofstream out = open_or_throw(path);
    out << "tick,customer_id,x,y,state\n";
    for (const TraceRow& row : rec.trace)
        out << row.tick << ',' << row.id << ',' << format_number(row.x) << ','
            << format_number(row.y) << ',' << row.state << '\n';
}

std::vector<std::string> export_csv(const SweepResult& result, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + out_dir + ": " + ec.message());

    std::vector<std::string> written;
    auto path = [&](const char* name) { return (fs::path(out_dir) / name).string(); };

    {
        std::ofstream out = open_or_throw(path("freeze_rate.csv"));
        out << "delta_s,attempts,successes,freeze_rate\n";
        for (const DeltaResult& d : result.per_delta)
            out << format_number(d.delta_s) << ',' << d.attempts << ',' << d.successes << ','
                << format_number(d.freeze_rate) << '\n';
        written.push_back(path("freeze_rate.csv"));
    }
    {
        std::ofstream out = open_or_throw(path("occupancy.csv"));
        out << "delta_s,t_s,mean_occupancy\n";
        for (const DeltaResult& d : result.per_delta)
            for (std::size_t t = 0; t < d.mean_occupancy.size(); ++t)
                out << format_number(d.delta_s) << ','
                    << format_number(double(t) * result.spec.sim.tick_s) << ','
                    << format_number(d.mean_occupancy[t]) << '\n';
        written.push_back(path("occupancy.csv"));
    }
    {
        std::ofstream out = open_or_throw(path("completions.csv"));
        out << "delta_s,mean_completed\n";
        for (const DeltaResult& d : result.per_delta)
            out << format_number(d.delta_s) << ',' << format_number(d.mean_completions) << '\n';
        written.push_back(path("completions.csv"));
    }
    {
        std::ofstream out = open_or_throw(path("shoptime.csv"));
        out << "delta_s,mean_shop_time_s\n";
        for (const DeltaResult& d : result.per_delta)
            out << format_number(d.delta_s) << ',' << format_number(d.mean_shop_time_s) << '\n';
        written.push_back(path("shoptime.csv"));
    }
    {
        std::ofstream out = open_or_throw(path("spendrate.csv"));
        out << "delta_s,t_s,mean_spend_rate\n";
        for (const DeltaResult& d : result.per_delta)
            for (std::size_t t = 0; t < d.mean_spend_rate.size(); ++t)
                out << format_number(d.delta_s) << ','
                    << format_number(double(t) * result.spec.sim.tick_s) << ','
                    << format_number(d.mean_spend_rate[t]) << '\n';
        written.push_back(path("spendrate.csv"));
    }
    {
        std::ofstream out = open_or_throw(path("comparison.csv"));
        out << "delta_s,analytic_occupancy,analytic_shop_time_s,discrete_steady_occupancy,"
               "sim_tail_occupancy,littles_residual,analytic_class,discrete_class,sim_class\n";
        for (const ComparisonRow& row : compare_models(result)) {
            auto opt = [](const auto& o) {
                return o ? format_number(double(*o)) : std::string();
            };
            out << format_number(row.delta_s) << ',' << opt(row.analytic_occupancy) << ','
                << opt(row.analytic_shop_time_s) << ',' << opt(row.discrete_steady_occupancy)
                << ',' << opt(row.sim_tail_occupancy) << ',' << opt(row.littles_residual) << ','
                << row.analytic_class << ',' << row.discrete_class << ',' << row.sim_class
                << '\n';
        }
        written.push_back(path("comparison.csv"));
    }
    return written;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    KeyValueConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        cfg.entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

const std::string* KeyValueConfig::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

}  // namespace shopflow
