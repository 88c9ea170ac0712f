#include "ntau/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ntau/errors.hpp"
#include "ntau/io_json.hpp"
#include "ntau/rng.hpp"
#include "ntau/version.hpp"

namespace ntau {

using nlohmann::json;

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json config_echo(const ExperimentConfig& cfg) {
    return json{{"seed", std::to_string(cfg.seed)},
                {"trials", std::to_string(cfg.trials)},
                {"k_min", std::to_string(cfg.k_min)},
                {"k_max", std::to_string(cfg.k_max)},
                {"m_min", std::to_string(cfg.m_min)},
                {"m_max", std::to_string(cfg.m_max)},
                {"t_min", std::to_string(cfg.t_min)},
                {"t_max", std::to_string(cfg.t_max)},
                {"exponent_bound", std::to_string(cfg.exponent_bound)},
                {"coeff_mode", coeff_mode_name(cfg.coeff_mode)},
                {"c", cfg.c.get_str()},
                {"expand_cap", std::to_string(cfg.expand_cap)},
                {"dp_cap", std::to_string(cfg.dp_cap)}};
}

struct TrialResult {
    std::string line;
    bool cap_error = false;
    bool containment_failed = false;
    std::size_t k = 0, m = 0, t = 0, edges = 0, envelope_edges = 0;
    EdgeReport report;
    bool has_report = false;
};

TrialResult run_trial(const ExperimentConfig& cfg, std::size_t index) {
    TrialResult out;
    const std::uint64_t trial_seed = derive_seed(cfg.seed, index);
    Rng rng(trial_seed);
    const auto k = static_cast<std::size_t>(
        rng.range(static_cast<long>(cfg.k_min), static_cast<long>(cfg.k_max)));
    const auto m = static_cast<std::size_t>(
        rng.range(static_cast<long>(cfg.m_min), static_cast<long>(cfg.m_max)));
    const auto t = static_cast<std::size_t>(
        rng.range(static_cast<long>(cfg.t_min), static_cast<long>(cfg.t_max)));
    out.k = k;
    out.m = m;
    out.t = t;

    json record{{"record", "trial"},
                {"trial", std::to_string(index)},
                {"seed", std::to_string(trial_seed)}};
    try {
        const SpsExpression expr =
            random_sps(k, m, t, cfg.exponent_bound, cfg.coeff_mode, rng.next());
        const EdgeReport report = sps_edge_report(expr, cfg.c, cfg.expand_cap);
        record["report"] = edge_report_to_json(report);
        record["expression"] = sps_to_json(expr);
        out.report = report;
        out.has_report = true;
        out.edges = report.edges;
        out.envelope_edges = report.envelope_edges;
        out.containment_failed = !report.containment_ok;
    } catch (const CapExceeded& e) {
        record["error"] = std::string("cap_exceeded: ") + e.what();
        out.cap_error = true;
    }
    out.line = record.dump();
    return out;
}

} // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
    std::vector<TrialResult> results(cfg.trials);
    const unsigned workers =
        std::min<unsigned>(cfg.jobs, std::max<unsigned>(1, std::thread::hardware_concurrency()));

    if (workers <= 1 || cfg.trials <= 1) {
        for (std::size_t i = 0; i < cfg.trials; ++i) results[i] = run_trial(cfg, i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cfg.trials) break;
                    results[i] = run_trial(cfg, i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    ExperimentOutcome outcome;
    outcome.trials_run = cfg.trials;

    std::ostringstream jsonl;
    json header{{"record", "config"},
                {"config", config_echo(cfg)},
                {"version", kVersion},
                {"timestamp", utc_timestamp()}};
    jsonl << header.dump() << '\n';
    for (const auto& r : results) {
        jsonl << r.line << '\n';
        if (r.cap_error) ++outcome.cap_errors;
        if (r.containment_failed) ++outcome.containment_failures;
    }
    outcome.jsonl = jsonl.str();

    // summary: max observed edges per (k, m, t) cell next to each bound
    struct Cell {
        std::size_t trials = 0, failures = 0, max_edges = 0, max_envelope = 0;
        EdgeReport sample;
        bool has_sample = false;
    };
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Cell> cells;
    for (const auto& r : results) {
        if (!r.has_report) continue;
        Cell& cell = cells[{r.k, r.m, r.t}];
        ++cell.trials;
        if (r.containment_failed) ++cell.failures;
        cell.max_edges = std::max(cell.max_edges, r.edges);
        cell.max_envelope = std::max(cell.max_envelope, r.envelope_edges);
        if (!cell.has_sample) {
            cell.sample = r.report;
            cell.has_sample = true;
        }
    }
    std::ostringstream csv;
    csv << "k,m,t,trials,max_edges,max_envelope_edges,bound_no_cancel,"
           "bound_2polys,bound_mpolys,bound_weak,containment_failures\n";
    for (const auto& [key, cell] : cells) {
        const auto& [k, m, t] = key;
        char b2[64], bm[64], bw[64];
        std::snprintf(b2, sizeof(b2), "%.6g", cell.sample.bound_2polys);
        std::snprintf(bm, sizeof(bm), "%.6g", cell.sample.bound_mpolys);
        std::snprintf(bw, sizeof(bw), "%.6g", cell.sample.bound_weak);
        csv << k << ',' << m << ',' << t << ',' << cell.trials << ','
            << cell.max_edges << ',' << cell.max_envelope << ','
            << cell.sample.bound_no_cancel.get_str() << ',' << b2 << ',' << bm << ','
            << bw << ',' << cell.failures << '\n';
    }
    outcome.csv = csv.str();
    return outcome;
}

std::string strip_timestamps(const std::string& jsonl) {
    std::istringstream in(jsonl);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        j.erase("timestamp");
        out << j.dump() << '\n';
    }
    return out.str();
}

} // namespace ntau
