#pragma once

#include <string>

#include "ntau/config.hpp"

namespace ntau {

struct ExperimentOutcome {
    std::size_t trials_run = 0;
    std::size_t cap_errors = 0;
    std::size_t containment_failures = 0;
    std::string jsonl; // header record + one record per trial
    std::string csv;   // per-(k,m,t) summary
};

/// Runs the sweep. Trial i derives its seed as derive_seed(config.seed, i),
/// so results are independent of execution order; with jobs > 1 trials run
/// concurrently and lines are still emitted in trial order. Cap overruns
/// are recorded per trial and the run continues.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

/// Identical output with the volatile fields (timestamp) removed; what
/// replays are compared against.
std::string strip_timestamps(const std::string& jsonl);

} // namespace ntau
