#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ntau/geometry.hpp"
#include "ntau/newton_sps.hpp"

namespace ntau {

/// Experiment sweep configuration. Parsed from a flat key=value text file;
/// every key has a default; unknown keys are errors. Ranges are inclusive.
struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t k_min = 1, k_max = 3;
    std::size_t m_min = 1, m_max = 3;
    std::size_t t_min = 1, t_max = 4;
    unsigned long exponent_bound = 8;
    CoeffMode coeff_mode = CoeffMode::Signed;
    mpq_class c = mpq_class(3, 2); // must lie in (0, 2)
    std::size_t expand_cap = kDefaultExpandCap;
    std::size_t dp_cap = kDefaultDpCap;
    unsigned jobs = 1;
    std::string jsonl_path = "experiment.jsonl";
    std::string csv_path = "experiment.csv";
};

/// Parses `key = value` lines ('#' comments and blank lines allowed).
/// Throws ParseError on unknown keys or malformed values, and
/// std::invalid_argument on semantically invalid settings (empty ranges,
/// c outside (0, 2)).
ExperimentConfig parse_experiment_config(const std::string& text);

std::string coeff_mode_name(CoeffMode mode);
CoeffMode coeff_mode_from_name(const std::string& name);

} // namespace ntau
