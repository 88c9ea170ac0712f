#include "ntau/config.hpp"

#include <sstream>
#include <stdexcept>

#include "ntau/errors.hpp"

namespace ntau {

std::string coeff_mode_name(CoeffMode mode) {
    switch (mode) {
        case CoeffMode::Positive: return "positive";
        case CoeffMode::Signed: return "signed";
        case CoeffMode::Cancelling: return "cancelling";
    }
    return "signed";
}

CoeffMode coeff_mode_from_name(const std::string& name) {
    if (name == "positive") return CoeffMode::Positive;
    if (name == "signed") return CoeffMode::Signed;
    if (name == "cancelling") return CoeffMode::Cancelling;
    throw std::invalid_argument("unknown coeff_mode: " + name);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& v, std::size_t line) {
    try {
        std::size_t used = 0;
        const std::uint64_t r = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ParseError("invalid unsigned integer '" + v + "'", line, 1);
    }
}

mpq_class parse_rational(const std::string& v, std::size_t line) {
    try {
        mpq_class q(v);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw ParseError("invalid rational '" + v + "'", line, 1);
    }
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value", line_no, 1);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "seed") cfg.seed = parse_u64(value, line_no);
        else if (key == "trials") cfg.trials = parse_u64(value, line_no);
        else if (key == "k_min") cfg.k_min = parse_u64(value, line_no);
        else if (key == "k_max") cfg.k_max = parse_u64(value, line_no);
        else if (key == "m_min") cfg.m_min = parse_u64(value, line_no);
        else if (key == "m_max") cfg.m_max = parse_u64(value, line_no);
        else if (key == "t_min") cfg.t_min = parse_u64(value, line_no);
        else if (key == "t_max") cfg.t_max = parse_u64(value, line_no);
        else if (key == "exponent_bound") cfg.exponent_bound = parse_u64(value, line_no);
        else if (key == "coeff_mode") {
            try {
                cfg.coeff_mode = coeff_mode_from_name(value);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line_no, 1);
            }
        } else if (key == "c") cfg.c = parse_rational(value, line_no);
        else if (key == "expand_cap") cfg.expand_cap = parse_u64(value, line_no);
        else if (key == "dp_cap") cfg.dp_cap = parse_u64(value, line_no);
        else if (key == "jobs") cfg.jobs = static_cast<unsigned>(parse_u64(value, line_no));
        else if (key == "jsonl") cfg.jsonl_path = value;
        else if (key == "csv") cfg.csv_path = value;
        else throw ParseError("unknown key '" + key + "'", line_no, 1);
    }

    if (cfg.k_min < 1 || cfg.k_min > cfg.k_max || cfg.m_min < 1 ||
        cfg.m_min > cfg.m_max || cfg.t_min < 1 || cfg.t_min > cfg.t_max)
        throw std::invalid_argument("experiment config: ranges must be nonempty with min >= 1");
    if (!(cfg.c > 0 && cfg.c < 2))
        throw std::invalid_argument("experiment config: c must lie in (0, 2)");
    if (cfg.jobs < 1) throw std::invalid_argument("experiment config: jobs must be >= 1");
    return cfg;
}

} // namespace ntau
