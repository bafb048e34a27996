#pragma once

#include "checks.hpp"

#include <optional>

namespace tlacalc::cli {

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<int> degree_cap;
    std::size_t jobs = 1;
};

struct CheckOutcome {
    const CheckInfo* check;
    CheckResult result;
    double seconds = 0;
};

struct Report {
    std::string scenario;
    std::uint64_t seed;
    std::size_t samples;
    int degree_cap;
    /// In registry order.
    std::vector<CheckOutcome> outcomes;

    bool all_pass() const;
};

/// Runs the scenario's checks. A check that exceeds the degree cap makes the
/// whole run a ConfigError, since the instance is outside the supported range.
Report run_scenario(const Scenario& s, const RunOptions& options);

/// Reports are byte-identical across runs unless timings are requested.
std::string render_json(const Report& r, bool timing);
std::string render_text(const Report& r, bool timing);

} // namespace tlacalc::cli
