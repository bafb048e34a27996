#pragma once

#include "scenario.hpp"

#include "tlacalc/sampler.hpp"

#include <string_view>

namespace tlacalc::cli {

struct CheckResult {
    bool pass = true;
    /// Number of verified instances (samples or exhaustive cases).
    std::size_t instances = 0;
    /// What failed first and the serialized defect; extra facts on success.
    Json detail = Json::object();
};

struct CheckInfo;

/// Shared state of one check execution. Each check gets its own sampler
/// seeded from the scenario seed and the check name.
struct CheckContext {
    const Scenario& scenario;
    Sampler rng;
    std::size_t samples;
    CheckResult result;

    /// Counts one instance; records the first failure with its witness.
    template <class W>
    bool expect(bool ok, const char* what, W&& witness)
    {
        ++result.instances;
        if (!ok && result.pass) {
            result.pass = false;
            result.detail["failed"] = what;
            result.detail["witness"] = witness();
        }
        return ok;
    }
    bool expect(bool ok, const char* what)
    {
        return expect(ok, what, [] { return Json(); });
    }
};

struct CheckInfo {
    const char* name;
    const char* module;
    const char* anchor;
    void (*run)(CheckContext&);
};

/// Every check in registry order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(std::string_view name);

/// Seed of a check's sampler: the scenario seed mixed with the check name.
std::uint64_t check_seed(std::uint64_t seed, std::string_view name);

/// Runs one check; DegreeCapExceeded propagates as a configuration problem.
CheckResult run_check(const CheckInfo& check, const Scenario& scenario, std::uint64_t seed, std::size_t samples);

} // namespace tlacalc::cli
