#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace tlacalc::cli {

bool Report::all_pass() const
{
    for (const auto& o : outcomes)
        if (!o.result.pass)
            return false;
    return true;
}

Report run_scenario(const Scenario& s, const RunOptions& options)
{
    Report r{s.name, options.seed.value_or(s.seed), options.samples.value_or(s.samples),
             options.degree_cap.value_or(s.degree_cap), {}};
    if (r.degree_cap < 1)
        throw ConfigError("degree cap must be positive");
    for (const auto& name : s.checks) {
        const CheckInfo* c = find_check(name);
        if (!c)
            throw ConfigError("unknown check '" + name + "'");
        r.outcomes.push_back({c, {}, 0});
    }
    // Registry order, so the report does not depend on how the scenario lists its checks.
    auto rank = [](const CheckInfo* c) { return c - check_registry().data(); };
    std::sort(r.outcomes.begin(), r.outcomes.end(),
              [&](const CheckOutcome& a, const CheckOutcome& b) { return rank(a.check) < rank(b.check); });
    r.outcomes.erase(std::unique(r.outcomes.begin(), r.outcomes.end(),
                                 [](const CheckOutcome& a, const CheckOutcome& b) { return a.check == b.check; }),
                     r.outcomes.end());

    ScopedDegreeCap cap(r.degree_cap);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < r.outcomes.size();) {
            auto& o = r.outcomes[i];
            try {
                auto start = std::chrono::steady_clock::now();
                o.result = run_check(*o.check, s, r.seed, r.samples);
                o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            } catch (const DegreeCapExceeded& e) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::make_exception_ptr(
                        ConfigError(std::string("check '") + o.check->name + "': " + e.what()));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, r.outcomes.size()));
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < jobs; ++t)
        threads.emplace_back(worker);
    worker();
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return r;
}

std::string render_json(const Report& r, bool timing)
{
    Json checks = Json::array();
    for (const auto& o : r.outcomes) {
        Json c{{"name", o.check->name},
               {"module", o.check->module},
               {"anchor", o.check->anchor},
               {"status", o.result.pass ? "pass" : "fail"},
               {"instances", o.result.instances},
               {"detail", o.result.detail}};
        if (timing)
            c["seconds"] = o.seconds;
        checks.push_back(std::move(c));
    }
    Json out{{"scenario", r.scenario},
             {"seed", r.seed},
             {"samples", r.samples},
             {"degree_cap", r.degree_cap},
             {"status", r.all_pass() ? "pass" : "fail"},
             {"checks", checks}};
    return out.dump(2) + "\n";
}

std::string render_text(const Report& r, bool timing)
{
    std::ostringstream out;
    out << "scenario " << r.scenario << " (seed " << r.seed << ", samples " << r.samples << ", degree cap "
        << r.degree_cap << ")\n";
    std::size_t passed = 0;
    for (const auto& o : r.outcomes) {
        out << (o.result.pass ? "PASS " : "FAIL ") << o.check->name << " [" << o.check->module << "] "
            << o.result.instances << " instances";
        if (timing)
            out << " " << o.seconds << "s";
        out << "\n";
        if (!o.result.pass)
            out << "  " << o.result.detail.dump() << "\n";
        passed += o.result.pass;
    }
    out << passed << "/" << r.outcomes.size() << " checks passed\n";
    return out.str();
}

} // namespace tlacalc::cli
