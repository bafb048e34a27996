#include "report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace tlacalc;
using namespace tlacalc::cli;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int list_checks(bool json)
{
    if (json) {
        Json out = Json::array();
        for (const auto& c : check_registry())
            out.push_back(Json{{"name", c.name}, {"module", c.module}, {"anchor", c.anchor}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : check_registry())
            std::cout << c.name << "\t" << c.module << "\t" << c.anchor << "\n";
    }
    return 0;
}

Scenario load_valid(const std::string& path)
{
    Scenario s = load_scenario(path);
    validate_scenario(s);
    return s;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for connections on transitive Lie algebroids"};
    app.require_subcommand(1);

    std::string path;
    RunOptions options;
    std::string format = "text";
    bool timing = false;
    auto* run = app.add_subcommand("run", "Run the checks of a scenario");
    run->add_option("scenario", path, "Scenario file")->required();
    run->add_option("--seed", options.seed, "Override the scenario seed");
    run->add_option("--samples", options.samples, "Override the number of random samples");
    run->add_option("--degree-cap", options.degree_cap, "Override the polynomial degree cap");
    run->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    run->add_flag_callback("--json", [&] { format = "json"; }, "Same as --format json");
    run->add_flag_callback("--text", [&] { format = "text"; }, "Same as --format text");
    run->add_option("--jobs,-j", options.jobs, "Checks run concurrently")->check(CLI::PositiveNumber);
    run->add_flag("--timing", timing, "Include elapsed times in the report");

    bool list_json = false;
    auto* list = app.add_subcommand("list-checks", "List the registered checks");
    list->add_flag("--json", list_json, "JSON output");

    auto* validate = app.add_subcommand("validate", "Parse and validate a scenario without running it");
    validate->add_option("scenario", path, "Scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (list->parsed())
            return list_checks(list_json);
        if (validate->parsed()) {
            Scenario s = load_valid(path);
            std::cout << "scenario " << s.name << " is valid (" << s.checks.size() << " checks)\n";
            return 0;
        }
        Scenario s = load_valid(path);
        Report r = run_scenario(s, options);
        std::cout << (format == "json" ? render_json(r, timing) : render_text(r, timing));
        return r.all_pass() ? 0 : kExitFail;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitConfig;
}
