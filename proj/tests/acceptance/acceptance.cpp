// End-to-end acceptance: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include "report.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace tlacalc;
using namespace tlacalc::cli;

namespace {

struct Tally {
    bool pass = true;
    std::size_t instances = 0;
    std::string first_failure;

    void add(const Report& r)
    {
        for (const auto& o : r.outcomes) {
            instances += o.result.instances;
            if (!o.result.pass && pass) {
                pass = false;
                first_failure = r.scenario + "/" + o.check->name + ": " + o.result.detail.dump();
            }
        }
    }
    void fail(const std::string& why)
    {
        if (pass)
            first_failure = why;
        pass = false;
    }
};

/// Builds and runs an in-memory scenario.
void run(Tally& t, const std::string& name, const std::string& algebra, const std::vector<std::string>& checks,
         std::size_t samples = 25, const std::string& extra = "")
{
    Json checks_json = checks;
    std::string text = R"({"name": ")" + name + R"(", "base_dim": 2, "lie_algebra": )" + algebra +
                       R"(, "samples": )" + std::to_string(samples) + R"(, "checks": )" + checks_json.dump() + extra +
                       "}";
    Scenario s = parse_scenario(text);
    validate_scenario(s);
    t.add(run_scenario(s, {}));
}

const std::string kSl2 = R"("sl2")";
const std::string kSl3 = R"("sl3")";
const std::string kHeis = R"("heisenberg")";
const std::string kAbelian = R"({"name": "abelian", "dim": 3})";

/// Runs a command, returning its exit status and standard output.
std::pair<int, std::string> capture(const std::string& command)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return {-1, out};
    std::array<char, 4096> buf;
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Tally cli_determinism()
{
    Tally t;
    for (const auto& entry : std::filesystem::directory_iterator(TLACALC_SCENARIO_DIR)) {
        if (entry.path().extension() != ".json")
            continue;
        std::string cmd = std::string("\"") + TLACALC_BINARY + "\" run --json \"" + entry.path().string() + "\"";
        auto [code1, out1] = capture(cmd);
        auto [code2, out2] = capture(cmd + " --jobs 4");
        ++t.instances;
        if (code1 != 0 || code2 != 0)
            t.fail(entry.path().filename().string() + " exited with " + std::to_string(code1));
        else if (out1 != out2 || out1.empty())
            t.fail(entry.path().filename().string() + " produced differing reports");
    }
    auto [code, out] = capture(std::string("\"") + TLACALC_BINARY + "\" validate \"" + TLACALC_SCENARIO_DIR +
                               "/invalid/broken_jacobi.json\" 2>/dev/null");
    ++t.instances;
    if (code != 2)
        t.fail("broken Jacobi scenario exited with " + std::to_string(code));
    return t;
}

} // namespace

int main()
{
    const std::string atlas = R"(, "atlas": {"charts": ["U", "V", "W"], "transitions": [
        {"from": "U", "to": "V", "n": 2, "shears": [[1, 2, "x1"]]},
        {"from": "V", "to": "W", "n": 2, "shears": [[2, 1, "3"]]}]})";
    const std::string potential = R"(, "potential": [["0", "0", "0"], ["0", "x1", "0"]])";

    std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
        {"cochain condition d^2 = 0 for scalar, kernel and endo values",
         [] {
             Tally t;
             for (const auto& alg : {kSl2, kHeis, kAbelian})
                 run(t, "d_squared", alg, {"d_squared"});
             return t;
         }},
        {"Cartan relations",
         [] {
             Tally t;
             for (const auto& alg : {kSl2, kHeis})
                 run(t, "cartan", alg, {"cartan_relations"});
             return t;
         }},
        {"connection suite on sl2 and abelian kernels",
         [&] {
             Tally t;
             std::vector<std::string> checks{"normalization", "curvature_oracle", "curvature_horizontal", "bianchi",
                                             "covariant_square"};
             run(t, "connections_sl2", kSl2, checks, 25, potential);
             run(t, "connections_abelian", kAbelian, checks);
             return t;
         }},
        {"the splitting -theta is flat",
         [] {
             Tally t;
             for (const auto& alg : {kSl2, kSl3, kHeis, kAbelian})
                 run(t, "flat", alg, {"flat_connection"});
             return t;
         }},
        {"matrix NCG identities for n = 2, 3",
         [] {
             Tally t;
             std::vector<std::string> checks{"maurer_cartan_matrix", "degree_zero_relation", "higher_degree_witness"};
             run(t, "ncg_n2", kSl2, checks, 25, R"(, "matrix_size": 2)");
             run(t, "ncg_n3", kSl3, checks, 25, R"(, "matrix_size": 3)");
             return t;
         }},
        {"NC curvature and gauge conjugation",
         [] {
             Tally t;
             for (int n : {2, 3}) {
                 std::string size = R"(, "matrix_size": )" + std::to_string(n);
                 run(t, "nc_curvature", kSl2, {"nc_curvature"}, 25, size);
                 run(t, "nc_gauge", kSl2, {"nc_gauge"}, 10, size);
             }
             return t;
         }},
        {"connection space identifications commute with curvature and gauge",
         [] {
             Tally t;
             run(t, "theorems", kSl2, {"theorem_three_spaces", "theorem_traceless"});
             return t;
         }},
        {"Atiyah model of the Heisenberg group",
         [] {
             Tally t;
             std::string group = R"(, "group": "heisenberg")";
             run(t, "atiyah", kHeis, {"group_law", "equ_cartan", "lambda_restrict", "curvature_correspondence"}, 25,
                 group);
             run(t, "atiyah_basic", kHeis, {"connection_hat_basic"}, 10, group);
             return t;
         }},
        {"atlas cocycle, gluing and transition formulas",
         [&] {
             Tally t;
             run(t, "atlas", kSl2, {"cocycle", "glue"}, 25, atlas);
             run(t, "atlas_chi", kSl2, {"chi_formulas"}, 10, atlas);
             return t;
         }},
        {"CLI reports are byte-identical and the corpus passes", cli_determinism},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        try {
            t = criteria[i].second();
        } catch (const std::exception& e) {
            t.fail(e.what());
        }
        all = all && t.pass;
        std::cout << (t.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " (" << t.instances
                  << " instances)\n";
        if (!t.pass)
            std::cout << "     " << t.first_failure << "\n";
    }
    return all ? 0 : 1;
}
