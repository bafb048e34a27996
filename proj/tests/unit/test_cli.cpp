#include <doctest.h>

#include "report.hpp"

#include <filesystem>
#include <set>

using namespace tlacalc;
using namespace tlacalc::cli;

namespace {

std::vector<Scenario> corpus()
{
    std::vector<Scenario> out;
    for (const auto& entry : std::filesystem::directory_iterator(TLACALC_SCENARIO_DIR))
        if (entry.path().extension() == ".json")
            out.push_back(load_scenario(entry.path().string()));
    return out;
}

const char* kMinimal = R"({"name": "t", "lie_algebra": "sl2", "checks": ["bianchi"]})";

} // namespace

TEST_CASE("registry names are unique and carry module and anchor")
{
    std::set<std::string> names;
    for (const auto& c : check_registry()) {
        CHECK(names.insert(c.name).second);
        CHECK(std::string(c.anchor).size() > 0);
        CHECK(std::set<std::string>{"tla_forms", "connections", "ncg", "atiyah_model", "atlas"}.count(c.module) == 1);
    }
    CHECK(std::string(find_check("bianchi")->anchor) == "It satisfies the Bianchi identity");
    CHECK(std::string(find_check("theorem_three_spaces")->anchor) == "The following three spaces are isomorphic");
    CHECK(std::string(find_check("maurer_cartan_matrix")->anchor) == "d′(iθ) − (iθ)² = 0");
    CHECK(find_check("no_such_check") == nullptr);
}

TEST_CASE("every registered check appears in a corpus scenario")
{
    std::set<std::string> used;
    for (const auto& s : corpus()) {
        validate_scenario(s);
        used.insert(s.checks.begin(), s.checks.end());
    }
    for (const auto& c : check_registry())
        CHECK_MESSAGE(used.count(c.name) == 1, c.name);
}

TEST_CASE("parse errors name the location or field")
{
    try {
        parse_scenario("{\"name\": \"t\",\n \"lie_algebra\": }");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"name": "t", "lie_algebra": "sl2", "checks": [], "colour": 1})"),
                         doctest::Contains("colour"), ParseError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"name": "t", "lie_algebra": "sl2", "potential": [["1"]], "checks": []})"),
                         doctest::Contains("potential"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"name": "t", "checks": []})"), ParseError);
}

TEST_CASE("validation rejects inconsistent scenarios before any check runs")
{
    Scenario s = parse_scenario(kMinimal);
    CHECK_NOTHROW(validate_scenario(s));

    Scenario unknown = s;
    unknown.checks = {"bianchi", "curvature_of_everything"};
    CHECK_THROWS_WITH_AS(validate_scenario(unknown), doctest::Contains("curvature_of_everything"), ConfigError);

    Scenario jacobi = parse_scenario(
        R"({"name": "t", "lie_algebra": {"dim": 3, "brackets": [[1, 2, 3, "1"], [1, 3, 1, "1"]]}, "checks": ["bianchi"]})");
    CHECK_THROWS_WITH_AS(validate_scenario(jacobi), doctest::Contains("Jacobi"), ConfigError);

    Scenario gauge = parse_scenario(
        R"({"name": "t", "lie_algebra": "sl2", "gauge": [{"n": 3, "shears": [[1, 2, "x1"]]}], "checks": ["finite_gauge"]})");
    CHECK_THROWS_AS(validate_scenario(gauge), ConfigError);

    Scenario group = parse_scenario(R"({"name": "t", "lie_algebra": "sl2", "group": "heisenberg", "checks": ["group_law"]})");
    CHECK_THROWS_WITH_AS(validate_scenario(group), doctest::Contains("group"), ConfigError);

    Scenario atlas = parse_scenario(R"({"name": "t", "lie_algebra": "sl2", "checks": ["cocycle"],
        "atlas": {"charts": ["U", "V", "W"], "transitions": [
          {"from": "U", "to": "V", "n": 2, "shears": [[1, 2, "x1"]]},
          {"from": "V", "to": "W", "n": 2, "shears": [[1, 2, "1"]]},
          {"from": "U", "to": "W", "n": 2, "shears": [[2, 1, "1"]]}]}})");
    CHECK_THROWS_WITH_AS(validate_scenario(atlas), doctest::Contains("atlas"), ConfigError);
}

TEST_CASE("reports are deterministic and independent of the job count")
{
    Scenario s = load_scenario(std::string(TLACALC_SCENARIO_DIR) + "/sl2_basic.json");
    RunOptions one, four;
    four.jobs = 4;
    std::string a = render_json(run_scenario(s, one), false);
    CHECK(a == render_json(run_scenario(s, one), false));
    CHECK(a == render_json(run_scenario(s, four), false));
    RunOptions other;
    other.seed = 99;
    CHECK(render_json(run_scenario(s, other), false) != a);
}

TEST_CASE("exceeding the degree cap is a configuration error, not a failure")
{
    Scenario s = parse_scenario(R"({"name": "t", "lie_algebra": "sl2", "checks": ["bianchi"], "degree_cap": 1})");
    CHECK_THROWS_WITH_AS(run_scenario(s, {}), doctest::Contains("bianchi"), ConfigError);
    int before = degree_cap();
    try {
        run_scenario(s, {});
    } catch (const ConfigError&) {
    }
    CHECK(degree_cap() == before);
}

TEST_CASE("a failing expectation records the first witness")
{
    Scenario s = parse_scenario(kMinimal);
    CheckContext c{s, Sampler(1), 1, {}};
    c.expect(true, "holds");
    c.expect(false, "first", [] { return Json("w1"); });
    c.expect(false, "second", [] { return Json("w2"); });
    CHECK_FALSE(c.result.pass);
    CHECK(c.result.instances == 3);
    CHECK(c.result.detail["failed"] == "first");
    CHECK(c.result.detail["witness"] == "w1");
}

TEST_CASE("the perturbed atlas is reported with a triple through the perturbed pair")
{
    Scenario s = load_scenario(std::string(TLACALC_SCENARIO_DIR) + "/atlas_shear.json");
    CheckResult r = run_check(*find_check("cocycle"), s, s.seed, 3);
    REQUIRE(r.pass);
    Json triple = r.detail["perturbed_triple"];
    REQUIRE(triple.size() == 3);
    std::set<std::string> charts(triple.begin(), triple.end());
    CHECK(charts.count("U") == 1);
    CHECK(charts.count("V") == 1);
    CHECK(r.detail["perturbed_relation"] == "chi");
}
