#include "scenario.hpp"

#include "checks.hpp"

#include <fstream>
#include <sstream>

namespace tlacalc::cli {

namespace {

template <class F>
auto in_field(const char* key, F&& f)
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(std::string(key) + ": " + e.what());
    } catch (const Json::exception& e) {
        throw ParseError(std::string(key) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(key) + ": " + e.what());
    }
}

std::size_t to_size(const Json& j, const char* key)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(std::string(key) + ": expected a non-negative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

} // namespace

Scenario parse_scenario(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("syntax error at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        throw ParseError("scenario must be an object");
    static const std::vector<std::string> known = {"name",  "base_dim", "degree_cap", "lie_algebra", "potential",
                                                   "gauge", "atlas",    "group",      "matrix_size", "checks",
                                                   "seed",  "samples",  "description"};
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError("unknown field '" + key + "'");

    Scenario s;
    s.name = in_field("name", [&] { return j.at("name").get<std::string>(); });
    if (j.contains("base_dim"))
        s.base_dim = to_size(j["base_dim"], "base_dim");
    if (j.contains("degree_cap"))
        s.degree_cap = static_cast<int>(to_size(j["degree_cap"], "degree_cap"));
    s.algebra = in_field("lie_algebra",
                         [&] { return std::make_shared<const LieAlgebra>(lie_algebra_from_json(j.at("lie_algebra"))); });
    if (j.contains("potential"))
        s.potential = in_field("potential",
                               [&] { return potential_from_json(j["potential"], s.base_dim, s.algebra->dim()); });
    if (j.contains("gauge"))
        in_field("gauge", [&] {
            for (const auto& g : j["gauge"])
                s.gauge_elements.push_back(group_element_from_json(g));
            return 0;
        });
    if (j.contains("atlas"))
        s.atlas = in_field("atlas", [&] { return bundle_transitions_from_json(j["atlas"]); });
    if (j.contains("group"))
        s.group = in_field("group", [&] { return unipotent_group_from_json(j["group"]); });
    if (j.contains("matrix_size"))
        s.matrix_size = to_size(j["matrix_size"], "matrix_size");
    s.checks = in_field("checks", [&] { return j.at("checks").get<std::vector<std::string>>(); });
    if (j.contains("seed"))
        s.seed = to_size(j["seed"], "seed");
    if (j.contains("samples"))
        s.samples = to_size(j["samples"], "samples");
    return s;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void validate_scenario(const Scenario& s)
{
    if (s.base_dim > kMaxVars)
        throw ConfigError("base_dim exceeds the supported number of variables");
    if (s.algebra->dim() == 0)
        throw ConfigError("Lie algebra has dimension 0");
    if (auto bad = jacobi_violation(*s.algebra))
        throw ConfigError("Lie algebra fails the Jacobi identity at basis triple (" + std::to_string((*bad)[0] + 1) +
                          ", " + std::to_string((*bad)[1] + 1) + ", " + std::to_string((*bad)[2] + 1) + ")");
    if (s.base_dim + s.algebra->dim() > 32)
        throw ConfigError("base_dim plus algebra dimension exceeds 32 form generators");
    if (s.degree_cap < 1)
        throw ConfigError("degree_cap must be positive");
    if (s.matrix_size < 2 || s.matrix_size > 4)
        throw ConfigError("matrix_size must be between 2 and 4");
    if (s.checks.empty())
        throw ConfigError("scenario lists no checks");
    for (const auto& c : s.checks)
        if (!find_check(c))
            throw ConfigError("unknown check '" + c + "'");
    if (s.group) {
        if (s.base_dim + 3 * s.group->dim() > kMaxVars)
            throw ConfigError("group has too many coordinates for the base dimension");
        if (s.group->algebra()->structure_constants() != s.algebra->structure_constants())
            throw ConfigError("lie_algebra does not match the Lie algebra of the group");
    }
    std::size_t gauge_n = s.algebra->has_matrix_basis() ? s.algebra->matrix_size() : 2;
    for (const auto& g : s.gauge_elements)
        if (g.size() != gauge_n)
            throw ConfigError("gauge element size " + std::to_string(g.size()) + " does not match the representation size " +
                              std::to_string(gauge_n));
    if (s.atlas) {
        if (s.atlas->charts.empty())
            throw ConfigError("atlas has no charts");
        try {
            complete_bundle_transitions(*s.atlas);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("atlas: ") + e.what());
        }
    }
}

} // namespace tlacalc::cli
