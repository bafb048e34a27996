#pragma once

#include "tlacalc/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tlacalc::cli {

/// A scenario that parsed but describes an invalid instance (bad algebra,
/// unknown check, non-multiplicative atlas, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Scenario {
    std::string name;
    std::size_t base_dim = 2;
    int degree_cap = 6;
    LieAlgebraPtr algebra;
    std::optional<GaugePotential> potential;
    std::vector<GroupElementField> gauge_elements;
    std::optional<BundleTransitions> atlas;
    std::optional<UnipotentGroup> group;
    /// Matrix size for the noncommutative checks.
    std::size_t matrix_size = 2;
    std::vector<std::string> checks;
    std::uint64_t seed = 1;
    std::size_t samples = 25;
};

/// Parses a scenario document; throws ParseError with the location on malformed input.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Checks that every referenced object is valid; throws ConfigError otherwise.
void validate_scenario(const Scenario& s);

} // namespace tlacalc::cli
