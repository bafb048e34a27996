#pragma once

#include "tlacalc/atiyah.hpp"
#include "tlacalc/atlas.hpp"

#include <json.hpp>

#include <string>

namespace tlacalc {

using Json = nlohmann::ordered_json;

/// Malformed structured input; the message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polynomials travel as strings in the Poly::parse syntax ("3/2*x1^2 - x2").
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Scalar values as a string, kernel values as a list, endomorphisms as rows.
Json value_to_json(const FormContext& ctx, const Value& v);
Value value_from_json(const FormContext& ctx, const Json& j);

/// {"values": kind, "degree": r, "components": [{"I": [...], "J": [...], "value": ...}]}
/// with 1-based dx indices I and algebra indices J.
Json form_to_json(const MixedForm& w);
MixedForm form_from_json(ContextPtr ctx, const Json& j);

/// Named ({"name": "sl", "n": 2}, "heisenberg", {"name": "abelian", "dim": m}) or
/// explicit ({"dim": m, "brackets": [[i, j, k, "c"], ...]}, 1-based, i < j).
/// The Jacobi identity is not checked here.
LieAlgebra lie_algebra_from_json(const Json& j);
Json lie_algebra_to_json(const LieAlgebra& alg);

/// {"n": n, "shears": [[i, j, "p"], ...]} (1-based) or {"matrix": rows, "inverse": rows}.
GroupElementField group_element_from_json(const Json& j);
Json group_element_to_json(const GroupElementField& g);

/// "heisenberg", "upper_triangular:n" or {"n": n, "positions": [[i, j], ...]} (1-based).
UnipotentGroup unipotent_group_from_json(const Json& j);

/// [[A_1 coordinates], ..., [A_d coordinates]] as polynomial strings.
GaugePotential potential_from_json(const Json& j, std::size_t base_dim, std::size_t algebra_dim);

/// {"charts": [...], "transitions": [{"from": id, "to": id, ...group element...}]}.
BundleTransitions bundle_transitions_from_json(const Json& j);

} // namespace tlacalc
