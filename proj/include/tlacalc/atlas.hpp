#pragma once

#include "tlacalc/fields.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tlacalc {

/// Transition data of a Lie algebroid atlas over charts sharing one
/// coordinate ring. For every ordered pair (i, j):
///   alpha_ij: m x m matrix acting on algebra coordinates,
///   chi_ij:   chi_ij(d/dx_mu) for each base coordinate mu.
class TransitionData {
public:
    struct Pair {
        PolyMatrix alpha;
        std::vector<GammaField> chi;
    };

    TransitionData(std::size_t base_dim, LieAlgebraPtr algebra, std::vector<std::string> charts);

    std::size_t base_dim() const noexcept { return base_dim_; }
    const LieAlgebra& algebra() const noexcept { return *algebra_; }
    const LieAlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
    std::size_t num_charts() const noexcept { return charts_.size(); }
    const std::vector<std::string>& charts() const noexcept { return charts_; }
    std::size_t chart_index(const std::string& id) const;

    void set(std::size_t i, std::size_t j, Pair data);
    bool has(std::size_t i, std::size_t j) const { return pairs_.count({i, j}) != 0; }
    const Pair& get(std::size_t i, std::size_t j) const;
    Pair& get(std::size_t i, std::size_t j);

    GammaField apply_alpha(std::size_t i, std::size_t j, const GammaField& g) const;
    /// chi_ij(X) = sum_mu X^mu chi_ij(d/dx_mu).
    GammaField apply_chi(std::size_t i, std::size_t j, const PolyVectorField& x) const;

private:
    std::size_t base_dim_;
    LieAlgebraPtr algebra_;
    std::vector<std::string> charts_;
    std::map<std::pair<std::size_t, std::size_t>, Pair> pairs_;
};

/// Generating group-valued transition functions g_ij. Missing pairs are
/// completed by g_ii = 1, g_ji = g_ij^-1 and products through other charts;
/// the completed family must satisfy g_ij g_jk = g_ik on every triple.
struct BundleTransitions {
    std::vector<std::string> charts;
    std::map<std::pair<std::size_t, std::size_t>, GroupElementField> g;
};

BundleTransitions complete_bundle_transitions(const BundleTransitions& family);

/// alpha_ij = Ad_{g_ij}, chi_ij(X) = g_ij (X . g_ij^-1). The algebra must have a
/// matrix basis containing the values g d(g^-1).
TransitionData transitions_from_bundle(std::size_t base_dim, LieAlgebraPtr algebra, const BundleTransitions& family);

/// chi(d/dx_mu) computed as g (d g^-1)(d/dx_mu) with d the exterior derivative of
/// the matrix-valued 0-form g^-1, evaluated on the coordinate field.
std::vector<GammaField> chi_via_differential(std::size_t base_dim, const LieAlgebra& alg, const GroupElementField& g);
/// chi(d/dx_mu) computed as g (d/dx_mu . g^-1) by entrywise differentiation.
std::vector<GammaField> chi_via_action(std::size_t base_dim, const LieAlgebra& alg, const GroupElementField& g);

struct CocycleReport {
    bool ok = true;
    /// Chart indices of the first failing relation.
    std::optional<std::array<std::size_t, 3>> triple;
    /// "alpha", "chi", "alpha_identity", "chi_identity" or "missing".
    std::string relation;
    std::string detail;
};

/// Exact check of alpha_ii = 1, chi_ii = 0 and the cocycle relations
/// alpha_ik = alpha_ij alpha_jk, chi_ik = alpha_ij chi_jk + chi_ij on all triples.
CocycleReport validate_cocycle(const TransitionData& t);

/// alpha_ij([a, b]) = [alpha_ij a, alpha_ij b] on the algebra basis.
bool alpha_is_automorphism(const TransitionData& t, std::size_t i, std::size_t j);

struct LocalElementFamily {
    PolyVectorField x;
    std::vector<GammaField> gamma;
};

/// Completes partial local data from the given charts through
/// gamma_i = alpha_ij(gamma_j) + chi_ij(X) and verifies it on every pair.
/// Throws std::domain_error naming the pair and defect if inconsistent.
LocalElementFamily glue(const TransitionData& t, const PolyVectorField& x,
                        const std::map<std::size_t, GammaField>& partial);

/// gamma_i - alpha_ij(gamma_j) - chi_ij(X).
GammaField gluing_defect(const TransitionData& t, const LocalElementFamily& f, std::size_t i, std::size_t j);

} // namespace tlacalc
