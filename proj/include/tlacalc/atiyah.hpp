#pragma once

#include "tlacalc/connections.hpp"

#include <utility>
#include <vector>

namespace tlacalc {

/// Unipotent matrix group g(y) = 1 + sum_s y_s E_{positions[s]} with strictly
/// upper triangular positions closed under (i,j),(j,k) -> (i,k). Its Lie
/// algebra has basis E_{positions[s]} in the same order.
class UnipotentGroup {
public:
    using Position = std::pair<std::size_t, std::size_t>;

    UnipotentGroup(std::size_t n, std::vector<Position> positions);

    /// n = 3, positions (1,2), (2,3), (1,3) (1-based); algebra equals make_heisenberg().
    static UnipotentGroup heisenberg();
    /// All strictly upper triangular positions, lexicographic.
    static UnipotentGroup upper_triangular(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return positions_.size(); }
    const std::vector<Position>& positions() const noexcept { return positions_; }
    const LieAlgebraPtr& algebra() const noexcept { return algebra_; }

    /// g(y) with y_s the polynomial variable offset + s.
    PolyMatrix element(std::size_t offset) const;
    PolyMatrix inverse(std::size_t offset) const;
    /// Coordinates of a group element (entries at the positions); throws if
    /// the matrix is not of the group's shape.
    std::vector<Poly> coordinates(const PolyMatrix& g) const;
    /// mu(y, y'): coordinates of g(y) g(y').
    std::vector<Poly> multiply(std::size_t offset_left, std::size_t offset_right) const;
    /// Matrix of Ad_{g(y)} on the algebra basis (column b = Ad(e_b)).
    PolyMatrix adjoint(std::size_t offset) const;
    PolyMatrix adjoint_inverse(std::size_t offset) const;

private:
    std::size_t n_;
    std::vector<Position> positions_;
    LieAlgebraPtr algebra_;
};

/// Ad matrix acting on a coordinate vector.
std::vector<Poly> apply_adjoint(const PolyMatrix& ad, const std::vector<Poly>& v);

/// The trivial bundle P = M x G with TLA(P, g) forms. Polynomial variables:
/// x_1..x_d for the base, then y_1..y_k for the group.
class AtiyahModel {
public:
    AtiyahModel(std::size_t base_dim, UnipotentGroup group);

    const UnipotentGroup& group() const noexcept { return group_; }
    std::size_t base_dim() const noexcept { return base_dim_; }
    /// Kernel-valued forms on TLA(M, g).
    const ContextPtr& base_context() const noexcept { return base_ctx_; }
    /// Kernel-valued forms on TLA(P, g).
    const ContextPtr& bundle_context() const noexcept { return bundle_ctx_; }
    const ContextPtr& bundle_scalar_context() const noexcept { return bundle_scalar_ctx_; }

    /// xi^P for the basis element e_a: entries of g(y) e_a at the positions.
    PolyVectorField fundamental_field(std::size_t a) const;
    /// xi^P (+) xi.
    TlaElement equ_generator(std::size_t a) const;
    CartanOperation equ_operation() const;

    /// g^-1 dg, a bidegree (1,0) form in the dy directions.
    MixedForm group_maurer_cartan() const;
    /// g^-1 dg + theta (tautological part).
    MixedForm maurer_cartan_on_P() const;

    /// Ad_{g^-1}(pullback of A) + g^-1 dg - theta.
    MixedForm connection_hat(const GaugePotential& a) const;

    /// Restriction to the identity section on lifts of base elements:
    /// dy^s -> -theta^s, theta legs on P dropped, y = 0. Requires basic input.
    MixedForm lambda_restrict(const MixedForm& w) const;
    /// Basic extension of a form over M; right inverse of lambda_restrict.
    MixedForm reconstruct(const MixedForm& w) const;

    /// (bidegree (1,0) part, bidegree (0,1) part) of a basic 1-form.
    std::pair<MixedForm, MixedForm> generalized_split(const MixedForm& w) const;

private:
    std::size_t base_dim_;
    UnipotentGroup group_;
    ContextPtr base_ctx_;
    ContextPtr bundle_ctx_;
    ContextPtr bundle_scalar_ctx_;
};

} // namespace tlacalc
