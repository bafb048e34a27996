#pragma once

#include "tlacalc/lie_algebra.hpp"

#include <vector>

namespace tlacalc {

/// Polynomial vector field sum_mu X^mu d/dx_mu on a base with `dim()` coordinates.
class PolyVectorField {
public:
    PolyVectorField() = default;
    explicit PolyVectorField(std::size_t dim) : components_(dim) {}
    explicit PolyVectorField(std::vector<Poly> components) : components_(std::move(components)) {}

    /// The coordinate field d/dx_{mu+1}.
    static PolyVectorField coordinate(std::size_t dim, std::size_t mu);

    std::size_t dim() const noexcept { return components_.size(); }
    const Poly& operator[](std::size_t mu) const { return components_[mu]; }
    Poly& operator[](std::size_t mu) { return components_[mu]; }
    const std::vector<Poly>& components() const noexcept { return components_; }
    bool is_zero() const;

    /// X . f
    Poly apply(const Poly& f) const;
    PolyMatrix apply(const PolyMatrix& m) const;

    PolyVectorField& operator+=(const PolyVectorField& o);
    PolyVectorField& operator-=(const PolyVectorField& o);
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
    friend PolyVectorField operator*(const Poly& f, const PolyVectorField& x);
    friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

private:
    std::vector<Poly> components_;
};

/// [X, Y] of polynomial vector fields.
PolyVectorField bracket(const PolyVectorField& x, const PolyVectorField& y);

/// Polynomial map from the base to a Lie algebra, in the algebra's basis.
class GammaField {
public:
    GammaField() = default;
    explicit GammaField(std::size_t dim) : components_(dim) {}
    explicit GammaField(std::vector<Poly> components) : components_(std::move(components)) {}

    /// Constant field equal to the basis element e_a.
    static GammaField basis(std::size_t dim, std::size_t a);

    std::size_t dim() const noexcept { return components_.size(); }
    const Poly& operator[](std::size_t a) const { return components_[a]; }
    Poly& operator[](std::size_t a) { return components_[a]; }
    const std::vector<Poly>& components() const noexcept { return components_; }
    bool is_zero() const;

    GammaField& operator+=(const GammaField& o);
    GammaField& operator-=(const GammaField& o);
    GammaField operator-() const;
    friend GammaField operator+(GammaField a, const GammaField& b) { return a += b; }
    friend GammaField operator-(GammaField a, const GammaField& b) { return a -= b; }
    friend GammaField operator*(const Poly& f, const GammaField& g);
    friend bool operator==(const GammaField&, const GammaField&) = default;

private:
    std::vector<Poly> components_;
};

/// X . gamma, componentwise.
GammaField apply(const PolyVectorField& x, const GammaField& g);

/// Pointwise Lie bracket via the structure constants.
GammaField bracket_gamma(const LieAlgebra& alg, const GammaField& a, const GammaField& b);

/// M - (1/n) tr(M) 1.
PolyMatrix traceless_projection(const PolyMatrix& m);

/// Elementary shear I + p(x) E_ij, i != j.
struct Shear {
    std::size_t i;
    std::size_t j;
    Poly parameter;
};

/// Polynomial matrix-valued gauge element with an exact polynomial inverse.
/// Construction from shears keeps det = 1 and makes the inverse polynomial.
class GroupElementField {
public:
    /// Validates matrix * inverse == 1 == inverse * matrix and det == 1.
    GroupElementField(PolyMatrix matrix, PolyMatrix inverse);

    static GroupElementField identity(std::size_t n);
    static GroupElementField from_shears(std::size_t n, const std::vector<Shear>& shears);

    std::size_t size() const noexcept { return matrix_.rows(); }
    const PolyMatrix& matrix() const noexcept { return matrix_; }
    const PolyMatrix& inverse() const noexcept { return inverse_; }

    friend GroupElementField operator*(const GroupElementField& g, const GroupElementField& h);
    friend bool operator==(const GroupElementField& a, const GroupElementField& b) { return a.matrix_ == b.matrix_; }

private:
    struct Unchecked {};
    GroupElementField(PolyMatrix matrix, PolyMatrix inverse, Unchecked)
        : matrix_(std::move(matrix)), inverse_(std::move(inverse))
    {
    }

    PolyMatrix matrix_;
    PolyMatrix inverse_;
};

} // namespace tlacalc
