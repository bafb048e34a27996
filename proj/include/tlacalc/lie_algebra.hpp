#pragma once

#include "tlacalc/matrix.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tlacalc {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k in a fixed ordered basis e_0 .. e_{m-1}.
///
/// When a matrix realization is attached, its commutators must reproduce the
/// structure constants; it is then used to convert between matrices in the
/// span of the basis and coordinate vectors.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, std::vector<Rational> structure_constants, std::string name = {});
    LieAlgebra(std::size_t dim, std::vector<Rational> structure_constants, std::vector<RMatrix> matrix_basis,
               std::string name = {});

    /// Structure constants are read off the commutators of the given
    /// linearly independent matrices, which must span a Lie subalgebra.
    static LieAlgebra from_matrix_basis(std::vector<RMatrix> basis, std::string name = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Rational>& structure_constants() const noexcept { return c_; }

    bool has_matrix_basis() const noexcept { return !matrix_basis_.empty(); }
    const std::vector<RMatrix>& matrix_basis() const noexcept { return matrix_basis_; }
    std::size_t matrix_size() const noexcept { return matrix_basis_.empty() ? 0 : matrix_basis_[0].rows(); }

    /// Coordinates of a matrix in the span of the matrix basis; throws
    /// std::domain_error if it lies outside the span.
    std::vector<Rational> coordinates(const RMatrix& m) const;
    std::vector<Poly> coordinates(const PolyMatrix& m) const;
    PolyMatrix to_matrix(const std::vector<Poly>& coords) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.dim_ == b.dim_ && a.c_ == b.c_ && a.matrix_basis_ == b.matrix_basis_;
    }

private:
    void check_antisymmetry() const;
    void build_coordinate_map();

    std::size_t dim_;
    std::vector<Rational> c_;
    std::vector<RMatrix> matrix_basis_;
    std::string name_;
    // Left inverse of the basis on a set of pivot entries (row-major flat index).
    std::vector<std::size_t> pivot_entries_;
    std::vector<Rational> left_inverse_; // dim x dim, row-major
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// true iff the cyclic sum [[e_i,e_j],e_k] + cyclic vanishes for every triple.
bool validate_jacobi(const LieAlgebra& alg);

/// First triple (i, j, k) violating Jacobi, if any.
std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra& alg);

/// sl_n with basis H_1..H_{n-1} (H_k = E_kk - E_{k+1,k+1}) followed by the
/// off-diagonal units E_ij, i != j, in lexicographic (i, j) order.
/// For n = 2 this is (H, E, F).
LieAlgebra make_sl(std::size_t n);

/// Heisenberg algebra: e_1 = E_12, e_2 = E_23, e_3 = E_13 in 3x3 matrices.
LieAlgebra make_heisenberg();

/// Abelian algebra of dimension m (no matrix basis).
LieAlgebra make_abelian(std::size_t m);

/// Bracket of constant elements given by coordinate vectors.
std::vector<Rational> bracket(const LieAlgebra& alg, const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Matrix representation e_a -> matrices[a] of a Lie algebra on Q^n.
struct Representation {
    std::size_t n = 0;
    std::vector<RMatrix> matrices;
    std::string name;
};

bool validate_representation(const LieAlgebra& alg, const Representation& rep);
Representation adjoint_representation(const LieAlgebra& alg);
/// The matrix realization itself; throws if the algebra has none.
Representation defining_representation(const LieAlgebra& alg);
/// The zero map into n x n matrices.
Representation trivial_representation(const LieAlgebra& alg, std::size_t n);

/// Rank of a family of rational vectors (exact Gaussian elimination).
std::size_t rank(std::vector<std::vector<Rational>> rows);

} // namespace tlacalc
