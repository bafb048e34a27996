#include "tlacalc/lie_algebra.hpp"

#include <stdexcept>

namespace tlacalc {

namespace {

// Gauss-Jordan inverse of a square rational matrix stored row-major.
std::vector<Rational> invert(std::vector<Rational> a, std::size_t n)
{
    std::vector<Rational> inv(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i * n + i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0)
            ++piv;
        if (piv == n)
            throw std::domain_error("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[col * n + j]);
                std::swap(inv[piv * n + j], inv[col * n + j]);
            }
        Rational p = a[col * n + col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col * n + j] /= p;
            inv[col * n + j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r * n + col] == 0)
                continue;
            Rational f = a[r * n + col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r * n + j] -= f * a[col * n + j];
                inv[r * n + j] -= f * inv[col * n + j];
            }
        }
    }
    return inv;
}

} // namespace

std::size_t rank(std::vector<std::vector<Rational>> rows)
{
    std::size_t r = 0;
    if (rows.empty())
        return 0;
    std::size_t ncols = rows[0].size();
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> structure_constants, std::string name)
    : dim_(dim), c_(std::move(structure_constants)), name_(std::move(name))
{
    if (c_.size() != dim_ * dim_ * dim_)
        throw std::invalid_argument("structure constant table must have dim^3 entries");
    check_antisymmetry();
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> structure_constants, std::vector<RMatrix> matrix_basis,
                       std::string name)
    : LieAlgebra(dim, std::move(structure_constants), std::move(name))
{
    if (matrix_basis.empty())
        return;
    if (matrix_basis.size() != dim_)
        throw std::invalid_argument("matrix basis size differs from algebra dimension");
    std::size_t n = matrix_basis[0].rows();
    for (const auto& b : matrix_basis)
        if (b.rows() != n || b.cols() != n)
            throw std::invalid_argument("matrix basis elements must be square of equal size");
    matrix_basis_ = std::move(matrix_basis);
    build_coordinate_map();
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            RMatrix expected(n, n);
            for (std::size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != 0) {
                    RMatrix t = matrix_basis_[k];
                    expected += t.scale(c(i, j, k));
                }
            if (!(commutator(matrix_basis_[i], matrix_basis_[j]) == expected))
                throw std::invalid_argument("matrix basis commutators do not reproduce the structure constants");
        }
}

LieAlgebra LieAlgebra::from_matrix_basis(std::vector<RMatrix> basis, std::string name)
{
    if (basis.empty())
        throw std::invalid_argument("empty matrix basis");
    std::size_t m = basis.size();
    // Build a coordinate map first via a constant-free algebra shell.
    LieAlgebra shell(m, std::vector<Rational>(m * m * m, Rational(0)), name);
    shell.matrix_basis_ = basis;
    shell.build_coordinate_map();
    std::vector<Rational> c(m * m * m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto coords = shell.coordinates(commutator(basis[i], basis[j]));
            for (std::size_t k = 0; k < m; ++k)
                c[(i * m + j) * m + k] = coords[k];
        }
    return LieAlgebra(m, std::move(c), std::move(basis), std::move(name));
}

void LieAlgebra::check_antisymmetry() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != -c(j, i, k))
                    throw std::invalid_argument("structure constants are not antisymmetric at (" + std::to_string(i) +
                                                "," + std::to_string(j) + "," + std::to_string(k) + ")");
}

void LieAlgebra::build_coordinate_map()
{
    std::size_t entries = matrix_basis_[0].rows() * matrix_basis_[0].cols();
    // Greedily pick entries that make the restricted basis independent.
    pivot_entries_.clear();
    std::vector<std::vector<Rational>> picked;
    for (std::size_t e = 0; e < entries && pivot_entries_.size() < dim_; ++e) {
        std::vector<Rational> row(dim_);
        for (std::size_t a = 0; a < dim_; ++a)
            row[a] = matrix_basis_[a].data()[e];
        auto trial = picked;
        trial.push_back(row);
        if (rank(trial) == trial.size()) {
            picked = std::move(trial);
            pivot_entries_.push_back(e);
        }
    }
    if (pivot_entries_.size() != dim_)
        throw std::invalid_argument("matrix basis is linearly dependent");
    std::vector<Rational> sub(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t a = 0; a < dim_; ++a)
            sub[r * dim_ + a] = picked[r][a];
    left_inverse_ = invert(std::move(sub), dim_);
}

std::vector<Rational> LieAlgebra::coordinates(const RMatrix& m) const
{
    if (!has_matrix_basis())
        throw std::logic_error("algebra has no matrix realization");
    if (m.rows() != matrix_size() || m.cols() != matrix_size())
        throw std::invalid_argument("matrix size mismatch");
    std::vector<Rational> out(dim_, Rational(0));
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t r = 0; r < dim_; ++r)
            out[a] += left_inverse_[a * dim_ + r] * m.data()[pivot_entries_[r]];
    RMatrix back(matrix_size(), matrix_size());
    for (std::size_t a = 0; a < dim_; ++a) {
        RMatrix t = matrix_basis_[a];
        back += t.scale(out[a]);
    }
    if (!(back == m))
        throw std::domain_error("matrix is not in the span of the Lie algebra basis");
    return out;
}

std::vector<Poly> LieAlgebra::coordinates(const PolyMatrix& m) const
{
    if (!has_matrix_basis())
        throw std::logic_error("algebra has no matrix realization");
    if (m.rows() != matrix_size() || m.cols() != matrix_size())
        throw std::invalid_argument("matrix size mismatch");
    std::vector<Poly> out(dim_);
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t r = 0; r < dim_; ++r)
            if (left_inverse_[a * dim_ + r] != 0)
                out[a] += m.data()[pivot_entries_[r]] * left_inverse_[a * dim_ + r];
    if (!(to_matrix(out) == m))
        throw std::domain_error("matrix is not in the span of the Lie algebra basis");
    return out;
}

PolyMatrix LieAlgebra::to_matrix(const std::vector<Poly>& coords) const
{
    if (!has_matrix_basis())
        throw std::logic_error("algebra has no matrix realization");
    if (coords.size() != dim_)
        throw std::invalid_argument("coordinate vector length differs from algebra dimension");
    std::size_t n = matrix_size();
    PolyMatrix out(n, n);
    for (std::size_t a = 0; a < dim_; ++a) {
        if (coords[a].is_zero())
            continue;
        const RMatrix& b = matrix_basis_[a];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (b(i, j) != 0)
                    out(i, j) += coords[a] * b(i, j);
    }
    return out;
}

std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra& alg)
{
    std::size_t m = alg.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                for (std::size_t out = 0; out < m; ++out) {
                    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                    Rational s = 0;
                    for (std::size_t l = 0; l < m; ++l)
                        s += alg.c(i, j, l) * alg.c(l, k, out) + alg.c(j, k, l) * alg.c(l, i, out) +
                             alg.c(k, i, l) * alg.c(l, j, out);
                    if (s != 0)
                        return std::array<std::size_t, 3>{i, j, k};
                }
    return std::nullopt;
}

bool validate_jacobi(const LieAlgebra& alg) { return !jacobi_violation(alg).has_value(); }

LieAlgebra make_sl(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("sl_n requires n >= 2");
    std::vector<RMatrix> basis;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        RMatrix h(n, n);
        h(k, k) = 1;
        h(k + 1, k + 1) = -1;
        basis.push_back(h);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                basis.push_back(RMatrix::unit(n, i, j));
    return LieAlgebra::from_matrix_basis(std::move(basis), "sl" + std::to_string(n));
}

LieAlgebra make_heisenberg()
{
    std::vector<RMatrix> basis{RMatrix::unit(3, 0, 1), RMatrix::unit(3, 1, 2), RMatrix::unit(3, 0, 2)};
    return LieAlgebra::from_matrix_basis(std::move(basis), "heisenberg");
}

LieAlgebra make_abelian(std::size_t m)
{
    return LieAlgebra(m, std::vector<Rational>(m * m * m, Rational(0)), "abelian" + std::to_string(m));
}

std::vector<Rational> bracket(const LieAlgebra& alg, const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::size_t m = alg.dim();
    if (a.size() != m || b.size() != m)
        throw std::invalid_argument("bracket: dimension mismatch");
    std::vector<Rational> out(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (b[j] == 0)
                continue;
            for (std::size_t k = 0; k < m; ++k)
                if (alg.c(i, j, k) != 0)
                    out[k] += a[i] * b[j] * alg.c(i, j, k);
        }
    }
    return out;
}

bool validate_representation(const LieAlgebra& alg, const Representation& rep)
{
    if (rep.matrices.size() != alg.dim())
        return false;
    for (const auto& m : rep.matrices)
        if (m.rows() != rep.n || m.cols() != rep.n)
            return false;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            RMatrix expected(rep.n, rep.n);
            for (std::size_t k = 0; k < alg.dim(); ++k)
                if (alg.c(i, j, k) != 0) {
                    RMatrix t = rep.matrices[k];
                    expected += t.scale(alg.c(i, j, k));
                }
            if (!(commutator(rep.matrices[i], rep.matrices[j]) == expected))
                return false;
        }
    return true;
}

Representation adjoint_representation(const LieAlgebra& alg)
{
    std::size_t m = alg.dim();
    Representation rep{m, {}, "adjoint"};
    for (std::size_t a = 0; a < m; ++a) {
        RMatrix ad(m, m);
        // ad(e_a) e_j = sum_k c(a, j, k) e_k, so column j holds c(a, j, .).
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                ad(k, j) = alg.c(a, j, k);
        rep.matrices.push_back(std::move(ad));
    }
    return rep;
}

Representation defining_representation(const LieAlgebra& alg)
{
    if (!alg.has_matrix_basis())
        throw std::logic_error("algebra '" + alg.name() + "' has no matrix realization");
    return Representation{alg.matrix_size(), alg.matrix_basis(), "defining"};
}

Representation trivial_representation(const LieAlgebra& alg, std::size_t n)
{
    return Representation{n, std::vector<RMatrix>(alg.dim(), RMatrix(n, n)), "trivial"};
}

std::string to_string(const PolyMatrix& m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                s += ", ";
            s += m(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

} // namespace tlacalc
