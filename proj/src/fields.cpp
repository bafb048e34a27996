#include "tlacalc/fields.hpp"

#include <stdexcept>

namespace tlacalc {

PolyVectorField PolyVectorField::coordinate(std::size_t dim, std::size_t mu)
{
    if (mu >= dim)
        throw std::out_of_range("coordinate field index out of range");
    PolyVectorField x(dim);
    x.components_[mu] = Poly(1L);
    return x;
}

bool PolyVectorField::is_zero() const
{
    for (const auto& c : components_)
        if (!c.is_zero())
            return false;
    return true;
}

Poly PolyVectorField::apply(const Poly& f) const
{
    Poly out;
    for (std::size_t mu = 0; mu < components_.size(); ++mu)
        if (!components_[mu].is_zero())
            out += components_[mu] * f.derivative(mu);
    return out;
}

PolyMatrix PolyVectorField::apply(const PolyMatrix& m) const
{
    return map_entries(m, [this](const Poly& p) { return apply(p); });
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o)
{
    if (o.dim() != dim())
        throw std::invalid_argument("vector field dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        components_[i] += o.components_[i];
    return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o)
{
    if (o.dim() != dim())
        throw std::invalid_argument("vector field dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        components_[i] -= o.components_[i];
    return *this;
}

PolyVectorField operator*(const Poly& f, const PolyVectorField& x)
{
    PolyVectorField out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        out.components_[i] = f * x.components_[i];
    return out;
}

PolyVectorField bracket(const PolyVectorField& x, const PolyVectorField& y)
{
    if (x.dim() != y.dim())
        throw std::invalid_argument("vector field dimension mismatch");
    PolyVectorField out(x.dim());
    for (std::size_t nu = 0; nu < x.dim(); ++nu)
        out[nu] = x.apply(y[nu]) - y.apply(x[nu]);
    return out;
}

GammaField GammaField::basis(std::size_t dim, std::size_t a)
{
    if (a >= dim)
        throw std::out_of_range("basis index out of range");
    GammaField g(dim);
    g.components_[a] = Poly(1L);
    return g;
}

bool GammaField::is_zero() const
{
    for (const auto& c : components_)
        if (!c.is_zero())
            return false;
    return true;
}

GammaField& GammaField::operator+=(const GammaField& o)
{
    if (o.dim() != dim())
        throw std::invalid_argument("gamma field dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        components_[i] += o.components_[i];
    return *this;
}

GammaField& GammaField::operator-=(const GammaField& o)
{
    if (o.dim() != dim())
        throw std::invalid_argument("gamma field dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        components_[i] -= o.components_[i];
    return *this;
}

GammaField GammaField::operator-() const
{
    GammaField out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out.components_[i] = -components_[i];
    return out;
}

GammaField operator*(const Poly& f, const GammaField& g)
{
    GammaField out(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        out.components_[i] = f * g.components_[i];
    return out;
}

GammaField apply(const PolyVectorField& x, const GammaField& g)
{
    GammaField out(g.dim());
    for (std::size_t a = 0; a < g.dim(); ++a)
        out[a] = x.apply(g[a]);
    return out;
}

GammaField bracket_gamma(const LieAlgebra& alg, const GammaField& a, const GammaField& b)
{
    std::size_t m = alg.dim();
    if (a.dim() != m || b.dim() != m)
        throw std::invalid_argument("bracket_gamma: dimension mismatch with algebra");
    GammaField out(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (b[j].is_zero())
                continue;
            Poly ab;
            for (std::size_t k = 0; k < m; ++k) {
                const Rational& c = alg.c(i, j, k);
                if (c == 0)
                    continue;
                if (ab.is_zero())
                    ab = a[i] * b[j];
                out[k] += ab * c;
            }
        }
    }
    return out;
}

PolyMatrix traceless_projection(const PolyMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("traceless_projection: matrix must be square");
    PolyMatrix out = m;
    if (m.rows() == 0)
        return out;
    Poly shift = m.trace() * Rational(1, static_cast<long>(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        out(i, i) -= shift;
    return out;
}

GroupElementField::GroupElementField(PolyMatrix matrix, PolyMatrix inverse)
    : matrix_(std::move(matrix)), inverse_(std::move(inverse))
{
    if (!matrix_.is_square() || matrix_.rows() != inverse_.rows() || matrix_.cols() != inverse_.cols())
        throw std::invalid_argument("gauge element and inverse must be square of equal size");
    auto id = PolyMatrix::identity(matrix_.rows());
    if (!(matrix_ * inverse_ == id) || !(inverse_ * matrix_ == id))
        throw std::invalid_argument("gauge element inverse is not a two-sided inverse");
    if (!(determinant(matrix_) == Poly(1L)))
        throw std::invalid_argument("gauge element must have determinant 1");
}

GroupElementField GroupElementField::identity(std::size_t n)
{
    return GroupElementField(PolyMatrix::identity(n), PolyMatrix::identity(n), Unchecked{});
}

GroupElementField GroupElementField::from_shears(std::size_t n, const std::vector<Shear>& shears)
{
    PolyMatrix g = PolyMatrix::identity(n);
    PolyMatrix inv = PolyMatrix::identity(n);
    for (const auto& s : shears) {
        if (s.i >= n || s.j >= n || s.i == s.j)
            throw std::invalid_argument("shear requires distinct indices below the matrix size");
        PolyMatrix e = PolyMatrix::identity(n);
        e(s.i, s.j) = s.parameter;
        PolyMatrix einv = PolyMatrix::identity(n);
        einv(s.i, s.j) = -s.parameter;
        g = g * e;
        inv = einv * inv;
    }
    return GroupElementField(std::move(g), std::move(inv), Unchecked{});
}

GroupElementField operator*(const GroupElementField& g, const GroupElementField& h)
{
    if (g.size() != h.size())
        throw std::invalid_argument("gauge element size mismatch");
    return GroupElementField(g.matrix_ * h.matrix_, h.inverse_ * g.inverse_, GroupElementField::Unchecked{});
}

} // namespace tlacalc
