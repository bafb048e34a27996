#include "tlacalc/sampler.hpp"

#include <bit>
#include <stdexcept>

namespace tlacalc {

long Sampler::integer(long lo, long hi)
{
    if (hi < lo)
        throw std::invalid_argument("empty integer range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::coefficient()
{
    long v = integer(1, 4);
    return Rational(v <= 2 ? v : 2 - v);
}

Poly Sampler::sparse_poly(std::size_t nvars, int max_degree, std::size_t max_terms)
{
    Poly out;
    auto terms = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m{};
        if (nvars > 0 && max_degree > 0) {
            long deg = integer(0, max_degree);
            for (long k = 0; k < deg; ++k)
                ++m[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
        }
        out += Poly::term(m, coefficient());
    }
    return out;
}

Poly Sampler::poly(std::size_t nvars, int max_degree, std::size_t max_terms)
{
    for (;;) {
        Poly p = sparse_poly(nvars, max_degree, max_terms);
        if (!p.is_zero())
            return p;
    }
}

PolyVectorField Sampler::vector_field(std::size_t nvars, std::size_t dim, int max_degree)
{
    PolyVectorField x(dim);
    for (std::size_t i = 0; i < dim; ++i)
        if (integer(0, 2) != 0)
            x[i] = poly(nvars, max_degree);
    return x;
}

GammaField Sampler::gamma(std::size_t nvars, std::size_t dim, int max_degree)
{
    GammaField g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        if (integer(0, 2) != 0)
            g[i] = poly(nvars, max_degree);
    return g;
}

PolyMatrix Sampler::matrix(std::size_t nvars, std::size_t n, int max_degree)
{
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (integer(0, 1) != 0)
                m(i, j) = poly(nvars, max_degree);
    return m;
}

PolyMatrix Sampler::traceless_matrix(std::size_t nvars, std::size_t n, int max_degree)
{
    PolyMatrix m = matrix(nvars, n, max_degree);
    if (n == 0)
        return m;
    Poly t = m.trace() - m(n - 1, n - 1);
    m(n - 1, n - 1) = -t;
    return m;
}

TlaElement Sampler::element(const FormContext& ctx, int max_degree)
{
    return make_element(ctx, vector_field(ctx.base_dim(), ctx.base_dim(), max_degree),
                        gamma(ctx.base_dim(), ctx.algebra_dim(), max_degree));
}

Value Sampler::value(const FormContext& ctx, int max_degree)
{
    Value v(ctx.value_dim());
    for (auto& p : v)
        if (integer(0, 2) != 0)
            p = poly(ctx.base_dim(), max_degree);
    if (v.size() == 1 && v[0].is_zero())
        v[0] = poly(ctx.base_dim(), max_degree);
    return v;
}

MixedForm Sampler::form(ContextPtr ctx, int p, int q, int max_degree, std::size_t max_components)
{
    MixedForm out(ctx, p + q);
    auto d = static_cast<long>(ctx->base_dim());
    auto m = static_cast<long>(ctx->algebra_dim());
    if (p < 0 || q < 0 || p > d || q > m)
        return out;
    auto count = static_cast<std::size_t>(integer(1, static_cast<long>(max_components)));
    for (std::size_t c = 0; c < count; ++c) {
        MixedForm::Mask mask = 0;
        while (std::popcount(mask) < p)
            mask |= dx_mask(static_cast<std::size_t>(integer(0, d - 1)));
        MixedForm::Mask theta = 0;
        while (std::popcount(theta) < q)
            theta |= theta_mask(*ctx, static_cast<std::size_t>(integer(0, m - 1)));
        out.add(mask | theta, value(*ctx, max_degree));
    }
    return out;
}

MixedForm Sampler::form(ContextPtr ctx, int r, int max_degree, std::size_t max_components)
{
    MixedForm out(ctx, r);
    auto d = static_cast<int>(ctx->base_dim());
    auto m = static_cast<int>(ctx->algebra_dim());
    auto parts = static_cast<std::size_t>(integer(1, 2));
    for (std::size_t i = 0; i < parts; ++i) {
        int p = static_cast<int>(integer(std::max(0, r - m), std::min(r, d)));
        if (p > r || r - p > m)
            continue;
        out += form(ctx, p, r - p, max_degree, max_components);
    }
    return out;
}

GroupElementField Sampler::shear_element(std::size_t n, std::size_t nvars)
{
    std::vector<Shear> shears;
    auto count = integer(1, 2);
    long linear = integer(0, count - 1);
    for (long s = 0; s < count; ++s) {
        std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
        if (j >= i)
            ++j;
        Poly parameter = s == linear && nvars > 0
                             ? Poly::var(static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))) *
                                   coefficient()
                             : Poly(coefficient());
        shears.push_back({i, j, parameter});
    }
    return GroupElementField::from_shears(n, shears);
}

} // namespace tlacalc
