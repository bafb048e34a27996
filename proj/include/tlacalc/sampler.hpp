#pragma once

#include "tlacalc/forms.hpp"

#include <cstdint>
#include <random>

namespace tlacalc {

/// Seeded generator of small random exact objects. The integer mapping is
/// done here rather than through std::uniform_int_distribution so that the
/// stream is identical on every standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi);
    /// Nonzero integer coefficient in [-2, 2].
    Rational coefficient();

    /// Sum of up to `max_terms` monomials in the first `nvars` variables of
    /// total degree <= max_degree.
    Poly poly(std::size_t nvars, int max_degree, std::size_t max_terms = 2);
    /// As poly() but possibly zero.
    Poly sparse_poly(std::size_t nvars, int max_degree, std::size_t max_terms = 2);

    PolyVectorField vector_field(std::size_t nvars, std::size_t dim, int max_degree);
    GammaField gamma(std::size_t nvars, std::size_t dim, int max_degree);
    PolyMatrix matrix(std::size_t nvars, std::size_t n, int max_degree);
    /// Matrix with zero trace.
    PolyMatrix traceless_matrix(std::size_t nvars, std::size_t n, int max_degree);

    TlaElement element(const FormContext& ctx, int max_degree);
    Value value(const FormContext& ctx, int max_degree);

    /// Random form of bidegree (p, q) with up to `max_components` components.
    /// Returns the zero form if the bidegree does not fit the algebroid.
    MixedForm form(ContextPtr ctx, int p, int q, int max_degree, std::size_t max_components = 2);
    /// Random form of total degree r, mixing bidegrees.
    MixedForm form(ContextPtr ctx, int r, int max_degree, std::size_t max_components = 2);

    /// Product of one or two elementary shears; at most one shear has a
    /// linear parameter in the first `nvars` variables, the others constant.
    GroupElementField shear_element(std::size_t n, std::size_t nvars);

private:
    std::mt19937_64 rng_;
};

} // namespace tlacalc
