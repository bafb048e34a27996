#include <doctest.h>

#include "tlacalc/atiyah.hpp"
#include "tlacalc/sampler.hpp"

using namespace tlacalc;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

// mu(y, y') composed by substitution, independent of matrix products.
std::vector<Poly> compose(const std::vector<Poly>& outer, const std::vector<Poly>& left, const std::vector<Poly>& right)
{
    std::vector<Poly> images = left;
    images.insert(images.end(), right.begin(), right.end());
    std::vector<Poly> out;
    for (const auto& p : outer)
        out.push_back(p.substitute(images));
    return out;
}

std::vector<Poly> vars(std::size_t offset, std::size_t k)
{
    std::vector<Poly> out;
    for (std::size_t s = 0; s < k; ++s)
        out.push_back(Poly::var(offset + s));
    return out;
}

GaugePotential random_potential(Sampler& s, std::size_t d, std::size_t m)
{
    GaugePotential a;
    for (std::size_t mu = 0; mu < d; ++mu)
        a.components.push_back(s.gamma(d, m, 1));
    return a;
}

} // namespace

TEST_CASE("unipotent group law")
{
    // Three copies of the coordinates must fit the 16 polynomial variables.
    UnipotentGroup g4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}});
    for (const auto& g : {UnipotentGroup::heisenberg(), g4}) {
        std::size_t k = g.dim();
        auto mu = g.multiply(0, k);
        CHECK(mu == g.coordinates(g.element(0) * g.element(k)));
        auto lhs = compose(mu, mu, vars(2 * k, k));
        auto rhs = compose(mu, vars(0, k), g.multiply(k, 2 * k));
        CHECK(lhs == rhs);
        CHECK(g.element(0) * g.inverse(0) == PolyMatrix::identity(g.n()));
        CHECK(g.adjoint_inverse(0) * g.adjoint(0) == PolyMatrix::identity(k));
        // Ad is a homomorphism: Ad_{g(y)} Ad_{g(y')} = Ad_{g(mu(y, y'))}.
        PolyMatrix ad = g.adjoint(0);
        PolyMatrix composed(k, k);
        std::vector<Poly> images = mu;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                composed(i, j) = ad(i, j).substitute(images);
        CHECK(g.adjoint(0) * g.adjoint(k) == composed);
        CHECK(validate_jacobi(*g.algebra()));
    }
    UnipotentGroup full = UnipotentGroup::upper_triangular(4);
    CHECK(full.dim() == 6);
    CHECK(full.element(0) * full.inverse(0) == PolyMatrix::identity(4));
    CHECK(full.adjoint_inverse(0) * full.adjoint(0) == PolyMatrix::identity(6));
    CHECK(UnipotentGroup::heisenberg().algebra()->structure_constants() == make_heisenberg().structure_constants());
    CHECK_THROWS(UnipotentGroup(3, {{1, 0}}));
    CHECK_THROWS(UnipotentGroup(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("fundamental fields")
{
    AtiyahModel model(2, UnipotentGroup::heisenberg());
    CHECK(model.fundamental_field(2) == PolyVectorField({Poly(), Poly(), Poly(), Poly(), Poly(1L)}));
    CHECK(model.fundamental_field(0) == PolyVectorField({Poly(), Poly(), Poly(1L), Poly(), Poly()}));
    CHECK(model.fundamental_field(1) == PolyVectorField({Poly(), Poly(), Poly(), Poly(1L), P("x3")}));
    const LieAlgebra& alg = *model.group().algebra();
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            PolyVectorField expected(5);
            for (std::size_t c = 0; c < 3; ++c)
                expected += Poly(alg.c(a, b, c)) * model.fundamental_field(c);
            CHECK(bracket(model.fundamental_field(a), model.fundamental_field(b)) == expected);
        }
}

TEST_CASE("equivariant Cartan operation")
{
    AtiyahModel model(2, UnipotentGroup::heisenberg());
    auto op = model.equ_operation();
    Sampler s(3);
    for (int i = 0; i < 6; ++i) {
        const TlaElement& x = op.generators[static_cast<std::size_t>(s.integer(0, 2))];
        const TlaElement& y = op.generators[static_cast<std::size_t>(s.integer(0, 2))];
        MixedForm w = s.form(model.bundle_context(), static_cast<int>(s.integer(0, 2)), 1);
        CHECK(cartan_defects(x, y, s.poly(5, 1), w).all_zero());
    }
}

TEST_CASE("Maurer-Cartan form on P")
{
    AtiyahModel model(2, UnipotentGroup::heisenberg());
    const auto& ctx = model.bundle_context();
    // Hand computation: g^-1 dg = dy1 E12 + dy2 E23 + (dy3 - y1 dy2) E13.
    MixedForm expected(ctx, 1);
    expected.add(dx_mask(2), {Poly(1L), Poly(), Poly()});
    expected.add(dx_mask(3), {Poly(), Poly(1L), P("-x3")});
    expected.add(dx_mask(4), {Poly(), Poly(), Poly(1L)});
    CHECK(model.group_maurer_cartan() == expected);
    MixedForm theta = model.maurer_cartan_on_P();
    GammaField g({P("x1"), Poly(2L), Poly()});
    CHECK(evaluate(theta, {kernel_element(*ctx, g)}) == from_gamma(g));
    for (const auto& x : model.equ_operation().generators)
        CHECK(lie_derivative(x, theta).is_zero());
}

TEST_CASE("connection_hat and the restriction map")
{
    AtiyahModel model(2, UnipotentGroup::heisenberg());
    const auto& base = model.base_context();
    auto op = model.equ_operation();
    MixedForm zero_hat = model.connection_hat({{GammaField(3), GammaField(3)}});
    CHECK(is_basic(zero_hat, op));
    CHECK(model.lambda_restrict(zero_hat) == flat_connection(base));
    CHECK(model.lambda_restrict(MixedForm(model.bundle_context(), 2)).is_zero());
    CHECK(model.reconstruct(MixedForm(base, 1)).is_zero());
    CHECK_THROWS(model.lambda_restrict(model.maurer_cartan_on_P()));

    GaugePotential central{{GammaField({Poly(), Poly(), P("x2")}), GammaField(3)}};
    CHECK(model.lambda_restrict(model.connection_hat(central)) == connection_from_potential(base, central));

    Sampler s(5);
    for (int i = 0; i < 5; ++i) {
        GaugePotential a = random_potential(s, 2, 3);
        MixedForm hat = model.connection_hat(a);
        CHECK(is_basic(hat, op));
        for (const auto& x : op.generators)
            CHECK(interior(x, hat).is_zero());
        MixedForm alpha = connection_from_potential(base, a);
        CHECK(model.lambda_restrict(hat) == alpha);
        CHECK(model.reconstruct(alpha) == hat);

        // Curvature correspondence.
        MixedForm r = curvature(hat);
        CHECK(is_basic(r, op));
        MixedForm f = model.lambda_restrict(r);
        CHECK(f == curvature(alpha));
        MixedForm pot = potential_form(base, a);
        CHECK(f.bidegree_part(2, 0) == (differential(pot) + Rational(1, 2) * graded_bracket(pot, pot)).bidegree_part(2, 0));
        CHECK(f.bidegree_part(1, 1).is_zero());
        CHECK(f.bidegree_part(0, 2).is_zero());
    }
}

TEST_CASE("restriction is a chain map with a right inverse")
{
    AtiyahModel model(2, UnipotentGroup::heisenberg());
    auto op = model.equ_operation();
    Sampler s(7);
    for (int i = 0; i < 5; ++i) {
        int r = static_cast<int>(s.integer(0, 2));
        MixedForm w = s.form(model.base_context(), r, 1);
        MixedForm ext = model.reconstruct(w);
        CHECK(is_basic(ext, op));
        CHECK(model.lambda_restrict(ext) == w);
        CHECK(model.reconstruct(model.lambda_restrict(ext)) == ext);
        MixedForm dext = differential(ext);
        CHECK(is_basic(dext, op));
        CHECK(model.lambda_restrict(dext) == differential(w));
    }
}

TEST_CASE("generalized split")
{
    AtiyahModel model(2, UnipotentGroup::heisenberg());
    const auto& base = model.base_context();
    auto op = model.equ_operation();
    Sampler s(11);
    GaugePotential a = random_potential(s, 2, 3);
    auto [omega, phi] = model.generalized_split(model.connection_hat(a));
    CHECK(phi == -tautological_form(model.bundle_context()));
    CHECK(omega == model.connection_hat(a) - phi);
    CHECK(is_invariant(omega, op));
    CHECK(is_invariant(phi, op));

    MixedForm twice = potential_form(base, a) - Rational(2) * tautological_form(base);
    MixedForm lifted = model.reconstruct(twice);
    auto [om2, phi2] = model.generalized_split(lifted);
    CHECK(phi2 == Rational(-2) * tautological_form(model.bundle_context()));
    CHECK(is_invariant(om2, op));
    CHECK_FALSE(is_normalized(model.lambda_restrict(lifted)));
    CHECK(is_normalized(Rational(1, 2) * (model.lambda_restrict(lifted) - potential_form(base, a))));
    CHECK_THROWS(model.generalized_split(MixedForm(model.bundle_context(), 2)));
}
