#include <doctest.h>

#include "oracles.hpp"
#include "tlacalc/connections.hpp"
#include "tlacalc/sampler.hpp"

using namespace tlacalc;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

LieAlgebraPtr algebra(LieAlgebra alg) { return std::make_shared<const LieAlgebra>(std::move(alg)); }

GaugePotential random_potential(Sampler& s, const FormContext& ctx)
{
    GaugePotential a;
    for (std::size_t mu = 0; mu < ctx.base_dim(); ++mu)
        a.components.push_back(s.gamma(ctx.base_dim(), ctx.algebra_dim(), 1));
    return a;
}

// R(a, b) = (d alpha)(a, b) + [alpha(a), alpha(b)], with d taken from the Koszul formula.
Value curvature_oracle(const MixedForm& alpha, const TlaElement& a, const TlaElement& b)
{
    return oracle::add(differential_via_koszul(alpha, {a, b}),
                       alpha.ctx().bracket(oracle::evaluate(alpha, {a}), oracle::evaluate(alpha, {b})));
}

} // namespace

TEST_CASE("connection_from_potential examples")
{
    auto ab = FormContext::kernel(2, algebra(make_abelian(2)));
    MixedForm flat = flat_connection(ab);
    CHECK(flat == connection_from_potential(ab, {{GammaField(2), GammaField(2)}}));
    GammaField g({P("x1"), P("3")});
    CHECK(evaluate(flat, {kernel_element(*ab, g)}) == from_gamma(-g));
    CHECK(is_normalized(flat));

    GaugePotential a{{GammaField({P("x2"), Poly()}), GammaField(2)}};
    MixedForm alpha = connection_from_potential(ab, a);
    CHECK(evaluate(alpha, {coordinate_element(*ab, 0)}) == Value{P("x2"), Poly()});
    CHECK(is_normalized(alpha));
    CHECK(potential_of(alpha).components == a.components);

    auto k = FormContext::kernel(2, algebra(make_sl(2)));
    Sampler s(3);
    for (int i = 0; i < 10; ++i) {
        GaugePotential pot = random_potential(s, *k);
        MixedForm al = connection_from_potential(k, pot);
        CHECK(is_normalized(al));
        TlaElement x = s.element(*k, 1);
        GammaField ax(3);
        for (std::size_t mu = 0; mu < 2; ++mu)
            ax += x.x[mu] * pot.components[mu];
        CHECK(evaluate(al, {x}) == from_gamma(ax - x.gamma));
    }
    CHECK_FALSE(is_normalized(potential_form(k, random_potential(s, *k))));
}

TEST_CASE("curvature examples")
{
    auto ab = FormContext::kernel(2, algebra(make_abelian(2)));
    auto sl = FormContext::kernel(2, algebra(make_sl(2)));
    CHECK(curvature(flat_connection(ab)).is_zero());
    CHECK(curvature(flat_connection(sl)).is_zero());
    MixedForm r = curvature(connection_from_potential(ab, {{GammaField({P("x2"), Poly()}), GammaField(2)}}));
    CHECK(r == MixedForm::basis(ab, dx_mask(0) | dx_mask(1), {Poly(-1L), Poly()}));
    MixedForm rs = curvature(connection_from_potential(sl, {{GammaField(3), GammaField({Poly(), P("x1"), Poly()})}}));
    CHECK(rs == MixedForm::basis(sl, dx_mask(0) | dx_mask(1), {Poly(), Poly(1L), Poly()}));
}

TEST_CASE("curvature matches the Koszul oracle and is horizontal")
{
    Sampler s(5);
    for (auto alg : {make_sl(2), make_abelian(2), make_heisenberg()}) {
        auto ctx = FormContext::kernel(2, algebra(alg));
        for (int i = 0; i < 6; ++i) {
            MixedForm alpha = connection_from_potential(ctx, random_potential(s, *ctx));
            MixedForm r = curvature(alpha);
            TlaElement a = s.element(*ctx, 1), b = s.element(*ctx, 1);
            CHECK(evaluate(r, {a, b}) == curvature_oracle(alpha, a, b));
            CHECK(is_horizontal(r, kernel_operation(*ctx)));
            CHECK(bianchi_defect(alpha).is_zero());
            // DR = 0 restates Bianchi.
            CHECK(covariant_differential(alpha, r).is_zero());
            MixedForm eta = s.form(ctx, static_cast<int>(s.integer(0, 2)), 1);
            CHECK(covariant_differential(alpha, covariant_differential(alpha, eta)) == graded_bracket(r, eta));
        }
    }
}

TEST_CASE("generalized connections")
{
    auto ctx = FormContext::kernel(2, algebra(make_sl(2)));
    Sampler s(7);
    for (int i = 0; i < 6; ++i) {
        MixedForm omega = s.form(ctx, 1, 1);
        TlaElement a = s.element(*ctx, 1), b = s.element(*ctx, 1);
        CHECK(evaluate(curvature(omega), {a, b}) == curvature_oracle(omega, a, b));
        MixedForm alpha = connection_from_potential(ctx, random_potential(s, *ctx));
        CHECK(curvature(embed_ordinary_as_generalized(alpha)) == curvature(alpha));
        GammaField xi = s.gamma(2, 3, 1);
        CHECK(embed_ordinary_as_generalized(infinitesimal_gauge(alpha, xi)) ==
              infinitesimal_gauge(embed_ordinary_as_generalized(alpha), xi));
    }
}

TEST_CASE("infinitesimal gauge")
{
    auto ctx = FormContext::kernel(2, algebra(make_sl(2)));
    MixedForm flat = flat_connection(ctx);
    CHECK(infinitesimal_gauge(flat, GammaField(3)) == flat);
    // Constant xi: the added term vanishes on kernel directions.
    MixedForm moved = infinitesimal_gauge(flat, GammaField::basis(3, 1));
    CHECK(is_normalized(moved));
    Sampler s(11);
    for (int i = 0; i < 8; ++i) {
        MixedForm alpha = connection_from_potential(ctx, random_potential(s, *ctx));
        GammaField xi = s.gamma(2, 3, 1);
        MixedForm changed = infinitesimal_gauge(alpha, xi);
        CHECK(is_normalized(changed));
        CHECK(lie_derivative(kernel_element(*ctx, xi), alpha) == -(changed - alpha));
    }
}

TEST_CASE("representation-valued connections")
{
    auto s2 = algebra(make_sl(2));
    auto ker = FormContext::kernel(2, s2);
    auto adj = FormContext::endo(2, s2, adjoint_representation(*s2));
    auto def = FormContext::endo(2, s2, defining_representation(*s2));
    CHECK(rep_curvature(MixedForm(def, 1)).is_zero());
    CHECK(induce_rep_connection(MixedForm(ker, 1), def).is_zero());
    CHECK(rep_curvature(induce_rep_connection(flat_connection(ker), adj)).is_zero());
    Sampler s(13);
    for (int i = 0; i < 6; ++i) {
        MixedForm omega = s.form(ker, 1, 1);
        for (const auto& endo : {adj, def}) {
            MixedForm oe = induce_rep_connection(omega, endo);
            CHECK(rep_curvature(oe) == apply_representation(curvature(omega), endo));
        }
        MixedForm w = s.form(def, 1, 1);
        CHECK(rep_bianchi_defect(w).is_zero());
        // R(a, b) = (d_E w)(a, b) + [w(a), w(b)].
        TlaElement a = s.element(*def, 1), b = s.element(*def, 1);
        PolyMatrix wa = to_matrix(*def, evaluate(w, {a})), wb = to_matrix(*def, evaluate(w, {b}));
        CHECK(evaluate(rep_curvature(w), {a, b}) ==
              oracle::add(differential_via_koszul(w, {a, b}), from_matrix(wa * wb - wb * wa)));
        MixedForm v = s.form(def, 1, 1);
        // Affine space: the difference of two connection forms is an arbitrary 1-form.
        CHECK((w + (v - w)) == v);
    }

    auto ab = algebra(make_abelian(2));
    Representation diag = trivial_representation(*ab, 2);
    for (std::size_t a = 0; a < 2; ++a) {
        diag.matrices[a] = RMatrix(2, 2);
        diag.matrices[a](a, a) = 1;
    }
    auto kab = FormContext::kernel(2, ab);
    auto eab = FormContext::endo(2, ab, diag);
    MixedForm omega = s.form(kab, 1, 1);
    MixedForm img = rep_curvature(induce_rep_connection(omega, eab));
    MixedForm r = curvature(omega);
    for (const auto& [mask, v] : img.components()) {
        Value c = r.component(mask);
        CHECK(v == Value{c[0], Poly(), Poly(), c[1]});
    }
}

TEST_CASE("finite gauge transformations")
{
    auto s2 = algebra(make_sl(2));
    auto triv = FormContext::endo(2, s2, trivial_representation(*s2, 2));
    PolyMatrix gm = PolyMatrix::identity(2), gi = PolyMatrix::identity(2);
    gm(0, 1) = P("x1");
    gi(0, 1) = P("-x1");
    GroupElementField g(gm, gi);
    PolyMatrix e12(2, 2);
    e12(0, 1) = Poly(1L);
    CHECK(finite_gauge(MixedForm(triv, 1), g) == MixedForm::dx(triv, 0, from_matrix(e12)));

    auto def = FormContext::endo(2, s2, defining_representation(*s2));
    Sampler s(17);
    for (int i = 0; i < 6; ++i) {
        MixedForm w = s.form(def, 1, 1);
        CHECK(finite_gauge(w, GroupElementField::identity(2)) == w);
        GroupElementField h = s.shear_element(2, 2), k = s.shear_element(2, 2);
        MixedForm wh = finite_gauge(w, h);
        CHECK(rep_curvature(wh) == left_multiply(h.inverse(), right_multiply(rep_curvature(w), h.matrix())));
        CHECK(finite_gauge(wh, k) == finite_gauge(w, h * k));
    }
}
