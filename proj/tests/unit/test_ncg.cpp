#include <doctest.h>

#include "oracles.hpp"
#include "tlacalc/ncg.hpp"
#include "tlacalc/sampler.hpp"

using namespace tlacalc;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

PolyMatrix constant(const RMatrix& m)
{
    PolyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Poly(m(i, j));
    return out;
}

PolyMatrix comm(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

PolyMatrix eval_matrix(const MixedForm& w, const std::vector<TlaElement>& args)
{
    return to_matrix(w.ctx(), oracle::evaluate(w, args));
}

} // namespace

TEST_CASE("canonical i theta")
{
    auto c2 = matrix_ncg_context(2);
    MixedForm it = canonical_itheta(c2);
    const LieAlgebra& sl2 = c2->algebra();
    PolyMatrix h = constant(sl2.matrix_basis()[0]);
    CHECK(eval_matrix(it, {inner_derivation(*c2, h)}) == h);
    CHECK(eval_matrix(it, {inner_derivation(*c2, h + PolyMatrix::identity(2))}) == h);
    auto c3 = matrix_ncg_context(3);
    MixedForm it3 = canonical_itheta(c3);
    for (const auto& b : c3->algebra().matrix_basis())
        CHECK(eval_matrix(it3, {inner_derivation(*c3, constant(b))}) == constant(b));
    CHECK_THROWS(matrix_ncg_context(1));
}

TEST_CASE("NC differential against a direct commutator oracle")
{
    auto c2 = matrix_ncg_context(2);
    const auto& basis = c2->algebra().matrix_basis();
    PolyMatrix e = constant(basis[1]), f = constant(basis[2]);
    TlaElement de = inner_derivation(*c2, e), df = inner_derivation(*c2, f);
    CHECK(to_matrix(*c2, evaluate(nc_differential(canonical_itheta(c2)), {de, df})) == constant(basis[0]));

    Sampler s(19);
    for (std::size_t n : {2u, 3u}) {
        auto ctx = matrix_ncg_context(n);
        for (int i = 0; i < 6; ++i) {
            // (d'w)(ad_a, ad_b) = [a, w(ad_b)] - [b, w(ad_a)] - w(ad_[a,b]).
            MixedForm w = s.form(ctx, 0, 1, 0);
            PolyMatrix a = s.traceless_matrix(0, n, 0), b = s.traceless_matrix(0, n, 0);
            TlaElement da = inner_derivation(*ctx, a), db = inner_derivation(*ctx, b);
            TlaElement dab = inner_derivation(*ctx, comm(a, b));
            PolyMatrix expected = comm(a, eval_matrix(w, {db})) - comm(b, eval_matrix(w, {da})) - eval_matrix(w, {dab});
            CHECK(to_matrix(*ctx, evaluate(nc_differential(w), {da, db})) == expected);
            MixedForm dw = nc_differential(w);
            CHECK(nc_differential(dw).is_zero());
        }
    }
    auto top = MixedForm::basis(c2, 0b111, c2->zero_value());
    CHECK_THROWS_AS(nc_differential(top), std::domain_error);
}

TEST_CASE("Maurer-Cartan identity and the degree-zero relation")
{
    for (std::size_t n : {2u, 3u}) {
        auto ctx = matrix_ncg_context(n);
        CHECK(maurer_cartan_defect(ctx).is_zero());
        CHECK(degree_zero_witness_count(ctx) == 0);
        auto [w, defect] = higher_degree_witness(ctx);
        CHECK(w.degree() == 1);
        CHECK(defect.degree() == 2);
        CHECK_FALSE(defect.is_zero());
        CHECK(defect == itheta_commutator_defect(w));
        CHECK(inner_derivation_rank(n) == n * n - 1);
    }
    auto c2 = matrix_ncg_context(2);
    const auto& basis = c2->algebra().matrix_basis();
    TlaElement de = inner_derivation(*c2, constant(basis[1])), df = inner_derivation(*c2, constant(basis[2]));
    MixedForm it = canonical_itheta(c2);
    CHECK(to_matrix(*c2, evaluate(wedge(it, it), {de, df})) == constant(basis[0]));
    auto endo = endo_ncg_context(2, 2);
    CHECK(maurer_cartan_defect(endo).is_zero());
    Sampler s(23);
    for (int i = 0; i < 6; ++i)
        CHECK(degree_zero_defect(MixedForm::function(endo, from_matrix(s.matrix(0, 2, 0)))).is_zero());
}

TEST_CASE("NC connections on the free module")
{
    auto ctx = endo_ncg_context(2, 2);
    MixedForm zero(ctx, 1);
    TlaElement d1 = coordinate_element(*ctx, 0);
    PolyMatrix a = PolyMatrix::identity(2);
    a(0, 0) = P("x1");
    a(1, 1) = P("x1");
    CHECK(nc_connection_apply(zero, d1, a) == PolyMatrix::identity(2));
    PolyMatrix k(2, 2);
    k(0, 1) = Poly(3L);
    MixedForm omega = MixedForm::dx(ctx, 0, from_matrix(k));
    CHECK(nc_connection_apply(omega, d1, PolyMatrix::identity(2)) == k);
    CHECK(nc_curvature(zero).is_zero());

    Sampler s(29);
    for (int i = 0; i < 8; ++i) {
        MixedForm w = s.form(ctx, 1, 1);
        TlaElement x = s.element(*ctx, 1), y = s.element(*ctx, 1);
        PolyMatrix m = s.matrix(2, 2, 1), b = s.matrix(2, 2, 1);
        // Leibniz: nabla_x(m b) = m (x.b) + (nabla_x m) b.
        CHECK(nc_connection_apply(w, x, m * b) ==
              m * derivation_apply(*ctx, x, b) + nc_connection_apply(w, x, m) * b);
        CHECK(nc_operator_curvature(w, x, y, b) == to_matrix(*ctx, evaluate(nc_curvature(w), {x, y})) * b);
    }

    // Diagonal commuting connection: the curvature reduces to d omega.
    PolyMatrix diag(2, 2);
    diag(0, 0) = P("x2");
    diag(1, 1) = P("-x2");
    MixedForm dw = MixedForm::dx(ctx, 0, from_matrix(diag));
    CHECK(nc_curvature(dw) == differential(dw));
}

TEST_CASE("NC gauge transformations")
{
    auto ctx = endo_ncg_context(2, 2);
    Sampler s(31);
    PolyMatrix gm = PolyMatrix::identity(2), gi = PolyMatrix::identity(2);
    gm(0, 1) = P("x1");
    gi(0, 1) = P("-x1");
    GroupElementField g(gm, gi);
    MixedForm zero(ctx, 1);
    MixedForm pure = nc_gauge(zero, g);
    CHECK(pure == left_multiply(gi, nc_differential(MixedForm::function(ctx, from_matrix(gm)))));
    CHECK(pure == finite_gauge(zero, g));
    for (int i = 0; i < 6; ++i) {
        MixedForm w = s.form(ctx, 1, 1);
        CHECK(nc_gauge(w, GroupElementField::identity(2)) == w);
        GroupElementField h = s.shear_element(2, 2), k = s.shear_element(2, 2);
        CHECK(nc_curvature(nc_gauge(w, h)) == left_multiply(h.inverse(), right_multiply(nc_curvature(w), h.matrix())));
        CHECK(nc_gauge(nc_gauge(w, h), k) == nc_gauge(w, h * k));
    }
}

TEST_CASE("traceless forms")
{
    auto ctx = endo_ncg_context(2, 2);
    auto ker = kernel_ncg_context(*ctx);
    Sampler s(37);
    CHECK(is_traceless(apply_representation(s.form(ker, 2, 1), ctx)));
    CHECK_FALSE(is_traceless(MixedForm::dx(ctx, 0, from_matrix(PolyMatrix::identity(2)))));
    GaugePotential a{{s.gamma(2, 3, 1), s.gamma(2, 3, 1)}};
    CHECK(is_traceless(apply_representation(connection_from_potential(ker, a), ctx)));
}

TEST_CASE("connection space conversions")
{
    auto ctx = endo_ncg_context(2, 2);
    auto ker = kernel_ncg_context(*ctx);
    using CS = ConnectionSpace;
    CHECK(parse_connection_space("traceless_nc") == CS::TracelessNc);
    CHECK(std::string(to_string(CS::GeneralizedDerA)) == "generalized_derA");
    CHECK_THROWS(parse_connection_space("bogus"));
    Sampler s(41);
    for (int i = 0; i < 8; ++i) {
        MixedForm w = s.form(ctx, 1, 1);
        for (CS a : {CS::DerAConnection, CS::AtiyahConnection, CS::NcConnection})
            for (CS b : {CS::DerAConnection, CS::AtiyahConnection, CS::NcConnection})
                CHECK(convert_connection(b, a, convert_connection(a, b, w)) == w);
        CHECK(nc_curvature(convert_connection(CS::DerAConnection, CS::AtiyahConnection, w)) == rep_curvature(w));

        MixedForm omega = s.form(ker, 1, 1);
        MixedForm t = convert_connection(CS::GeneralizedDerA, CS::TracelessNc, omega);
        CHECK(is_traceless(t));
        CHECK(convert_connection(CS::TracelessNc, CS::GeneralizedAtiyah, t) == omega);
        CHECK(convert_connection(CS::GeneralizedAtiyah, CS::GeneralizedDerA, omega) == omega);
        CHECK(nc_curvature(t) == apply_representation(curvature(omega), ctx));
        GammaField xi = s.gamma(2, 3, 1);
        MixedForm xe = apply_representation(MixedForm::function(ker, from_gamma(xi)), ctx);
        CHECK(convert_connection(CS::GeneralizedDerA, CS::TracelessNc, infinitesimal_gauge(omega, xi)) ==
              t + nc_differential(xe) + graded_bracket(t, xe));
    }
    MixedForm bad = MixedForm::dx(ctx, 0, from_matrix(PolyMatrix::identity(2)));
    CHECK_THROWS(convert_connection(CS::TracelessNc, CS::GeneralizedDerA, bad));
    CHECK_THROWS(convert_connection(CS::DerAConnection, CS::TracelessNc, bad));
    CHECK_THROWS(convert_connection(CS::GeneralizedDerA, CS::TracelessNc, bad));
}
