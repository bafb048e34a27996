#include <doctest.h>

#include "tlacalc/fields.hpp"
#include "tlacalc/sampler.hpp"

using namespace tlacalc;

namespace {

RMatrix mat2(long a, long b, long c, long d)
{
    RMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Poly P(const char* s) { return Poly::parse(s); }

} // namespace

TEST_CASE("poly arithmetic and parsing")
{
    Poly p = P("3/2*x1^2*x2 - x2 + 1/3");
    CHECK(p.to_string() == "3/2*x1^2*x2 - x2 + 1/3");
    CHECK(P("(x1 + x2)^2") == P("x1^2 + 2*x1*x2 + x2^2"));
    CHECK(P("x1 - x1").is_zero());
    CHECK(P("0").to_string() == "0");
    CHECK(P("x1^3*x2").derivative(0) == P("3*x1^2*x2"));
    CHECK(P("x1*x2 + x1 + 2").restrict_to_zero(1, 2) == P("x1 + 2"));
    CHECK(P("x1*x2").substitute({P("x2 + 1"), P("x1")}) == P("x1*x2 + x1"));
    CHECK_THROWS(Poly::parse("x1 +"));
    CHECK_THROWS(Poly::parse("x0"));
}

TEST_CASE("degree cap rejects large products")
{
    ScopedDegreeCap cap(3);
    CHECK_NOTHROW(P("x1^2") * P("x2"));
    CHECK_THROWS_AS(P("x1^2") * P("x2^2"), DegreeCapExceeded);
}

TEST_CASE("vector fields act as derivations")
{
    Sampler s(11);
    for (int i = 0; i < 25; ++i) {
        PolyVectorField x = s.vector_field(2, 2, 1);
        Poly f = s.poly(2, 2), g = s.poly(2, 2);
        CHECK(x.apply(f * g) == x.apply(f) * g + f * x.apply(g));
    }
}

TEST_CASE("sl_2 structure constants match matrix commutators")
{
    LieAlgebra sl2 = make_sl(2);
    REQUIRE(sl2.dim() == 3);
    CHECK(make_sl(3).dim() == 8);
    CHECK_THROWS(make_sl(1));
    // Oracle: explicit matrices H, E, F.
    RMatrix h = mat2(1, 0, 0, -1), e = mat2(0, 1, 0, 0), f = mat2(0, 0, 1, 0);
    CHECK(sl2.matrix_basis()[0] == h);
    CHECK(sl2.matrix_basis()[1] == e);
    CHECK(sl2.matrix_basis()[2] == f);
    CHECK(commutator(e, f) == h);
    CHECK(sl2.c(1, 2, 0) == 1); // [E,F] = H
    CHECK(sl2.c(0, 1, 1) == 2); // [H,E] = 2E
    CHECK(sl2.c(0, 2, 2) == -2);
    CHECK(validate_jacobi(sl2));
    CHECK(validate_jacobi(make_sl(3)));
    CHECK(validate_jacobi(make_abelian(4)));
}

TEST_CASE("perturbed sl_2 fails Jacobi")
{
    LieAlgebra sl2 = make_sl(2);
    auto c = sl2.structure_constants();
    auto idx = [](std::size_t i, std::size_t j, std::size_t k) { return (i * 3 + j) * 3 + k; };
    c[idx(0, 1, 1)] = 3;
    c[idx(1, 0, 1)] = -3;
    LieAlgebra broken(3, c);
    // Oracle: the (H, E, F) cyclic sum evaluated by hand from the constants.
    auto br = [&](std::vector<Rational> a, std::vector<Rational> b) { return bracket(broken, a, b); };
    std::vector<Rational> H{1, 0, 0}, E{0, 1, 0}, F{0, 0, 1};
    auto add = [](std::vector<Rational> a, const std::vector<Rational>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] += b[i];
        return a;
    };
    auto cyc = add(add(br(br(H, E), F), br(br(E, F), H)), br(br(F, H), E));
    CHECK(cyc != std::vector<Rational>{0, 0, 0});
    CHECK_FALSE(validate_jacobi(broken));
    CHECK(jacobi_violation(broken).has_value());
    CHECK_THROWS(LieAlgebra(3, std::vector<Rational>(27, Rational(1))));
}

TEST_CASE("heisenberg algebra")
{
    LieAlgebra h = make_heisenberg();
    CHECK(h.dim() == 3);
    CHECK(bracket(h, {1, 0, 0}, {0, 1, 0}) == std::vector<Rational>{0, 0, 1});
    CHECK(bracket(h, {1, 0, 0}, {0, 0, 1}) == std::vector<Rational>{0, 0, 0});
    CHECK(validate_jacobi(h));
}

TEST_CASE("bracket_gamma")
{
    LieAlgebra sl2 = make_sl(2);
    GammaField a(3), b(3);
    a[1] = P("x1");
    b[2] = Poly(1L);
    GammaField expected(3);
    expected[0] = P("x1");
    CHECK(bracket_gamma(sl2, a, b) == expected);
    CHECK(bracket_gamma(sl2, a, a).is_zero());
    CHECK(bracket_gamma(make_abelian(3), a, b).is_zero());
    CHECK_THROWS(bracket_gamma(sl2, a, GammaField(2)));

    Sampler s(5);
    for (int i = 0; i < 25; ++i) {
        GammaField x = s.gamma(2, 3, 1), y = s.gamma(2, 3, 1), z = s.gamma(2, 3, 1);
        GammaField jac = bracket_gamma(sl2, bracket_gamma(sl2, x, y), z) +
                         bracket_gamma(sl2, bracket_gamma(sl2, y, z), x) +
                         bracket_gamma(sl2, bracket_gamma(sl2, z, x), y);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("representations")
{
    LieAlgebra sl3 = make_sl(3);
    CHECK(validate_representation(sl3, adjoint_representation(sl3)));
    CHECK(validate_representation(sl3, defining_representation(sl3)));
    CHECK(validate_representation(sl3, trivial_representation(sl3, 2)));
    CHECK_THROWS(defining_representation(make_abelian(2)));
    Representation bad = defining_representation(make_sl(2));
    bad.matrices[0] = mat2(2, 0, 0, -2);
    CHECK_FALSE(validate_representation(make_sl(2), bad));
}

TEST_CASE("coordinates in the matrix basis")
{
    LieAlgebra sl2 = make_sl(2);
    CHECK(sl2.coordinates(mat2(3, 5, 7, -3)) == std::vector<Rational>{3, 5, 7});
    CHECK_THROWS_AS(sl2.coordinates(mat2(1, 0, 0, 1)), std::domain_error);
}

TEST_CASE("traceless projection")
{
    PolyMatrix id = PolyMatrix::identity(2);
    CHECK(traceless_projection(id).is_zero());
    PolyMatrix d(2, 2);
    d(0, 0) = P("x1");
    PolyMatrix expected(2, 2);
    expected(0, 0) = P("1/2*x1");
    expected(1, 1) = P("-1/2*x1");
    CHECK(traceless_projection(d) == expected);
    Sampler s(3);
    for (int i = 0; i < 25; ++i) {
        PolyMatrix m = s.matrix(2, 3, 2);
        PolyMatrix t = traceless_projection(m);
        CHECK(t.trace().is_zero());
        CHECK(traceless_projection(t) == t);
    }
}

TEST_CASE("group elements from shears")
{
    Sampler s(9);
    for (int i = 0; i < 25; ++i) {
        GroupElementField g = s.shear_element(3, 2);
        CHECK(g.matrix() * g.inverse() == PolyMatrix::identity(3));
        CHECK(g.inverse() * g.matrix() == PolyMatrix::identity(3));
        CHECK(determinant(g.matrix()) == Poly(1L));
    }
    PolyMatrix m = PolyMatrix::identity(2);
    m(0, 0) = Poly(2L);
    CHECK_THROWS(GroupElementField(m, m));
}
