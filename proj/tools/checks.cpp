#include "checks.hpp"

#include "tlacalc/ncg.hpp"

#include <algorithm>

namespace tlacalc::cli {

namespace {

// Context and sample helpers.

ContextPtr kernel_ctx(const Scenario& s) { return FormContext::kernel(s.base_dim, s.algebra); }

std::vector<ContextPtr> form_contexts(const Scenario& s)
{
    std::vector<ContextPtr> out{FormContext::scalar(s.base_dim, s.algebra), kernel_ctx(s),
                                FormContext::endo(s.base_dim, s.algebra, adjoint_representation(*s.algebra))};
    if (s.algebra->has_matrix_basis())
        out.push_back(FormContext::endo(s.base_dim, s.algebra, defining_representation(*s.algebra)));
    return out;
}

/// Defining representation when the algebra is a matrix algebra, else the
/// zero representation on Q^2.
ContextPtr rep_ctx(const Scenario& s)
{
    Representation rep = s.algebra->has_matrix_basis() ? defining_representation(*s.algebra)
                                                       : trivial_representation(*s.algebra, 2);
    return FormContext::endo(s.base_dim, s.algebra, std::move(rep));
}

GaugePotential random_potential(Sampler& rng, std::size_t d, std::size_t m)
{
    GaugePotential a;
    for (std::size_t mu = 0; mu < d; ++mu)
        a.components.push_back(rng.gamma(d, m, 1));
    return a;
}

/// The scenario potential (if any) followed by random ones, `count` in total.
std::vector<GaugePotential> potentials(CheckContext& c, std::size_t m, std::size_t count)
{
    std::vector<GaugePotential> out;
    if (c.scenario.potential && c.scenario.potential->components.at(0).dim() == m)
        out.push_back(*c.scenario.potential);
    while (out.size() < count)
        out.push_back(random_potential(c.rng, c.scenario.base_dim, m));
    return out;
}

std::vector<TlaElement> elements(Sampler& rng, const FormContext& ctx, std::size_t r)
{
    std::vector<TlaElement> out;
    for (std::size_t i = 0; i < r; ++i)
        out.push_back(rng.element(ctx, 1));
    return out;
}

Json form_json(const MixedForm& w) { return form_to_json(w); }

std::size_t atlas_size(const Scenario& s)
{
    if (s.atlas && !s.atlas->g.empty())
        return s.atlas->g.begin()->second.size();
    return s.matrix_size;
}

/// Three charts with g_01 a shear with at most one linear parameter and g_12
/// constant, so that all transition data stays within the degree cap.
BundleTransitions random_family(Sampler& rng, std::size_t n, std::size_t d)
{
    BundleTransitions b;
    b.charts = {"U0", "U1", "U2"};
    b.g.emplace(std::make_pair(0, 1), rng.shear_element(n, d));
    b.g.emplace(std::make_pair(1, 2), rng.shear_element(n, 0));
    return b;
}

std::vector<BundleTransitions> families(CheckContext& c, std::size_t count)
{
    std::vector<BundleTransitions> out;
    if (c.scenario.atlas)
        out.push_back(*c.scenario.atlas);
    std::size_t n = atlas_size(c.scenario);
    while (out.size() < count)
        out.push_back(random_family(c.rng, n, c.scenario.base_dim));
    return out;
}

UnipotentGroup group_of(const Scenario& s) { return s.group ? *s.group : UnipotentGroup::heisenberg(); }

Value curvature_by_koszul(const MixedForm& alpha, const TlaElement& a, const TlaElement& b)
{
    Value out = differential_via_koszul(alpha, {a, b});
    Value br = alpha.ctx().bracket(evaluate(alpha, {a}), evaluate(alpha, {b}));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += br[i];
    return out;
}

Json value_json(const FormContext& ctx, const Value& v) { return value_to_json(ctx, v); }

// tla_forms

void check_d_squared(CheckContext& c)
{
    const Scenario& s = c.scenario;
    for (const auto& ctx : form_contexts(s))
        for (int p = 0; p <= std::min<int>(3, static_cast<int>(s.base_dim)); ++p)
            for (int q = 0; p + q <= 3 && q <= static_cast<int>(s.algebra->dim()); ++q)
                for (std::size_t i = 0; i < c.samples; ++i) {
                    MixedForm w = c.rng.form(ctx, p, q, 2);
                    MixedForm dd = differential(differential(w));
                    c.expect(dd.is_zero(), "d(d w) = 0", [&] { return Json{{"w", form_json(w)}, {"ddw", form_json(dd)}}; });
                }
}

void check_koszul(CheckContext& c)
{
    for (const auto& ctx : form_contexts(c.scenario))
        for (std::size_t i = 0; i < c.samples; ++i) {
            int r = static_cast<int>(c.rng.integer(0, 2));
            MixedForm w = c.rng.form(ctx, r, 1);
            auto args = elements(c.rng, *ctx, static_cast<std::size_t>(r + 1));
            Value lhs = evaluate(differential(w), args), rhs = differential_via_koszul(w, args);
            c.expect(lhs == rhs, "componentwise d agrees with the Koszul formula", [&] {
                return Json{{"w", form_json(w)}, {"componentwise", value_json(*ctx, lhs)}, {"koszul", value_json(*ctx, rhs)}};
            });
        }
}

void check_cartan(CheckContext& c)
{
    for (const auto& ctx : form_contexts(c.scenario))
        for (std::size_t i = 0; i < c.samples; ++i) {
            TlaElement x = c.rng.element(*ctx, 1), y = c.rng.element(*ctx, 1);
            Poly f = c.rng.poly(c.scenario.base_dim, 1);
            MixedForm w = c.rng.form(ctx, static_cast<int>(c.rng.integer(0, 2)), 1);
            CartanDefects d = cartan_defects(x, y, f, w);
            c.expect(d.all_zero(), "Cartan relations", [&] {
                return Json{{"w", form_json(w)},
                            {"linearity", form_json(d.linearity)},
                            {"anticommutator", form_json(d.anticommutator)},
                            {"lie_interior", form_json(d.lie_interior)},
                            {"lie_lie", form_json(d.lie_lie)}};
            });
        }
}

// connections

void check_normalization(CheckContext& c)
{
    auto k = kernel_ctx(c.scenario);
    for (const auto& a : potentials(c, k->algebra_dim(), c.samples)) {
        MixedForm alpha = connection_from_potential(k, a);
        c.expect(is_normalized(alpha), "alpha(0 + e_a) = -e_a", [&] { return form_json(alpha); });
        TlaElement x = c.rng.element(*k, 1);
        GammaField expected(k->algebra_dim());
        for (std::size_t mu = 0; mu < k->base_dim(); ++mu)
            expected += x.x[mu] * a.components[mu];
        expected -= x.gamma;
        c.expect(evaluate(alpha, {x}) == from_gamma(expected), "alpha(X + gamma) = A(X) - gamma",
                 [&] { return form_json(alpha); });
    }
}

void check_curvature_oracle(CheckContext& c)
{
    auto k = kernel_ctx(c.scenario);
    for (const auto& a : potentials(c, k->algebra_dim(), c.samples)) {
        MixedForm alpha = connection_from_potential(k, a);
        auto args = elements(c.rng, *k, 2);
        Value lhs = evaluate(curvature(alpha), args), rhs = curvature_by_koszul(alpha, args[0], args[1]);
        c.expect(lhs == rhs, "curvature matches the Koszul expansion", [&] {
            return Json{{"alpha", form_json(alpha)}, {"curvature", value_json(*k, lhs)}, {"koszul", value_json(*k, rhs)}};
        });
    }
}

void check_curvature_horizontal(CheckContext& c)
{
    auto k = kernel_ctx(c.scenario);
    auto op = kernel_operation(*k);
    for (const auto& a : potentials(c, k->algebra_dim(), c.samples)) {
        MixedForm r = curvature(connection_from_potential(k, a));
        c.expect(is_horizontal(r, op), "curvature is horizontal", [&] { return form_json(r); });
    }
}

void check_bianchi(CheckContext& c)
{
    auto k = kernel_ctx(c.scenario);
    for (const auto& a : potentials(c, k->algebra_dim(), c.samples)) {
        MixedForm alpha = connection_from_potential(k, a);
        MixedForm defect = bianchi_defect(alpha);
        c.expect(defect.is_zero(), "d R + [alpha, R] = 0", [&] { return form_json(defect); });
    }
}

void check_covariant_square(CheckContext& c)
{
    auto k = kernel_ctx(c.scenario);
    for (const auto& a : potentials(c, k->algebra_dim(), c.samples)) {
        MixedForm alpha = connection_from_potential(k, a);
        MixedForm eta = c.rng.form(k, static_cast<int>(c.rng.integer(0, 1)), 1);
        MixedForm lhs = covariant_differential(alpha, covariant_differential(alpha, eta));
        MixedForm rhs = graded_bracket(curvature(alpha), eta);
        c.expect(lhs == rhs, "D(D eta) = [R, eta]", [&] { return Json{{"eta", form_json(eta)}, {"defect", form_json(lhs - rhs)}}; });
    }
}

void check_flat(CheckContext& c)
{
    auto k = kernel_ctx(c.scenario);
    MixedForm flat = flat_connection(k);
    c.expect(is_normalized(flat), "flat connection is normalized");
    MixedForm r = curvature(flat);
    c.expect(r.is_zero(), "curvature of -theta vanishes", [&] { return form_json(r); });
    for (std::size_t i = 0; i < c.samples; ++i) {
        TlaElement a = kernel_element(*k, c.rng.gamma(k->base_dim(), k->algebra_dim(), 1));
        TlaElement b = kernel_element(*k, c.rng.gamma(k->base_dim(), k->algebra_dim(), 1));
        Value v = curvature_by_koszul(flat, a, b);
        c.expect(v == k->zero_value(), "Koszul expansion of the flat curvature vanishes",
                 [&] { return value_json(*k, v); });
    }
}

void check_infinitesimal_gauge(CheckContext& c)
{
    auto k = kernel_ctx(c.scenario);
    for (const auto& a : potentials(c, k->algebra_dim(), c.samples)) {
        MixedForm alpha = connection_from_potential(k, a);
        GammaField xi = c.rng.gamma(k->base_dim(), k->algebra_dim(), 1);
        MixedForm changed = infinitesimal_gauge(alpha, xi);
        c.expect(is_normalized(changed), "gauge transform stays normalized", [&] { return form_json(changed); });
        MixedForm lie = lie_derivative(kernel_element(*k, xi), alpha);
        c.expect(lie == -(changed - alpha), "L_xi alpha = -(d xi + [alpha, xi])",
                 [&] { return form_json(lie + (changed - alpha)); });
    }
    c.expect(infinitesimal_gauge(flat_connection(k), GammaField(k->algebra_dim())) == flat_connection(k),
             "zero gauge parameter");
}

void check_rep_curvature(CheckContext& c)
{
    auto k = kernel_ctx(c.scenario);
    std::vector<ContextPtr> reps{FormContext::endo(k->base_dim(), k->algebra_ptr(), adjoint_representation(k->algebra())),
                                 rep_ctx(c.scenario)};
    for (std::size_t i = 0; i < c.samples; ++i) {
        MixedForm omega = c.rng.form(k, 1, 1);
        for (const auto& e : reps) {
            MixedForm lhs = rep_curvature(induce_rep_connection(omega, e));
            MixedForm rhs = apply_representation(curvature(omega), e);
            c.expect(lhs == rhs, "curvature of the induced connection is the image of the curvature",
                     [&] { return Json{{"omega", form_json(omega)}, {"defect", form_json(lhs - rhs)}}; });
        }
        MixedForm w = c.rng.form(reps.back(), 1, 1);
        MixedForm defect = rep_bianchi_defect(w);
        c.expect(defect.is_zero(), "Bianchi identity of a representation connection",
                 [&] { return Json{{"omega", form_json(w)}, {"defect", form_json(defect)}}; });
    }
}

void check_finite_gauge(CheckContext& c)
{
    auto e = rep_ctx(c.scenario);
    std::size_t n = e->endo_size();
    std::vector<GroupElementField> gs = c.scenario.gauge_elements;
    while (gs.size() < c.samples)
        gs.push_back(c.rng.shear_element(n, c.scenario.base_dim));
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto& g = gs[i];
        const auto& h = gs[(i + 1) % gs.size()];
        MixedForm w = c.rng.form(e, 1, 1);
        MixedForm wg = finite_gauge(w, g);
        MixedForm lhs = rep_curvature(wg);
        MixedForm rhs = left_multiply(g.inverse(), right_multiply(rep_curvature(w), g.matrix()));
        c.expect(lhs == rhs, "curvature is conjugated", [&] {
            return Json{{"omega", form_json(w)}, {"g", group_element_to_json(g)}, {"defect", form_json(lhs - rhs)}};
        });
        c.expect(finite_gauge(wg, h) == finite_gauge(w, g * h), "right action",
                 [&] { return Json{{"omega", form_json(w)}, {"g", group_element_to_json(g)}}; });
        c.expect(finite_gauge(w, GroupElementField::identity(n)) == w, "identity acts trivially");
    }
}

// ncg

void check_maurer_cartan(CheckContext& c)
{
    std::size_t n = c.scenario.matrix_size;
    for (const auto& ctx : {matrix_ncg_context(n), endo_ncg_context(c.scenario.base_dim, n)}) {
        MixedForm defect = maurer_cartan_defect(ctx);
        c.expect(defect.is_zero(), "d'(i theta) - (i theta)^2 = 0", [&] { return form_json(defect); });
    }
    c.result.detail["n"] = n;
}

void check_degree_zero(CheckContext& c)
{
    std::size_t n = c.scenario.matrix_size;
    auto m = matrix_ncg_context(n);
    std::size_t count = degree_zero_witness_count(m);
    c.expect(count == 0, "d'E_ij = [i theta, E_ij] for every matrix unit", [&] { return Json(count); });
    auto e = endo_ncg_context(c.scenario.base_dim, n);
    for (std::size_t i = 0; i < c.samples; ++i) {
        MixedForm a = MixedForm::function(e, from_matrix(c.rng.matrix(0, n, 0)));
        MixedForm defect = degree_zero_defect(a);
        c.expect(defect.is_zero(), "d'a = [i theta, a]", [&] { return Json{{"a", form_json(a)}, {"defect", form_json(defect)}}; });
    }
}

void check_higher_degree(CheckContext& c)
{
    auto m = matrix_ncg_context(c.scenario.matrix_size);
    try {
        auto [w, defect] = higher_degree_witness(m);
        c.expect(!defect.is_zero() && defect.degree() == 2, "nonzero degree-2 defect");
        c.result.detail["form"] = form_json(w);
        c.result.detail["defect"] = form_json(defect);
    } catch (const std::runtime_error& e) {
        c.expect(false, "a basis 1-form violates the degree-0 relation", [&] { return Json(e.what()); });
    }
}

void check_inner_derivations(CheckContext& c)
{
    std::size_t n = c.scenario.matrix_size;
    std::size_t r = inner_derivation_rank(n);
    c.expect(r == n * n - 1, "gamma -> ad_gamma is injective on sl_n", [&] { return Json(r); });
    c.result.detail["rank"] = r;
}

void check_nc_curvature(CheckContext& c)
{
    std::size_t n = c.scenario.matrix_size;
    auto e = endo_ncg_context(c.scenario.base_dim, n);
    for (std::size_t i = 0; i < c.samples; ++i) {
        MixedForm omega = c.rng.form(e, 1, 1);
        TlaElement x = c.rng.element(*e, 1), y = c.rng.element(*e, 1);
        PolyMatrix a = c.rng.matrix(c.scenario.base_dim, n, 1), m = c.rng.matrix(c.scenario.base_dim, n, 1);
        PolyMatrix op = nc_operator_curvature(omega, x, y, a);
        PolyMatrix form = to_matrix(*e, evaluate(nc_curvature(omega), {x, y})) * a;
        c.expect(op == form, "operator curvature equals the 2-form curvature",
                 [&] { return Json{{"omega", form_json(omega)}, {"defect", value_to_json(*e, from_matrix(op - form))}}; });
        c.expect(nc_connection_apply(omega, x, m * a) ==
                     m * derivation_apply(*e, x, a) + nc_connection_apply(omega, x, m) * a,
                 "Leibniz rule", [&] { return form_json(omega); });
    }
}

void check_nc_gauge(CheckContext& c)
{
    std::size_t n = c.scenario.matrix_size;
    auto e = endo_ncg_context(c.scenario.base_dim, n);
    for (std::size_t i = 0; i < c.samples; ++i) {
        GroupElementField g = c.rng.shear_element(n, c.scenario.base_dim);
        GroupElementField h = c.rng.shear_element(n, c.scenario.base_dim);
        MixedForm omega = c.rng.form(e, 1, 1);
        MixedForm lhs = nc_curvature(nc_gauge(omega, g));
        MixedForm rhs = left_multiply(g.inverse(), right_multiply(nc_curvature(omega), g.matrix()));
        c.expect(lhs == rhs, "curvature is conjugated", [&] {
            return Json{{"omega", form_json(omega)}, {"g", group_element_to_json(g)}, {"defect", form_json(lhs - rhs)}};
        });
        c.expect(nc_gauge(nc_gauge(omega, g), h) == nc_gauge(omega, g * h), "right action",
                 [&] { return form_json(omega); });
    }
}

void check_three_spaces(CheckContext& c)
{
    using CS = ConnectionSpace;
    std::size_t n = c.scenario.matrix_size;
    auto e = endo_ncg_context(c.scenario.base_dim, n);
    const CS spaces[] = {CS::DerAConnection, CS::AtiyahConnection, CS::NcConnection};
    for (std::size_t i = 0; i < c.samples; ++i) {
        MixedForm w = c.rng.form(e, 1, 1);
        for (CS a : spaces)
            for (CS b : spaces)
                c.expect(convert_connection(b, a, convert_connection(a, b, w)) == w, "round trip",
                         [&] { return Json{{"from", to_string(a)}, {"to", to_string(b)}, {"payload", form_json(w)}}; });
        MixedForm nc = convert_connection(CS::DerAConnection, CS::NcConnection, w);
        c.expect(nc_curvature(nc) == rep_curvature(w), "curvature commutes with the conversion",
                 [&] { return form_json(w); });
        GroupElementField g = c.rng.shear_element(n, c.scenario.base_dim);
        c.expect(nc_gauge(nc, g) == convert_connection(CS::AtiyahConnection, CS::NcConnection, finite_gauge(w, g)),
                 "gauge action commutes with the conversion", [&] { return form_json(w); });
    }
}

void check_traceless(CheckContext& c)
{
    using CS = ConnectionSpace;
    std::size_t n = c.scenario.matrix_size;
    auto e = endo_ncg_context(c.scenario.base_dim, n);
    auto k = kernel_ncg_context(*e);
    for (std::size_t i = 0; i < c.samples; ++i) {
        MixedForm omega = c.rng.form(k, 1, 1);
        MixedForm t = convert_connection(CS::GeneralizedDerA, CS::TracelessNc, omega);
        c.expect(is_traceless(t), "image is traceless", [&] { return form_json(t); });
        for (CS back : {CS::GeneralizedDerA, CS::GeneralizedAtiyah})
            c.expect(convert_connection(CS::TracelessNc, back, t) == omega, "round trip",
                     [&] { return form_json(omega); });
        c.expect(nc_curvature(t) == apply_representation(curvature(omega), e), "curvature commutes with the conversion",
                 [&] { return form_json(omega); });
        GammaField xi = c.rng.gamma(c.scenario.base_dim, k->algebra_dim(), 1);
        MixedForm xe = apply_representation(MixedForm::function(k, from_gamma(xi)), e);
        c.expect(convert_connection(CS::GeneralizedDerA, CS::TracelessNc, infinitesimal_gauge(omega, xi)) ==
                     t + nc_differential(xe) + graded_bracket(t, xe),
                 "infinitesimal gauge action commutes with the conversion", [&] { return form_json(omega); });
    }
}

// atiyah_model

std::vector<Poly> substitute_all(const std::vector<Poly>& ps, const std::vector<Poly>& images)
{
    std::vector<Poly> out;
    for (const auto& p : ps)
        out.push_back(p.substitute(images));
    return out;
}

void check_group_law(CheckContext& c)
{
    UnipotentGroup g = group_of(c.scenario);
    std::size_t k = g.dim();
    auto vars = [](std::size_t offset, std::size_t count) {
        std::vector<Poly> v;
        for (std::size_t s = 0; s < count; ++s)
            v.push_back(Poly::var(offset + s));
        return v;
    };
    auto concat = [](std::vector<Poly> a, const std::vector<Poly>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    auto mu = g.multiply(0, k);
    auto lhs = substitute_all(mu, concat(mu, vars(2 * k, k)));
    auto rhs = substitute_all(mu, concat(vars(0, k), g.multiply(k, 2 * k)));
    c.expect(lhs == rhs, "mu(mu(y, y'), y'') = mu(y, mu(y', y''))");
    c.expect(g.element(0) * g.inverse(0) == PolyMatrix::identity(g.n()), "g(y) g(y)^-1 = 1");
    c.expect(g.adjoint_inverse(0) * g.adjoint(0) == PolyMatrix::identity(k), "Ad_{g^-1} Ad_g = 1");
    PolyMatrix ad = g.adjoint(0), composed(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            composed(i, j) = ad(i, j).substitute(mu);
    c.expect(g.adjoint(0) * g.adjoint(k) == composed, "Ad is a homomorphism");
}

void check_equ_cartan(CheckContext& c)
{
    AtiyahModel model(c.scenario.base_dim, group_of(c.scenario));
    auto op = model.equ_operation();
    std::size_t vars = model.bundle_context()->base_dim();
    for (std::size_t i = 0; i < c.samples; ++i) {
        const auto& x = op.generators[static_cast<std::size_t>(c.rng.integer(0, static_cast<long>(op.generators.size()) - 1))];
        const auto& y = op.generators[static_cast<std::size_t>(c.rng.integer(0, static_cast<long>(op.generators.size()) - 1))];
        MixedForm w = c.rng.form(model.bundle_context(), static_cast<int>(c.rng.integer(0, 2)), 1);
        CartanDefects d = cartan_defects(x, y, c.rng.poly(vars, 1), w);
        c.expect(d.all_zero(), "Cartan relations for the equivariant operation", [&] { return form_json(w); });
    }
    for (const auto& x : op.generators)
        c.expect(lie_derivative(x, model.maurer_cartan_on_P()).is_zero(), "theta is invariant");
}

void check_connection_hat(CheckContext& c)
{
    AtiyahModel model(c.scenario.base_dim, group_of(c.scenario));
    auto op = model.equ_operation();
    for (const auto& a : potentials(c, model.group().dim(), c.samples)) {
        MixedForm hat = model.connection_hat(a);
        c.expect(is_basic(hat, op), "connection_hat is basic", [&] { return form_json(hat); });
    }
}

void check_lambda(CheckContext& c)
{
    AtiyahModel model(c.scenario.base_dim, group_of(c.scenario));
    const auto& base = model.base_context();
    for (const auto& a : potentials(c, model.group().dim(), c.samples)) {
        MixedForm hat = model.connection_hat(a);
        MixedForm alpha = connection_from_potential(base, a);
        MixedForm restricted = model.lambda_restrict(hat);
        c.expect(restricted == alpha, "lambda(connection_hat(A)) = A - theta",
                 [&] { return Json{{"restricted", form_json(restricted)}, {"expected", form_json(alpha)}}; });
        c.expect(model.reconstruct(alpha) == hat, "reconstruct(A - theta) = connection_hat(A)",
                 [&] { return form_json(alpha); });
        MixedForm w = c.rng.form(base, static_cast<int>(c.rng.integer(0, 2)), 1);
        MixedForm ext = model.reconstruct(w);
        c.expect(model.lambda_restrict(ext) == w, "lambda(reconstruct(w)) = w", [&] { return form_json(w); });
        c.expect(model.lambda_restrict(differential(ext)) == differential(w), "lambda is a chain map",
                 [&] { return form_json(w); });
    }
}

void check_curvature_correspondence(CheckContext& c)
{
    AtiyahModel model(c.scenario.base_dim, group_of(c.scenario));
    const auto& base = model.base_context();
    auto op = model.equ_operation();
    for (const auto& a : potentials(c, model.group().dim(), c.samples)) {
        MixedForm r = curvature(model.connection_hat(a));
        c.expect(is_basic(r, op), "curvature on P is basic", [&] { return form_json(r); });
        MixedForm f = model.lambda_restrict(r);
        c.expect(f == curvature(connection_from_potential(base, a)), "restriction is the curvature of A - theta",
                 [&] { return form_json(f); });
        MixedForm pot = potential_form(base, a);
        MixedForm field = (differential(pot) + Rational(1, 2) * graded_bracket(pot, pot)).bidegree_part(2, 0);
        c.expect(f.bidegree_part(2, 0) == field, "F = dA + 1/2 [A, A]", [&] { return form_json(f - field); });
        c.expect(f.bidegree_part(1, 1).is_zero() && f.bidegree_part(0, 2).is_zero(), "mixed components vanish",
                 [&] { return form_json(f); });
    }
}

// atlas

LieAlgebraPtr atlas_algebra(const Scenario& s)
{
    return std::make_shared<const LieAlgebra>(make_sl(atlas_size(s)));
}

void check_cocycle(CheckContext& c)
{
    auto alg = atlas_algebra(c.scenario);
    std::size_t d = c.scenario.base_dim;
    bool reported = false;
    for (const auto& fam : families(c, c.samples)) {
        TransitionData t = transitions_from_bundle(d, alg, fam);
        CocycleReport ok = validate_cocycle(t);
        c.expect(ok.ok, "transitions from a bundle satisfy the cocycle relations",
                 [&] { return Json{{"relation", ok.relation}, {"detail", ok.detail}}; });
        for (std::size_t i = 0; i < t.num_charts(); ++i)
            for (std::size_t j = 0; j < t.num_charts(); ++j)
                c.expect(alpha_is_automorphism(t, i, j), "alpha_ij is an automorphism");
        if (t.num_charts() < 2)
            continue;
        // Perturbing chi_01 by e_1 dx^1 must be caught with a triple through (0, 1).
        t.get(0, 1).chi[0] += GammaField::basis(alg->dim(), 0);
        CocycleReport bad = validate_cocycle(t);
        bool named = bad.triple && bad.relation == "chi" &&
                     std::count(bad.triple->begin(), bad.triple->end(), 0) > 0 &&
                     std::count(bad.triple->begin(), bad.triple->end(), 1) > 0;
        c.expect(!bad.ok && named, "perturbed transitions fail with a named triple",
                 [&] { return Json{{"relation", bad.relation}, {"detail", bad.detail}}; });
        if (!reported && bad.triple) {
            const auto& tr = *bad.triple;
            c.result.detail["perturbed_triple"] = Json{t.charts()[tr[0]], t.charts()[tr[1]], t.charts()[tr[2]]};
            c.result.detail["perturbed_relation"] = bad.relation;
            reported = true;
        }
    }
}

void check_glue(CheckContext& c)
{
    auto alg = atlas_algebra(c.scenario);
    std::size_t d = c.scenario.base_dim;
    for (const auto& fam : families(c, c.samples)) {
        TransitionData t = transitions_from_bundle(d, alg, fam);
        BundleTransitions full = complete_bundle_transitions(fam);
        PolyVectorField x = c.rng.vector_field(d, d, 1);
        std::size_t last = t.num_charts() - 1;
        LocalElementFamily f = glue(t, x, {{last, c.rng.gamma(d, alg->dim(), 1)}});
        for (std::size_t i = 0; i < t.num_charts(); ++i)
            for (std::size_t j = 0; j < t.num_charts(); ++j) {
                const GroupElementField& g = full.g.at({i, j});
                PolyMatrix expected = g.matrix() * alg->to_matrix(f.gamma[j].components()) * g.inverse() +
                                      g.matrix() * x.apply(g.inverse());
                c.expect(alg->to_matrix(f.gamma[i].components()) == expected, "gamma_i = alpha_ij(gamma_j) + chi_ij(X)",
                         [&] { return Json{{"pair", Json{t.charts()[i], t.charts()[j]}}}; });
            }
        if (t.num_charts() > 1) {
            bool rejected = false;
            try {
                std::map<std::size_t, GammaField> partial{{0, f.gamma[0] + GammaField::basis(alg->dim(), 0)}, {last, f.gamma[last]}};
                glue(t, x, partial);
            } catch (const std::domain_error&) {
                rejected = true;
            }
            c.expect(rejected, "inconsistent local data is rejected");
        }
    }
}

void check_chi_formulas(CheckContext& c)
{
    auto alg = atlas_algebra(c.scenario);
    std::size_t d = c.scenario.base_dim;
    for (const auto& fam : families(c, c.samples))
        for (const auto& [pair, g] : complete_bundle_transitions(fam).g)
            c.expect(chi_via_action(d, *alg, g) == chi_via_differential(d, *alg, g),
                     "g d(g^-1)(X) = g (X . g^-1)", [&] { return group_element_to_json(g); });
}

} // namespace

const std::vector<CheckInfo>& check_registry()
{
    static const std::vector<CheckInfo> registry = {
        {"d_squared", "tla_forms", "so that d̂ = d + s′", check_d_squared},
        {"koszul_agreement", "tla_forms", "by the Koszul formula", check_koszul},
        {"cartan_relations", "tla_forms", "A Cartan operation of", check_cartan},
        {"normalization", "connections", "α ∘ ι(ℓ) = −ℓ", check_normalization},
        {"curvature_oracle", "connections", "R̂ = d̂α + ½[α,α]", check_curvature_oracle},
        {"curvature_horizontal", "connections", "horizontal for the Cartan operation", check_curvature_horizontal},
        {"bianchi", "connections", "It satisfies the Bianchi identity", check_bianchi},
        {"covariant_square", "connections", "D²η = [R̂, η]", check_covariant_square},
        {"flat_connection", "connections", "θ(ξ) = ξ for any ξ", check_flat},
        {"infinitesimal_gauge", "connections", "given by the Lie derivative", check_infinitesimal_gauge},
        {"rep_curvature", "connections", "R̂^E = φ_L ∘ R̂", check_rep_curvature},
        {"finite_gauge", "connections", "ω^{E,g} = g⁻¹ ω^E g + g⁻¹ d̂_E g", check_finite_gauge},
        {"maurer_cartan_matrix", "ncg", "d′(iθ) − (iθ)² = 0", check_maurer_cartan},
        {"degree_zero_relation", "ncg", "d′a = [iθ, a]", check_degree_zero},
        {"higher_degree_witness", "ncg", "no longer true in higher degrees", check_higher_degree},
        {"inner_derivations", "ncg", "der(M_n) = Int(M_n) ≃ sl_n", check_inner_derivations},
        {"nc_curvature", "ncg", "Ω(X,Y) = dω(X,Y) + [ω(X), ω(Y)]", check_nc_curvature},
        {"nc_gauge", "ncg", "Ω ↦ Ω^g = g⁻¹Ωg", check_nc_gauge},
        {"theorem_three_spaces", "ncg", "The following three spaces are isomorphic", check_three_spaces},
        {"theorem_traceless", "ncg", "traceless noncommutative connections on the", check_traceless},
        {"group_law", "atiyah_model", "structure group G is connected and simply connected", check_group_law},
        {"equ_cartan", "atiyah_model", "g_equ = { ξ^P ⊕ ξ / ξ ∈ g }", check_equ_cartan},
        {"connection_hat_basic", "atiyah_model", "is g_equ-basic", check_connection_hat},
        {"lambda_restrict", "atiyah_model", "isomorphic as differential graded complexes", check_lambda},
        {"curvature_correspondence", "atiyah_model", "where Ω is the curvature", check_curvature_correspondence},
        {"cocycle", "atlas", "one has the cocycle relations", check_cocycle},
        {"glue", "atlas", "γ_i = α_ij(γ_j) + χ_ij(X)", check_glue},
        {"chi_formulas", "atlas", "χ_ij(X) = g_ij (X·g_ij⁻¹)", check_chi_formulas},
    };
    return registry;
}

const CheckInfo* find_check(std::string_view name)
{
    for (const auto& c : check_registry())
        if (name == c.name)
            return &c;
    return nullptr;
}

std::uint64_t check_seed(std::uint64_t seed, std::string_view name)
{
    // FNV-1a over the name, mixed with the scenario seed.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h ^ (seed * 0x9E3779B97F4A7C15ull);
}

CheckResult run_check(const CheckInfo& check, const Scenario& scenario, std::uint64_t seed, std::size_t samples)
{
    CheckContext ctx{scenario, Sampler(check_seed(seed, check.name)), samples, {}};
    check.run(ctx);
    return std::move(ctx.result);
}

} // namespace tlacalc::cli
