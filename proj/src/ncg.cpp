#include "tlacalc/ncg.hpp"

#include <stdexcept>

namespace tlacalc {

namespace {

void require_nc(const MixedForm& w, const char* what)
{
    if (w.ctx().kind() != ValueKind::Endo)
        throw std::invalid_argument(std::string(what) + ": expected a matrix-valued form");
}

bool is_endo_space(ConnectionSpace s)
{
    return s == ConnectionSpace::DerAConnection || s == ConnectionSpace::AtiyahConnection ||
           s == ConnectionSpace::NcConnection;
}

ContextPtr defining_endo_context(const FormContext& ctx)
{
    return FormContext::endo(ctx.base_dim(), ctx.algebra_ptr(), defining_representation(ctx.algebra()));
}

} // namespace

ContextPtr matrix_ncg_context(std::size_t n) { return endo_ncg_context(0, n); }

ContextPtr endo_ncg_context(std::size_t base_dim, std::size_t n)
{
    auto alg = std::make_shared<const LieAlgebra>(make_sl(n));
    return FormContext::endo(base_dim, alg, defining_representation(*alg));
}

ContextPtr kernel_ncg_context(const FormContext& nc_ctx)
{
    return FormContext::kernel(nc_ctx.base_dim(), nc_ctx.algebra_ptr());
}

TlaElement inner_derivation(const FormContext& nc_ctx, const PolyMatrix& gamma)
{
    return kernel_element(nc_ctx, GammaField(nc_ctx.algebra().coordinates(traceless_projection(gamma))));
}

PolyMatrix derivation_apply(const FormContext& nc_ctx, const TlaElement& x, const PolyMatrix& a)
{
    return to_matrix(nc_ctx, act_on_value(nc_ctx, x, from_matrix(a)));
}

MixedForm canonical_itheta(ContextPtr nc_ctx) { return tautological_form(std::move(nc_ctx)); }

MixedForm nc_differential(const MixedForm& w)
{
    require_nc(w, "nc_differential");
    if (static_cast<std::size_t>(w.degree()) >= w.ctx().num_generators())
        throw std::domain_error("nc_differential: form is already of top degree");
    return differential(w);
}

MixedForm maurer_cartan_defect(ContextPtr nc_ctx)
{
    MixedForm it = canonical_itheta(nc_ctx);
    return nc_differential(it) - wedge(it, it);
}

MixedForm degree_zero_defect(const MixedForm& a)
{
    require_nc(a, "degree_zero_defect");
    if (a.degree() != 0)
        throw std::invalid_argument("degree_zero_defect: expected a 0-form");
    return itheta_commutator_defect(a);
}

MixedForm itheta_commutator_defect(const MixedForm& w)
{
    require_nc(w, "itheta_commutator_defect");
    MixedForm it = canonical_itheta(w.context());
    MixedForm comm = wedge(it, w);
    if (w.degree() % 2)
        comm += wedge(w, it);
    else
        comm -= wedge(w, it);
    return nc_differential(w) - comm;
}

std::pair<MixedForm, MixedForm> higher_degree_witness(ContextPtr nc_ctx)
{
    std::size_t n = nc_ctx->endo_size();
    for (std::size_t a = 0; a < nc_ctx->algebra_dim(); ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                MixedForm w = MixedForm::theta(nc_ctx, a, from_matrix(PolyMatrix::unit(n, i, j)));
                MixedForm defect = itheta_commutator_defect(w);
                if (!defect.is_zero())
                    return {w, defect};
            }
    throw std::runtime_error("higher_degree_witness: no basis 1-form violates the degree-0 relation");
}

std::size_t degree_zero_witness_count(ContextPtr nc_ctx)
{
    std::size_t n = nc_ctx->endo_size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!degree_zero_defect(MixedForm::function(nc_ctx, from_matrix(PolyMatrix::unit(n, i, j)))).is_zero())
                ++count;
    return count;
}

std::size_t inner_derivation_rank(std::size_t n)
{
    LieAlgebra sl = make_sl(n);
    std::vector<std::vector<Rational>> rows;
    for (const auto& gamma : sl.matrix_basis()) {
        // ad_gamma on the unit basis of M_n, flattened.
        std::vector<Rational> row;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                RMatrix img = commutator(gamma, RMatrix::unit(n, i, j));
                row.insert(row.end(), img.data().begin(), img.data().end());
            }
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

PolyMatrix nc_connection_apply(const MixedForm& omega, const TlaElement& x, const PolyMatrix& a)
{
    require_nc(omega, "nc_connection_apply");
    if (omega.degree() != 1)
        throw std::invalid_argument("nc_connection_apply: connection form must have degree 1");
    const FormContext& ctx = omega.ctx();
    return derivation_apply(ctx, x, a) + to_matrix(ctx, evaluate(omega, {x})) * a;
}

MixedForm nc_curvature(const MixedForm& omega)
{
    require_nc(omega, "nc_curvature");
    return rep_curvature(omega);
}

PolyMatrix nc_operator_curvature(const MixedForm& omega, const TlaElement& x, const TlaElement& y, const PolyMatrix& a)
{
    const LieAlgebra& alg = omega.ctx().algebra();
    return nc_connection_apply(omega, x, nc_connection_apply(omega, y, a)) -
           nc_connection_apply(omega, y, nc_connection_apply(omega, x, a)) -
           nc_connection_apply(omega, tla_bracket(alg, x, y), a);
}

MixedForm nc_gauge(const MixedForm& omega, const GroupElementField& g)
{
    require_nc(omega, "nc_gauge");
    return finite_gauge(omega, g);
}

bool is_traceless(const MixedForm& w)
{
    require_nc(w, "is_traceless");
    for (const auto& [mask, v] : w.components())
        if (!to_matrix(w.ctx(), v).trace().is_zero())
            return false;
    return true;
}

const char* to_string(ConnectionSpace space)
{
    switch (space) {
    case ConnectionSpace::DerAConnection:
        return "derA_connection";
    case ConnectionSpace::AtiyahConnection:
        return "atiyah_connection";
    case ConnectionSpace::NcConnection:
        return "nc_connection";
    case ConnectionSpace::GeneralizedDerA:
        return "generalized_derA";
    case ConnectionSpace::GeneralizedAtiyah:
        return "generalized_atiyah";
    case ConnectionSpace::TracelessNc:
        return "traceless_nc";
    }
    return "?";
}

ConnectionSpace parse_connection_space(const std::string& name)
{
    for (auto s : {ConnectionSpace::DerAConnection, ConnectionSpace::AtiyahConnection, ConnectionSpace::NcConnection,
                   ConnectionSpace::GeneralizedDerA, ConnectionSpace::GeneralizedAtiyah, ConnectionSpace::TracelessNc})
        if (name == to_string(s))
            return s;
    throw std::invalid_argument("unknown connection space '" + name + "'");
}

MixedForm convert_connection(ConnectionSpace from, ConnectionSpace to, const MixedForm& payload)
{
    if (payload.degree() != 1)
        throw std::invalid_argument("convert_connection: payload must be a 1-form");
    if (is_endo_space(from) != is_endo_space(to))
        throw std::invalid_argument(std::string("convert_connection: ") + to_string(from) + " and " + to_string(to) +
                                    " are not isomorphic spaces");
    ValueKind expected = (is_endo_space(from) || from == ConnectionSpace::TracelessNc) ? ValueKind::Endo
                                                                                        : ValueKind::Kernel;
    if (payload.ctx().kind() != expected)
        throw std::invalid_argument(std::string("convert_connection: payload does not match tag ") + to_string(from));
    if (from == ConnectionSpace::TracelessNc && !is_traceless(payload))
        throw std::invalid_argument("convert_connection: payload tagged traceless_nc has a trace part");
    if (is_endo_space(from))
        return payload;

    bool from_kernel = from != ConnectionSpace::TracelessNc;
    bool to_kernel = to != ConnectionSpace::TracelessNc;
    if (from_kernel == to_kernel)
        return payload;
    if (from_kernel)
        return apply_representation(payload, defining_endo_context(payload.ctx()));
    ContextPtr kctx = FormContext::kernel(payload.ctx().base_dim(), payload.ctx().algebra_ptr());
    const LieAlgebra& alg = payload.ctx().algebra();
    return map_values(payload, kctx, [&](const Value& v) { return alg.coordinates(to_matrix(payload.ctx(), v)); });
}

} // namespace tlacalc
