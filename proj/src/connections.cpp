#include "tlacalc/connections.hpp"

#include <stdexcept>

namespace tlacalc {

namespace {

void require_kind(const MixedForm& w, ValueKind kind, int degree, const char* what)
{
    if (w.ctx().kind() != kind)
        throw std::invalid_argument(std::string(what) + ": expected a " + to_string(kind) + "-valued form");
    if (degree >= 0 && w.degree() != degree)
        throw std::invalid_argument(std::string(what) + ": wrong form degree");
}

} // namespace

MixedForm potential_form(ContextPtr kernel_ctx, const GaugePotential& a)
{
    if (kernel_ctx->kind() != ValueKind::Kernel)
        throw std::invalid_argument("potential needs a kernel-valued context");
    if (a.components.size() != kernel_ctx->base_dim())
        throw std::invalid_argument("potential needs one component per base coordinate");
    MixedForm out(kernel_ctx, 1);
    for (std::size_t mu = 0; mu < a.components.size(); ++mu) {
        if (a.components[mu].dim() != kernel_ctx->algebra_dim())
            throw std::invalid_argument("potential component has the wrong algebra dimension");
        out.add(dx_mask(mu), from_gamma(a.components[mu]));
    }
    return out;
}

GaugePotential potential_of(const MixedForm& w)
{
    require_kind(w, ValueKind::Kernel, 1, "potential_of");
    GaugePotential a;
    for (std::size_t mu = 0; mu < w.ctx().base_dim(); ++mu)
        a.components.push_back(to_gamma(w.component(dx_mask(mu))));
    return a;
}

MixedForm connection_from_potential(ContextPtr kernel_ctx, const GaugePotential& a)
{
    MixedForm alpha = potential_form(kernel_ctx, a);
    alpha -= tautological_form(kernel_ctx);
    return alpha;
}

MixedForm flat_connection(ContextPtr kernel_ctx) { return -tautological_form(std::move(kernel_ctx)); }

bool is_normalized(const MixedForm& alpha)
{
    require_kind(alpha, ValueKind::Kernel, 1, "is_normalized");
    std::size_t m = alpha.ctx().algebra_dim();
    for (std::size_t a = 0; a < m; ++a) {
        GammaField expected = -GammaField::basis(m, a);
        if (!(to_gamma(alpha.component(theta_mask(alpha.ctx(), a))) == expected))
            return false;
    }
    return true;
}

MixedForm curvature(const MixedForm& alpha)
{
    require_kind(alpha, ValueKind::Kernel, 1, "curvature");
    return differential(alpha) + Rational(1, 2) * graded_bracket(alpha, alpha);
}

MixedForm bianchi_defect(const MixedForm& alpha)
{
    MixedForm r = curvature(alpha);
    return differential(r) + graded_bracket(alpha, r);
}

MixedForm covariant_differential(const MixedForm& alpha, const MixedForm& eta)
{
    require_kind(alpha, ValueKind::Kernel, 1, "covariant_differential");
    require_kind(eta, ValueKind::Kernel, -1, "covariant_differential");
    return differential(eta) + graded_bracket(alpha, eta);
}

MixedForm infinitesimal_gauge(const MixedForm& omega, const GammaField& xi)
{
    require_kind(omega, ValueKind::Kernel, 1, "infinitesimal_gauge");
    MixedForm x = MixedForm::function(omega.context(), from_gamma(xi));
    return omega + differential(x) + graded_bracket(omega, x);
}

MixedForm apply_representation(const MixedForm& w, ContextPtr endo_ctx)
{
    require_kind(w, ValueKind::Kernel, -1, "apply_representation");
    if (endo_ctx->kind() != ValueKind::Endo || !endo_ctx->same_algebroid(w.ctx()))
        throw std::invalid_argument("apply_representation: target must be an Endo context over the same algebroid");
    const auto& mats = endo_ctx->representation().matrices;
    std::size_t n = endo_ctx->endo_size();
    return map_values(w, endo_ctx, [&](const Value& v) {
        Value out(n * n);
        for (std::size_t a = 0; a < v.size(); ++a) {
            if (v[a].is_zero())
                continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (mats[a](i, j) != 0)
                        out[i * n + j] += v[a] * mats[a](i, j);
        }
        return out;
    });
}

MixedForm induce_rep_connection(const MixedForm& omega, ContextPtr endo_ctx)
{
    require_kind(omega, ValueKind::Kernel, 1, "induce_rep_connection");
    return apply_representation(omega, std::move(endo_ctx));
}

MixedForm rep_curvature(const MixedForm& omega)
{
    require_kind(omega, ValueKind::Endo, 1, "rep_curvature");
    return differential(omega) + wedge(omega, omega);
}

MixedForm rep_bianchi_defect(const MixedForm& omega)
{
    MixedForm r = rep_curvature(omega);
    return differential(r) + graded_bracket(omega, r);
}

MixedForm finite_gauge(const MixedForm& omega, const GroupElementField& g)
{
    require_kind(omega, ValueKind::Endo, 1, "finite_gauge");
    if (g.size() != omega.ctx().endo_size())
        throw std::invalid_argument("finite_gauge: gauge element size differs from the representation");
    MixedForm dg = differential(MixedForm::function(omega.context(), from_matrix(g.matrix())));
    return right_multiply(left_multiply(g.inverse(), omega), g.matrix()) + left_multiply(g.inverse(), dg);
}

MixedForm embed_ordinary_as_generalized(const MixedForm& alpha)
{
    require_kind(alpha, ValueKind::Kernel, 1, "embed_ordinary_as_generalized");
    if (!is_normalized(alpha))
        throw std::invalid_argument("embed_ordinary_as_generalized: input is not a connection 1-form");
    return alpha;
}

} // namespace tlacalc
