#include "tlacalc/forms.hpp"

#include <bit>
#include <stdexcept>

namespace tlacalc {

const char* to_string(ValueKind kind)
{
    switch (kind) {
    case ValueKind::Scalar:
        return "scalar";
    case ValueKind::Kernel:
        return "kernel";
    case ValueKind::Endo:
        return "endo";
    }
    return "?";
}

namespace {

constexpr std::size_t kMaxGenerators = 32;

std::shared_ptr<const FormContext> checked(std::shared_ptr<FormContext> ctx)
{
    if (ctx->num_generators() > kMaxGenerators)
        throw std::invalid_argument("too many form generators (base + algebra dimension exceeds 32)");
    return ctx;
}

bool is_zero_value(const Value& v)
{
    for (const auto& p : v)
        if (!p.is_zero())
            return false;
    return true;
}

Value scale_value(const Value& v, const Poly& f)
{
    Value out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out[i] = f * v[i];
    return out;
}

Value scale_value(const Value& v, const Rational& c)
{
    Value out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] * c;
    return out;
}

void add_into(Value& acc, const Value& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        acc[i] += v[i];
}

Value endo_product(std::size_t n, const Value& a, const Value& b)
{
    Value out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Poly& aik = a[i * n + k];
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k * n + j].is_zero())
                    out[i * n + j] += aik * b[k * n + j];
        }
    return out;
}

std::vector<std::size_t> legs(MixedForm::Mask mask)
{
    std::vector<std::size_t> out;
    while (mask) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

// Context of a product of values; Scalar is the unit kind.
ContextPtr product_context(const MixedForm& a, const MixedForm& b)
{
    if (!a.ctx().same_algebroid(b.ctx()))
        throw std::invalid_argument("forms live on different algebroids");
    ValueKind ka = a.ctx().kind(), kb = b.ctx().kind();
    if (ka == ValueKind::Scalar)
        return b.context();
    if (kb == ValueKind::Scalar)
        return a.context();
    if (ka == ValueKind::Endo && kb == ValueKind::Endo) {
        if (a.ctx().endo_size() != b.ctx().endo_size())
            throw std::invalid_argument("endomorphism sizes differ");
        return a.context();
    }
    throw std::invalid_argument("wedge of kernel-valued forms is not defined; use graded_bracket");
}

Value value_product(const FormContext& ca, const Value& a, const FormContext& cb, const Value& b)
{
    if (ca.kind() == ValueKind::Scalar)
        return scale_value(b, a[0]);
    if (cb.kind() == ValueKind::Scalar)
        return scale_value(a, b[0]);
    return endo_product(ca.endo_size(), a, b);
}

} // namespace

std::size_t FormContext::value_dim() const noexcept
{
    switch (kind_) {
    case ValueKind::Scalar:
        return 1;
    case ValueKind::Kernel:
        return algebra_->dim();
    case ValueKind::Endo:
        return rep_.n * rep_.n;
    }
    return 0;
}

std::shared_ptr<const FormContext> FormContext::scalar(std::size_t base_dim, LieAlgebraPtr algebra)
{
    std::shared_ptr<FormContext> ctx(new FormContext());
    ctx->base_dim_ = base_dim;
    ctx->algebra_ = std::move(algebra);
    ctx->kind_ = ValueKind::Scalar;
    ctx->build_action();
    return checked(ctx);
}

std::shared_ptr<const FormContext> FormContext::kernel(std::size_t base_dim, LieAlgebraPtr algebra)
{
    std::shared_ptr<FormContext> ctx(new FormContext());
    ctx->base_dim_ = base_dim;
    ctx->algebra_ = std::move(algebra);
    ctx->kind_ = ValueKind::Kernel;
    ctx->build_action();
    return checked(ctx);
}

std::shared_ptr<const FormContext> FormContext::endo(std::size_t base_dim, LieAlgebraPtr algebra, Representation rep)
{
    if (!validate_representation(*algebra, rep))
        throw std::invalid_argument("representation does not respect the bracket");
    std::shared_ptr<FormContext> ctx(new FormContext());
    ctx->base_dim_ = base_dim;
    ctx->algebra_ = std::move(algebra);
    ctx->kind_ = ValueKind::Endo;
    ctx->rep_ = std::move(rep);
    ctx->build_action();
    return checked(ctx);
}

std::shared_ptr<const FormContext> FormContext::scalar_sibling() const { return scalar(base_dim_, algebra_); }

void FormContext::build_action()
{
    std::size_t m = algebra_->dim();
    action_.assign(m, {});
    if (kind_ == ValueKind::Kernel) {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    if (algebra_->c(a, j, k) != 0)
                        action_[a].push_back({k, j, algebra_->c(a, j, k)});
    }
    else if (kind_ == ValueKind::Endo) {
        std::size_t n = rep_.n;
        for (std::size_t a = 0; a < m; ++a) {
            const RMatrix& r = rep_.matrices[a];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t j = 0; j < n; ++j) {
                        if (r(i, j) != 0)
                            action_[a].push_back({i * n + k, j * n + k, r(i, j)});
                        if (r(j, k) != 0)
                            action_[a].push_back({i * n + k, i * n + j, -r(j, k)});
                    }
        }
    }
}

Value FormContext::act(std::size_t a, const Value& v) const
{
    Value out(value_dim());
    for (const auto& e : action_.at(a))
        if (!v[e.col].is_zero())
            out[e.row] += v[e.col] * e.coeff;
    return out;
}

Value FormContext::bracket(const Value& u, const Value& v) const
{
    if (kind_ == ValueKind::Kernel)
        return from_gamma(bracket_gamma(*algebra_, to_gamma(u), to_gamma(v)));
    if (kind_ == ValueKind::Endo) {
        Value out = endo_product(rep_.n, u, v);
        Value back = endo_product(rep_.n, v, u);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] -= back[i];
        return out;
    }
    throw std::invalid_argument("scalar values have no bracket");
}

bool FormContext::same_algebroid(const FormContext& o) const
{
    if (this == &o || algebra_ == o.algebra_)
        return base_dim_ == o.base_dim_;
    return base_dim_ == o.base_dim_ && algebra_->dim() == o.algebra_->dim() &&
           algebra_->structure_constants() == o.algebra_->structure_constants();
}

bool operator==(const FormContext& a, const FormContext& b)
{
    if (&a == &b)
        return true;
    if (!a.same_algebroid(b) || a.kind_ != b.kind_)
        return false;
    return a.rep_.n == b.rep_.n && a.rep_.matrices == b.rep_.matrices;
}

// ---- algebroid elements ----

TlaElement make_element(const FormContext& ctx, PolyVectorField x, GammaField gamma)
{
    if (x.dim() != ctx.base_dim() || gamma.dim() != ctx.algebra_dim())
        throw std::invalid_argument("element shape does not match the algebroid");
    return {std::move(x), std::move(gamma)};
}

TlaElement kernel_element(const FormContext& ctx, GammaField gamma)
{
    return make_element(ctx, PolyVectorField(ctx.base_dim()), std::move(gamma));
}

TlaElement coordinate_element(const FormContext& ctx, std::size_t mu)
{
    return make_element(ctx, PolyVectorField::coordinate(ctx.base_dim(), mu), GammaField(ctx.algebra_dim()));
}

TlaElement scale(const Poly& f, const TlaElement& e) { return {f * e.x, f * e.gamma}; }

TlaElement operator+(const TlaElement& a, const TlaElement& b) { return {a.x + b.x, a.gamma + b.gamma}; }

TlaElement tla_bracket(const LieAlgebra& alg, const TlaElement& a, const TlaElement& b)
{
    return {bracket(a.x, b.x), apply(a.x, b.gamma) - apply(b.x, a.gamma) + bracket_gamma(alg, a.gamma, b.gamma)};
}

// ---- MixedForm ----

MixedForm::MixedForm(ContextPtr ctx, int degree) : ctx_(std::move(ctx)), degree_(degree)
{
    if (!ctx_)
        throw std::invalid_argument("form requires a context");
    if (degree < 0)
        throw std::invalid_argument("negative form degree");
}

MixedForm MixedForm::function(ContextPtr ctx, Value v) { return basis(std::move(ctx), 0, std::move(v)); }

MixedForm MixedForm::dx(ContextPtr ctx, std::size_t mu, Value v)
{
    if (mu >= ctx->base_dim())
        throw std::out_of_range("dx index out of range");
    return basis(std::move(ctx), dx_mask(mu), std::move(v));
}

MixedForm MixedForm::theta(ContextPtr ctx, std::size_t a, Value v)
{
    if (a >= ctx->algebra_dim())
        throw std::out_of_range("theta index out of range");
    Mask mask = theta_mask(*ctx, a);
    return basis(std::move(ctx), mask, std::move(v));
}

MixedForm MixedForm::basis(ContextPtr ctx, Mask mask, Value v)
{
    MixedForm w(std::move(ctx), std::popcount(mask));
    w.add(mask, v);
    return w;
}

void MixedForm::add(Mask mask, const Value& v)
{
    if (std::popcount(mask) != degree_)
        throw std::invalid_argument("component degree does not match form degree");
    if (ctx_->num_generators() < 32 && (mask >> ctx_->num_generators()) != 0)
        throw std::out_of_range("component uses a generator outside the algebroid");
    if (v.size() != ctx_->value_dim())
        throw std::invalid_argument("value has the wrong number of entries");
    if (is_zero_value(v))
        return;
    auto it = components_.find(mask);
    if (it == components_.end()) {
        components_.emplace(mask, v);
        return;
    }
    add_into(it->second, v);
    if (is_zero_value(it->second))
        components_.erase(it);
}

Value MixedForm::component(Mask mask) const
{
    auto it = components_.find(mask);
    return it == components_.end() ? ctx_->zero_value() : it->second;
}

std::pair<int, int> MixedForm::bidegree(Mask mask) const
{
    Mask base = ctx_->base_dim() >= 32 ? ~Mask(0) : ((Mask(1) << ctx_->base_dim()) - 1);
    int p = std::popcount(mask & base);
    return {p, std::popcount(mask) - p};
}

MixedForm MixedForm::bidegree_part(int p, int q) const
{
    MixedForm out(ctx_, degree_);
    if (p + q != degree_)
        return out;
    for (const auto& [mask, v] : components_)
        if (bidegree(mask) == std::make_pair(p, q))
            out.components_.emplace(mask, v);
    return out;
}

MixedForm MixedForm::with_context(ContextPtr ctx) const
{
    if (ctx->num_generators() != ctx_->num_generators() || ctx->value_dim() != ctx_->value_dim())
        throw std::invalid_argument("target context has a different shape");
    MixedForm out(std::move(ctx), degree_);
    out.components_ = components_;
    return out;
}

void MixedForm::check_compatible(const MixedForm& o) const
{
    if (degree_ != o.degree_)
        throw std::invalid_argument("adding forms of different degree");
    if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_))
        throw std::invalid_argument("adding forms with different contexts");
}

MixedForm& MixedForm::operator+=(const MixedForm& o)
{
    check_compatible(o);
    for (const auto& [mask, v] : o.components_)
        add(mask, v);
    return *this;
}

MixedForm& MixedForm::operator-=(const MixedForm& o)
{
    check_compatible(o);
    for (const auto& [mask, v] : o.components_)
        add(mask, scale_value(v, Rational(-1)));
    return *this;
}

MixedForm MixedForm::operator-() const
{
    MixedForm out(ctx_, degree_);
    for (const auto& [mask, v] : components_)
        out.components_.emplace(mask, scale_value(v, Rational(-1)));
    return out;
}

MixedForm operator*(const Poly& f, const MixedForm& w)
{
    MixedForm out(w.ctx_, w.degree_);
    for (const auto& [mask, v] : w.components_)
        out.add(mask, scale_value(v, f));
    return out;
}

MixedForm operator*(const Rational& c, const MixedForm& w) { return Poly(c) * w; }

bool operator==(const MixedForm& a, const MixedForm& b)
{
    if (a.degree_ != b.degree_)
        return false;
    if (a.ctx_ != b.ctx_ && !(*a.ctx_ == *b.ctx_))
        return false;
    return a.components_ == b.components_;
}

// ---- algebra of forms ----

std::pair<int, MixedForm::Mask> wedge_masks(MixedForm::Mask a, MixedForm::Mask b)
{
    if (a & b)
        return {0, 0};
    // Each leg of b passes over the legs of a that sit above it.
    int swaps = 0;
    for (MixedForm::Mask rest = b; rest; rest &= rest - 1) {
        int l = std::countr_zero(rest);
        MixedForm::Mask above = l >= 31 ? 0 : (a >> (l + 1));
        swaps += std::popcount(above);
    }
    return {swaps % 2 ? -1 : 1, a | b};
}

std::vector<Poly> frame_coordinates(const FormContext& ctx, const TlaElement& e)
{
    if (e.x.dim() != ctx.base_dim() || e.gamma.dim() != ctx.algebra_dim())
        throw std::invalid_argument("element shape does not match the algebroid");
    std::vector<Poly> out = e.x.components();
    out.insert(out.end(), e.gamma.components().begin(), e.gamma.components().end());
    return out;
}

Value evaluate(const MixedForm& w, const std::vector<TlaElement>& args)
{
    const FormContext& ctx = w.ctx();
    if (args.size() != static_cast<std::size_t>(w.degree()))
        throw std::invalid_argument("number of arguments differs from the form degree");
    std::vector<std::vector<Poly>> coords;
    coords.reserve(args.size());
    for (const auto& a : args)
        coords.push_back(frame_coordinates(ctx, a));
    Value out = ctx.zero_value();
    std::size_t r = args.size();
    for (const auto& [mask, v] : w.components()) {
        auto ks = legs(mask);
        PolyMatrix pairing(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                pairing(i, j) = coords[j][ks[i]];
        Poly det = determinant(pairing);
        if (!det.is_zero())
            add_into(out, scale_value(v, det));
    }
    return out;
}

MixedForm wedge(const MixedForm& a, const MixedForm& b)
{
    ContextPtr target = product_context(a, b);
    MixedForm out(target, a.degree() + b.degree());
    for (const auto& [ma, va] : a.components())
        for (const auto& [mb, vb] : b.components()) {
            auto [sign, mask] = wedge_masks(ma, mb);
            if (sign == 0)
                continue;
            Value v = value_product(a.ctx(), va, b.ctx(), vb);
            out.add(mask, sign > 0 ? v : scale_value(v, Rational(-1)));
        }
    return out;
}

MixedForm graded_bracket(const MixedForm& a, const MixedForm& b)
{
    if (!(a.ctx() == b.ctx()))
        throw std::invalid_argument("graded_bracket needs forms with the same values");
    const FormContext& ctx = a.ctx();
    if (ctx.kind() == ValueKind::Endo) {
        MixedForm out = wedge(a, b);
        MixedForm ba = wedge(b, a);
        if ((a.degree() * b.degree()) % 2)
            out += ba;
        else
            out -= ba;
        return out;
    }
    if (ctx.kind() != ValueKind::Kernel)
        throw std::invalid_argument("scalar forms have no bracket");
    MixedForm out(a.context(), a.degree() + b.degree());
    for (const auto& [ma, va] : a.components())
        for (const auto& [mb, vb] : b.components()) {
            auto [sign, mask] = wedge_masks(ma, mb);
            if (sign == 0)
                continue;
            Value v = ctx.bracket(va, vb);
            out.add(mask, sign > 0 ? v : scale_value(v, Rational(-1)));
        }
    return out;
}

MixedForm differential(const MixedForm& w)
{
    const FormContext& ctx = w.ctx();
    std::size_t d = ctx.base_dim();
    std::size_t m = ctx.algebra_dim();
    const LieAlgebra& alg = ctx.algebra();
    MixedForm out(w.context(), w.degree() + 1);
    int r = w.degree();

    for (const auto& [mask, v] : w.components()) {
        // de Rham part: dx^mu ^ e^K (x) d_mu v
        for (std::size_t mu = 0; mu < d; ++mu) {
            auto [sign, next] = wedge_masks(dx_mask(mu), mask);
            if (sign == 0)
                continue;
            Value dv(v.size());
            bool any = false;
            for (std::size_t i = 0; i < v.size(); ++i) {
                dv[i] = v[i].derivative(mu);
                any = any || !dv[i].is_zero();
            }
            if (any)
                out.add(next, sign > 0 ? dv : scale_value(dv, Rational(-1)));
        }
        // d theta^c = -sum_{a<b} c_ab^c theta^a ^ theta^b on each theta leg
        auto ks = legs(mask);
        for (std::size_t t = 0; t < ks.size(); ++t) {
            if (ks[t] < d)
                continue;
            std::size_t c = ks[t] - d;
            MixedForm::Mask rest = mask & ~(MixedForm::Mask(1) << ks[t]);
            MixedForm::Mask below = rest & ((MixedForm::Mask(1) << ks[t]) - 1);
            MixedForm::Mask above = rest & ~below;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b) {
                    const Rational& coeff = alg.c(a, b, c);
                    if (coeff == 0)
                        continue;
                    MixedForm::Mask pair = theta_mask(ctx, a) | theta_mask(ctx, b);
                    auto [s1, m1] = wedge_masks(below, pair);
                    if (s1 == 0)
                        continue;
                    auto [s2, m2] = wedge_masks(m1, above);
                    if (s2 == 0)
                        continue;
                    // Leibniz sign (-1)^t for passing d over the first t legs.
                    int sign = s1 * s2 * ((t % 2) ? -1 : 1);
                    out.add(m2, scale_value(v, Rational(-sign) * coeff));
                }
        }
        // (-1)^r e^K ^ theta^a (x) e_a . v
        if (ctx.kind() != ValueKind::Scalar)
            for (std::size_t a = 0; a < m; ++a) {
                auto [sign, next] = wedge_masks(mask, theta_mask(ctx, a));
                if (sign == 0)
                    continue;
                Value av = ctx.act(a, v);
                if (is_zero_value(av))
                    continue;
                int s = sign * ((r % 2) ? -1 : 1);
                out.add(next, s > 0 ? av : scale_value(av, Rational(-1)));
            }
    }
    return out;
}

Value act_on_value(const FormContext& ctx, const TlaElement& x, const Value& v)
{
    Value out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = x.x.apply(v[i]);
    if (ctx.kind() != ValueKind::Scalar)
        for (std::size_t a = 0; a < ctx.algebra_dim(); ++a)
            if (!x.gamma[a].is_zero())
                add_into(out, scale_value(ctx.act(a, v), x.gamma[a]));
    return out;
}

Value differential_via_koszul(const MixedForm& w, const std::vector<TlaElement>& args)
{
    const FormContext& ctx = w.ctx();
    std::size_t r = args.size();
    if (r != static_cast<std::size_t>(w.degree()) + 1)
        throw std::invalid_argument("differential needs degree + 1 arguments");
    Value out = ctx.zero_value();
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<TlaElement> rest;
        for (std::size_t k = 0; k < r; ++k)
            if (k != i)
                rest.push_back(args[k]);
        Value term = act_on_value(ctx, args[i], evaluate(w, rest));
        add_into(out, i % 2 ? scale_value(term, Rational(-1)) : term);
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            std::vector<TlaElement> rest{tla_bracket(ctx.algebra(), args[i], args[j])};
            for (std::size_t k = 0; k < r; ++k)
                if (k != i && k != j)
                    rest.push_back(args[k]);
            Value term = evaluate(w, rest);
            add_into(out, (i + j) % 2 ? scale_value(term, Rational(-1)) : term);
        }
    return out;
}

MixedForm interior(const TlaElement& x, const MixedForm& w)
{
    if (w.degree() == 0)
        return MixedForm(w.context(), 0);
    auto coords = frame_coordinates(w.ctx(), x);
    MixedForm out(w.context(), w.degree() - 1);
    for (const auto& [mask, v] : w.components()) {
        auto ks = legs(mask);
        for (std::size_t t = 0; t < ks.size(); ++t) {
            const Poly& f = coords[ks[t]];
            if (f.is_zero())
                continue;
            Value fv = scale_value(v, t % 2 ? -f : f);
            out.add(mask & ~(MixedForm::Mask(1) << ks[t]), fv);
        }
    }
    return out;
}

MixedForm lie_derivative(const TlaElement& x, const MixedForm& w)
{
    MixedForm out = interior(x, differential(w));
    if (w.degree() > 0)
        out += differential(interior(x, w));
    return out;
}

CartanDefects cartan_defects(const TlaElement& x, const TlaElement& y, const Poly& f, const MixedForm& w)
{
    const LieAlgebra& alg = w.ctx().algebra();
    TlaElement xy = tla_bracket(alg, x, y);
    MixedForm lx_w = lie_derivative(x, w);
    MixedForm ly_w = lie_derivative(y, w);
    return {
        interior(scale(f, x), w) - f * interior(x, w),
        interior(x, interior(y, w)) + interior(y, interior(x, w)),
        lie_derivative(x, interior(y, w)) - interior(y, lx_w) - interior(xy, w),
        lie_derivative(x, ly_w) - lie_derivative(y, lx_w) - lie_derivative(xy, w),
    };
}

CartanOperation kernel_operation(const FormContext& ctx)
{
    CartanOperation op;
    for (std::size_t a = 0; a < ctx.algebra_dim(); ++a)
        op.generators.push_back(kernel_element(ctx, GammaField::basis(ctx.algebra_dim(), a)));
    return op;
}

bool is_horizontal(const MixedForm& w, const CartanOperation& op)
{
    for (const auto& x : op.generators)
        if (!interior(x, w).is_zero())
            return false;
    return true;
}

bool is_invariant(const MixedForm& w, const CartanOperation& op)
{
    for (const auto& x : op.generators)
        if (!lie_derivative(x, w).is_zero())
            return false;
    return true;
}

bool is_basic(const MixedForm& w, const CartanOperation& op) { return is_horizontal(w, op) && is_invariant(w, op); }

MixedForm tautological_form(ContextPtr ctx)
{
    MixedForm out(ctx, 1);
    std::size_t m = ctx->algebra_dim();
    for (std::size_t a = 0; a < m; ++a) {
        if (ctx->kind() == ValueKind::Kernel)
            out.add(theta_mask(*ctx, a), from_gamma(GammaField::basis(m, a)));
        else if (ctx->kind() == ValueKind::Endo)
            out.add(theta_mask(*ctx, a), from_matrix(to_poly(ctx->representation().matrices[a])));
        else
            throw std::invalid_argument("scalar context has no tautological form");
    }
    return out;
}

GammaField to_gamma(const Value& v) { return GammaField(v); }

Value from_gamma(const GammaField& g) { return g.components(); }

PolyMatrix to_matrix(const FormContext& ctx, const Value& v)
{
    std::size_t n = ctx.endo_size();
    if (ctx.kind() != ValueKind::Endo || v.size() != n * n)
        throw std::invalid_argument("value is not an endomorphism");
    PolyMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = v[i * n + j];
    return out;
}

Value from_matrix(const PolyMatrix& m) { return m.data(); }

MixedForm left_multiply(const PolyMatrix& g, const MixedForm& w)
{
    return map_values(w, w.context(), [&](const Value& v) { return from_matrix(g * to_matrix(w.ctx(), v)); });
}

MixedForm right_multiply(const MixedForm& w, const PolyMatrix& g)
{
    return map_values(w, w.context(), [&](const Value& v) { return from_matrix(to_matrix(w.ctx(), v) * g); });
}

} // namespace tlacalc
