#include "tlacalc/atiyah.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace tlacalc {

UnipotentGroup::UnipotentGroup(std::size_t n, std::vector<Position> positions)
    : n_(n), positions_(std::move(positions))
{
    if (positions_.empty())
        throw std::invalid_argument("unipotent group needs at least one coordinate position");
    std::set<Position> seen;
    for (const auto& [i, j] : positions_) {
        if (i >= j || j >= n_)
            throw std::invalid_argument("unipotent group positions must be strictly upper triangular");
        if (!seen.insert({i, j}).second)
            throw std::invalid_argument("duplicate unipotent group position");
    }
    for (const auto& [i, j] : positions_)
        for (const auto& [k, l] : positions_)
            if (j == k && !seen.count({i, l}))
                throw std::invalid_argument("unipotent group positions are not closed under products");
    if (n_ + dim() > kMaxVars)
        throw std::invalid_argument("unipotent group too large");
    std::vector<RMatrix> basis;
    for (const auto& [i, j] : positions_)
        basis.push_back(RMatrix::unit(n_, i, j));
    algebra_ = std::make_shared<const LieAlgebra>(LieAlgebra::from_matrix_basis(std::move(basis), "unipotent"));
}

UnipotentGroup UnipotentGroup::heisenberg() { return UnipotentGroup(3, {{0, 1}, {1, 2}, {0, 2}}); }

UnipotentGroup UnipotentGroup::upper_triangular(std::size_t n)
{
    std::vector<Position> pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pos.push_back({i, j});
    return UnipotentGroup(n, std::move(pos));
}

PolyMatrix UnipotentGroup::element(std::size_t offset) const
{
    PolyMatrix g = PolyMatrix::identity(n_);
    for (std::size_t s = 0; s < dim(); ++s)
        g(positions_[s].first, positions_[s].second) = Poly::var(offset + s);
    return g;
}

PolyMatrix UnipotentGroup::inverse(std::size_t offset) const
{
    // (1 + N)^-1 = sum_k (-N)^k, finite since N is nilpotent.
    PolyMatrix minus_n = PolyMatrix::identity(n_) - element(offset);
    PolyMatrix power = PolyMatrix::identity(n_);
    PolyMatrix out = power;
    for (std::size_t k = 1; k < n_; ++k) {
        power = power * minus_n;
        out += power;
    }
    return out;
}

std::vector<Poly> UnipotentGroup::coordinates(const PolyMatrix& g) const
{
    if (g.rows() != n_ || g.cols() != n_)
        throw std::invalid_argument("matrix size differs from the group");
    PolyMatrix rest = g - PolyMatrix::identity(n_);
    std::vector<Poly> out;
    for (const auto& [i, j] : positions_) {
        out.push_back(rest(i, j));
        rest(i, j) = Poly();
    }
    if (!rest.is_zero())
        throw std::domain_error("matrix is not an element of the unipotent group");
    return out;
}

std::vector<Poly> UnipotentGroup::multiply(std::size_t offset_left, std::size_t offset_right) const
{
    return coordinates(element(offset_left) * element(offset_right));
}

PolyMatrix UnipotentGroup::adjoint(std::size_t offset) const
{
    PolyMatrix g = element(offset), gi = inverse(offset);
    PolyMatrix ad(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        auto col = algebra_->coordinates(g * to_poly(algebra_->matrix_basis()[b]) * gi);
        for (std::size_t a = 0; a < dim(); ++a)
            ad(a, b) = col[a];
    }
    return ad;
}

PolyMatrix UnipotentGroup::adjoint_inverse(std::size_t offset) const
{
    PolyMatrix g = element(offset), gi = inverse(offset);
    PolyMatrix ad(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        auto col = algebra_->coordinates(gi * to_poly(algebra_->matrix_basis()[b]) * g);
        for (std::size_t a = 0; a < dim(); ++a)
            ad(a, b) = col[a];
    }
    return ad;
}

std::vector<Poly> apply_adjoint(const PolyMatrix& ad, const std::vector<Poly>& v)
{
    if (ad.cols() != v.size())
        throw std::invalid_argument("adjoint matrix does not match vector size");
    std::vector<Poly> out(ad.rows());
    for (std::size_t a = 0; a < ad.rows(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b)
            if (!v[b].is_zero() && !ad(a, b).is_zero())
                out[a] += ad(a, b) * v[b];
    return out;
}

AtiyahModel::AtiyahModel(std::size_t base_dim, UnipotentGroup group) : base_dim_(base_dim), group_(std::move(group))
{
    if (base_dim_ + 2 * group_.dim() > kMaxVars)
        throw std::invalid_argument("bundle has too many coordinates");
    base_ctx_ = FormContext::kernel(base_dim_, group_.algebra());
    bundle_ctx_ = FormContext::kernel(base_dim_ + group_.dim(), group_.algebra());
    bundle_scalar_ctx_ = bundle_ctx_->scalar_sibling();
}

PolyVectorField AtiyahModel::fundamental_field(std::size_t a) const
{
    PolyMatrix v = group_.element(base_dim_) * to_poly(group_.algebra()->matrix_basis().at(a));
    PolyVectorField x(base_dim_ + group_.dim());
    const auto& pos = group_.positions();
    for (std::size_t s = 0; s < pos.size(); ++s) {
        x[base_dim_ + s] = v(pos[s].first, pos[s].second);
        v(pos[s].first, pos[s].second) = Poly();
    }
    if (!v.is_zero())
        throw std::logic_error("fundamental field leaves the group directions");
    return x;
}

TlaElement AtiyahModel::equ_generator(std::size_t a) const
{
    return make_element(*bundle_ctx_, fundamental_field(a), GammaField::basis(group_.dim(), a));
}

CartanOperation AtiyahModel::equ_operation() const
{
    CartanOperation op;
    for (std::size_t a = 0; a < group_.dim(); ++a)
        op.generators.push_back(equ_generator(a));
    return op;
}

MixedForm AtiyahModel::group_maurer_cartan() const
{
    MixedForm out(bundle_ctx_, 1);
    PolyMatrix gi = group_.inverse(base_dim_);
    const auto& alg = *group_.algebra();
    for (std::size_t s = 0; s < group_.dim(); ++s)
        out.add(dx_mask(base_dim_ + s), alg.coordinates(gi * to_poly(alg.matrix_basis()[s])));
    return out;
}

MixedForm AtiyahModel::maurer_cartan_on_P() const { return group_maurer_cartan() + tautological_form(bundle_ctx_); }

MixedForm AtiyahModel::connection_hat(const GaugePotential& a) const
{
    if (a.components.size() != base_dim_)
        throw std::invalid_argument("connection_hat: potential must live on the base");
    PolyMatrix adinv = group_.adjoint_inverse(base_dim_);
    MixedForm out = group_maurer_cartan() - tautological_form(bundle_ctx_);
    for (std::size_t mu = 0; mu < base_dim_; ++mu)
        out.add(dx_mask(mu), apply_adjoint(adinv, a.components[mu].components()));
    return out;
}

MixedForm AtiyahModel::lambda_restrict(const MixedForm& w) const
{
    if (!(w.ctx() == *bundle_ctx_))
        throw std::invalid_argument("lambda_restrict: form does not live on the bundle");
    if (!is_basic(w, equ_operation()))
        throw std::invalid_argument("lambda_restrict: form is not basic for the equivariant operation");
    std::size_t k = group_.dim();
    MixedForm::Mask theta_legs = ((MixedForm::Mask(1) << k) - 1) << (base_dim_ + k);
    MixedForm::Mask y_legs = ((MixedForm::Mask(1) << k) - 1) << base_dim_;
    MixedForm out(base_ctx_, w.degree());
    for (const auto& [mask, v] : w.components()) {
        if (mask & theta_legs)
            continue;
        // dy^s occupies the same bit as theta^s on the base, and x legs stay in front.
        Rational sign = std::popcount(mask & y_legs) % 2 ? -1 : 1;
        Value r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            r[i] = v[i].restrict_to_zero(base_dim_, base_dim_ + k) * sign;
        out.add(mask, r);
    }
    return out;
}

MixedForm AtiyahModel::reconstruct(const MixedForm& w) const
{
    if (!(w.ctx() == *base_ctx_))
        throw std::invalid_argument("reconstruct: form does not live on the base");
    std::size_t k = group_.dim();
    const auto& alg = *group_.algebra();
    PolyMatrix ad = group_.adjoint(base_dim_);
    PolyMatrix adinv = group_.adjoint_inverse(base_dim_);
    PolyMatrix gi = group_.inverse(base_dim_);

    // sigma = Ad_g theta - dg g^-1, the scalar components of a horizontal lift of theta.
    std::vector<MixedForm> sigma(k, MixedForm(bundle_scalar_ctx_, 1));
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t a = 0; a < k; ++a)
            sigma[a].add(theta_mask(*bundle_scalar_ctx_, b), {ad(a, b)});
    for (std::size_t s = 0; s < k; ++s) {
        auto c = alg.coordinates(to_poly(alg.matrix_basis()[s]) * gi);
        for (std::size_t a = 0; a < k; ++a)
            sigma[a].add(dx_mask(base_dim_ + s), {-c[a]});
    }

    MixedForm out(bundle_ctx_, w.degree());
    for (const auto& [mask, v] : w.components()) {
        MixedForm lift = MixedForm::function(bundle_scalar_ctx_, {Poly(1L)});
        for (MixedForm::Mask rest = mask; rest; rest &= rest - 1) {
            std::size_t leg = static_cast<std::size_t>(std::countr_zero(rest));
            if (leg < base_dim_)
                lift = wedge(lift, MixedForm::dx(bundle_scalar_ctx_, leg, {Poly(1L)}));
            else
                lift = wedge(lift, sigma[leg - base_dim_]);
        }
        Value value = apply_adjoint(adinv, v);
        for (const auto& [lmask, lv] : lift.components()) {
            Value term(value.size());
            for (std::size_t i = 0; i < value.size(); ++i)
                if (!value[i].is_zero())
                    term[i] = lv[0] * value[i];
            out.add(lmask, term);
        }
    }
    return out;
}

std::pair<MixedForm, MixedForm> AtiyahModel::generalized_split(const MixedForm& w) const
{
    if (w.degree() != 1)
        throw std::invalid_argument("generalized_split: expected a 1-form");
    if (!(w.ctx() == *bundle_ctx_) || !is_basic(w, equ_operation()))
        throw std::invalid_argument("generalized_split: expected a basic form on the bundle");
    return {w.bidegree_part(1, 0), w.bidegree_part(0, 1)};
}

} // namespace tlacalc
