#include "tlacalc/atlas.hpp"

#include "tlacalc/forms.hpp"

#include <deque>
#include <stdexcept>

namespace tlacalc {

namespace {

std::string describe(const std::vector<Poly>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + v[i].to_string();
    return out + "]";
}

GammaField algebra_coordinates(const LieAlgebra& alg, const PolyMatrix& m) { return GammaField(alg.coordinates(m)); }

} // namespace

TransitionData::TransitionData(std::size_t base_dim, LieAlgebraPtr algebra, std::vector<std::string> charts)
    : base_dim_(base_dim), algebra_(std::move(algebra)), charts_(std::move(charts))
{
    for (std::size_t i = 0; i < charts_.size(); ++i)
        for (std::size_t j = i + 1; j < charts_.size(); ++j)
            if (charts_[i] == charts_[j])
                throw std::invalid_argument("duplicate chart id '" + charts_[i] + "'");
}

std::size_t TransitionData::chart_index(const std::string& id) const
{
    for (std::size_t i = 0; i < charts_.size(); ++i)
        if (charts_[i] == id)
            return i;
    throw std::invalid_argument("unknown chart '" + id + "'");
}

void TransitionData::set(std::size_t i, std::size_t j, Pair data)
{
    std::size_t m = algebra_->dim();
    if (i >= charts_.size() || j >= charts_.size())
        throw std::out_of_range("chart index out of range");
    if (data.alpha.rows() != m || data.alpha.cols() != m || data.chi.size() != base_dim_)
        throw std::invalid_argument("transition data has the wrong shape");
    for (const auto& c : data.chi)
        if (c.dim() != m)
            throw std::invalid_argument("chi value has the wrong algebra dimension");
    pairs_[{i, j}] = std::move(data);
}

const TransitionData::Pair& TransitionData::get(std::size_t i, std::size_t j) const
{
    auto it = pairs_.find({i, j});
    if (it == pairs_.end())
        throw std::out_of_range("no transition data for chart pair (" + charts_.at(i) + ", " + charts_.at(j) + ")");
    return it->second;
}

TransitionData::Pair& TransitionData::get(std::size_t i, std::size_t j)
{
    return const_cast<Pair&>(static_cast<const TransitionData&>(*this).get(i, j));
}

GammaField TransitionData::apply_alpha(std::size_t i, std::size_t j, const GammaField& g) const
{
    const PolyMatrix& a = get(i, j).alpha;
    GammaField out(algebra_->dim());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero() && !g[c].is_zero())
                out[r] += a(r, c) * g[c];
    return out;
}

GammaField TransitionData::apply_chi(std::size_t i, std::size_t j, const PolyVectorField& x) const
{
    if (x.dim() != base_dim_)
        throw std::invalid_argument("vector field dimension differs from the base");
    const auto& chi = get(i, j).chi;
    GammaField out(algebra_->dim());
    for (std::size_t mu = 0; mu < base_dim_; ++mu)
        if (!x[mu].is_zero())
            out += x[mu] * chi[mu];
    return out;
}

BundleTransitions complete_bundle_transitions(const BundleTransitions& family)
{
    std::size_t n = family.charts.size();
    if (n == 0)
        throw std::invalid_argument("atlas needs at least one chart");
    std::size_t size = family.g.empty() ? 0 : family.g.begin()->second.size();
    for (const auto& [key, g] : family.g) {
        if (key.first >= n || key.second >= n)
            throw std::invalid_argument("transition function refers to an unknown chart");
        if (g.size() != size)
            throw std::invalid_argument("transition functions have different sizes");
    }
    if (size == 0)
        throw std::invalid_argument("atlas needs at least one transition function to fix the matrix size");

    BundleTransitions out = family;
    auto& g = out.g;
    for (std::size_t i = 0; i < n; ++i)
        g.try_emplace({i, i}, GroupElementField::identity(size));
    for (const auto& [key, v] : family.g)
        g.try_emplace({key.second, key.first}, GroupElementField(v.inverse(), v.matrix()));
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (g.count({i, k}))
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (g.count({i, j}) && g.count({j, k})) {
                        g.emplace(std::make_pair(i, k), g.at({i, j}) * g.at({j, k}));
                        grew = true;
                        break;
                    }
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!g.count({i, j}))
                throw std::invalid_argument("charts " + family.charts[i] + " and " + family.charts[j] +
                                            " are not connected by transition functions");
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!((g.at({i, j}) * g.at({j, k})).matrix() == g.at({i, k}).matrix()))
                    throw std::invalid_argument("transition functions are not multiplicative on charts (" +
                                                family.charts[i] + ", " + family.charts[j] + ", " +
                                                family.charts[k] + ")");
    return out;
}

std::vector<GammaField> chi_via_action(std::size_t base_dim, const LieAlgebra& alg, const GroupElementField& g)
{
    std::vector<GammaField> out;
    for (std::size_t mu = 0; mu < base_dim; ++mu) {
        PolyVectorField d = PolyVectorField::coordinate(base_dim, mu);
        out.push_back(algebra_coordinates(alg, g.matrix() * d.apply(g.inverse())));
    }
    return out;
}

std::vector<GammaField> chi_via_differential(std::size_t base_dim, const LieAlgebra& alg, const GroupElementField& g)
{
    // Plain exterior derivative: matrix-valued forms with no kernel action.
    auto point = std::make_shared<const LieAlgebra>(make_abelian(1));
    ContextPtr ctx = FormContext::endo(base_dim, point, trivial_representation(*point, g.size()));
    MixedForm dginv = differential(MixedForm::function(ctx, from_matrix(g.inverse())));
    std::vector<GammaField> out;
    for (std::size_t mu = 0; mu < base_dim; ++mu) {
        PolyMatrix value = to_matrix(*ctx, evaluate(dginv, {coordinate_element(*ctx, mu)}));
        out.push_back(algebra_coordinates(alg, g.matrix() * value));
    }
    return out;
}

TransitionData transitions_from_bundle(std::size_t base_dim, LieAlgebraPtr algebra, const BundleTransitions& family)
{
    if (!algebra->has_matrix_basis())
        throw std::invalid_argument("transitions_from_bundle needs an algebra with a matrix basis");
    BundleTransitions full = complete_bundle_transitions(family);
    if (full.g.begin()->second.size() != algebra->matrix_size())
        throw std::invalid_argument("transition functions and algebra matrices differ in size");
    TransitionData t(base_dim, algebra, full.charts);
    std::size_t m = algebra->dim();
    for (const auto& [key, g] : full.g) {
        TransitionData::Pair p;
        p.alpha = PolyMatrix(m, m);
        for (std::size_t b = 0; b < m; ++b) {
            auto col = algebra->coordinates(g.matrix() * to_poly(algebra->matrix_basis()[b]) * g.inverse());
            for (std::size_t a = 0; a < m; ++a)
                p.alpha(a, b) = col[a];
        }
        p.chi = chi_via_action(base_dim, *algebra, g);
        t.set(key.first, key.second, std::move(p));
    }
    return t;
}

CocycleReport validate_cocycle(const TransitionData& t)
{
    std::size_t n = t.num_charts();
    std::size_t m = t.algebra().dim();
    CocycleReport rep;
    auto fail = [&](std::array<std::size_t, 3> triple, std::string relation, std::string detail) {
        rep.ok = false;
        rep.triple = triple;
        rep.relation = std::move(relation);
        rep.detail = std::move(detail);
        return rep;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!t.has(i, j))
                return fail({i, j, j}, "missing", "no data for pair (" + t.charts()[i] + ", " + t.charts()[j] + ")");

    PolyMatrix id = PolyMatrix::identity(m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = t.get(i, i);
        if (!(p.alpha == id))
            return fail({i, i, i}, "alpha_identity", "alpha_ii differs from the identity");
        for (std::size_t mu = 0; mu < t.base_dim(); ++mu)
            if (!p.chi[mu].is_zero())
                return fail({i, i, i}, "chi_identity", "chi_ii(d/dx" + std::to_string(mu + 1) + ") = " +
                                                           describe(p.chi[mu].components()));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto& ij = t.get(i, j);
                const auto& ik = t.get(i, k);
                if (!(ij.alpha * t.get(j, k).alpha == ik.alpha))
                    return fail({i, j, k}, "alpha", "alpha_ik differs from alpha_ij alpha_jk");
                for (std::size_t mu = 0; mu < t.base_dim(); ++mu) {
                    GammaField rhs = t.apply_alpha(i, j, t.get(j, k).chi[mu]) + ij.chi[mu];
                    GammaField defect = ik.chi[mu] - rhs;
                    if (!defect.is_zero())
                        return fail({i, j, k}, "chi",
                                    "chi_ik - alpha_ij chi_jk - chi_ij on d/dx" + std::to_string(mu + 1) + " = " +
                                        describe(defect.components()));
                }
            }
    return rep;
}

bool alpha_is_automorphism(const TransitionData& t, std::size_t i, std::size_t j)
{
    const LieAlgebra& alg = t.algebra();
    std::size_t m = alg.dim();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            GammaField ea = GammaField::basis(m, a), eb = GammaField::basis(m, b);
            GammaField lhs = t.apply_alpha(i, j, bracket_gamma(alg, ea, eb));
            GammaField rhs = bracket_gamma(alg, t.apply_alpha(i, j, ea), t.apply_alpha(i, j, eb));
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

GammaField gluing_defect(const TransitionData& t, const LocalElementFamily& f, std::size_t i, std::size_t j)
{
    return f.gamma[i] - t.apply_alpha(i, j, f.gamma[j]) - t.apply_chi(i, j, f.x);
}

LocalElementFamily glue(const TransitionData& t, const PolyVectorField& x, const std::map<std::size_t, GammaField>& partial)
{
    std::size_t n = t.num_charts();
    if (partial.empty())
        throw std::invalid_argument("glue needs local data on at least one chart");
    std::vector<std::optional<GammaField>> gamma(n);
    std::deque<std::size_t> queue;
    for (const auto& [i, g] : partial) {
        if (i >= n)
            throw std::out_of_range("glue: chart index out of range");
        if (g.dim() != t.algebra().dim())
            throw std::invalid_argument("glue: local data has the wrong algebra dimension");
        gamma[i] = g;
        queue.push_back(i);
    }
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            if (gamma[i] || !t.has(i, j))
                continue;
            gamma[i] = t.apply_alpha(i, j, *gamma[j]) + t.apply_chi(i, j, x);
            queue.push_back(i);
        }
    }
    LocalElementFamily f{x, {}};
    for (std::size_t i = 0; i < n; ++i) {
        if (!gamma[i])
            throw std::domain_error("glue: chart " + t.charts()[i] + " is not reachable from the given data");
        f.gamma.push_back(*gamma[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!t.has(i, j))
                continue;
            GammaField d = gluing_defect(t, f, i, j);
            if (!d.is_zero())
                throw std::domain_error("glue: inconsistent data on charts (" + t.charts()[i] + ", " + t.charts()[j] +
                                        "), defect " + describe(d.components()));
        }
    return f;
}

} // namespace tlacalc
