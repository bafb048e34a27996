#include "tlacalc/io.hpp"

#include <bit>

namespace tlacalc {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t limit, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 1 || static_cast<std::size_t>(j.get<long long>()) > limit)
        throw ParseError(std::string(what) + " index out of range (expected 1.." + std::to_string(limit) + ")");
    return static_cast<std::size_t>(j.get<long long>()) - 1;
}

std::size_t count_from_json(const Json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(std::string(what) + " must be a non-negative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

Json matrix_to_json(const PolyMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(poly_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix matrix_from_json(const Json& j, const char* what)
{
    if (!j.is_array() || j.empty())
        throw ParseError(std::string(what) + " must be a non-empty list of rows");
    std::size_t n = j.size();
    PolyMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n)
            throw ParseError(std::string(what) + " must be square");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = poly_from_json(j[r][c]);
    }
    return m;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw ParseError("rational must be a string or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + j.get<std::string>() + "'");
    }
}

} // namespace

Json poly_to_json(const Poly& p) { return p.to_string(); }

Poly poly_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Poly(Rational(j.get<long>()));
    if (!j.is_string())
        throw ParseError("polynomial must be a string");
    try {
        return Poly::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError("bad polynomial '" + j.get<std::string>() + "': " + e.what());
    }
}

Json value_to_json(const FormContext& ctx, const Value& v)
{
    switch (ctx.kind()) {
    case ValueKind::Scalar:
        return poly_to_json(v.at(0));
    case ValueKind::Kernel: {
        Json out = Json::array();
        for (const auto& p : v)
            out.push_back(poly_to_json(p));
        return out;
    }
    case ValueKind::Endo:
        return matrix_to_json(to_matrix(ctx, v));
    }
    return {};
}

Value value_from_json(const FormContext& ctx, const Json& j)
{
    switch (ctx.kind()) {
    case ValueKind::Scalar:
        return {poly_from_json(j)};
    case ValueKind::Kernel: {
        if (!j.is_array() || j.size() != ctx.algebra_dim())
            throw ParseError("kernel value needs " + std::to_string(ctx.algebra_dim()) + " entries");
        Value v;
        for (const auto& p : j)
            v.push_back(poly_from_json(p));
        return v;
    }
    case ValueKind::Endo: {
        PolyMatrix m = matrix_from_json(j, "endomorphism value");
        if (m.rows() != ctx.endo_size())
            throw ParseError("endomorphism value has the wrong size");
        return from_matrix(m);
    }
    }
    return {};
}

Json form_to_json(const MixedForm& w)
{
    const FormContext& ctx = w.ctx();
    Json comps = Json::array();
    for (const auto& [mask, v] : w.components()) {
        Json dx = Json::array(), theta = Json::array();
        for (MixedForm::Mask rest = mask; rest; rest &= rest - 1) {
            auto leg = static_cast<std::size_t>(std::countr_zero(rest));
            if (leg < ctx.base_dim())
                dx.push_back(leg + 1);
            else
                theta.push_back(leg - ctx.base_dim() + 1);
        }
        comps.push_back(Json{{"I", dx}, {"J", theta}, {"value", value_to_json(ctx, v)}});
    }
    return Json{{"values", to_string(ctx.kind())}, {"degree", w.degree()}, {"components", comps}};
}

MixedForm form_from_json(ContextPtr ctx, const Json& j)
{
    auto degree = static_cast<int>(count_from_json(field(j, "degree"), "degree"));
    MixedForm out(ctx, degree);
    for (const auto& c : field(j, "components")) {
        MixedForm::Mask mask = 0;
        std::vector<std::size_t> legs;
        for (const auto& i : field(c, "I"))
            legs.push_back(index_from_json(i, ctx->base_dim(), "dx"));
        for (const auto& a : field(c, "J"))
            legs.push_back(ctx->base_dim() + index_from_json(a, ctx->algebra_dim(), "theta"));
        // Reorder the listed legs into increasing order, tracking the sign.
        int sign = 1;
        for (std::size_t leg : legs) {
            auto [s, m] = wedge_masks(mask, MixedForm::Mask(1) << leg);
            if (s == 0)
                throw ParseError("repeated leg in form component");
            sign *= s;
            mask = m;
        }
        Value v = value_from_json(*ctx, field(c, "value"));
        if (sign < 0)
            for (auto& p : v)
                p = -p;
        out.add(mask, v);
    }
    return out;
}

LieAlgebra lie_algebra_from_json(const Json& j)
{
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "heisenberg")
            return make_heisenberg();
        if (name == "sl2")
            return make_sl(2);
        if (name == "sl3")
            return make_sl(3);
        throw ParseError("unknown Lie algebra '" + name + "'");
    }
    if (j.contains("name")) {
        std::string name = field(j, "name").get<std::string>();
        if (name == "sl")
            return make_sl(count_from_json(field(j, "n"), "n"));
        if (name == "abelian")
            return make_abelian(count_from_json(field(j, "dim"), "dim"));
        if (name == "heisenberg")
            return make_heisenberg();
        throw ParseError("unknown Lie algebra '" + name + "'");
    }
    std::size_t m = count_from_json(field(j, "dim"), "dim");
    std::vector<Rational> c(m * m * m);
    for (const auto& b : field(j, "brackets")) {
        if (!b.is_array() || b.size() != 4)
            throw ParseError("bracket entries are [i, j, k, \"c\"]");
        std::size_t i = index_from_json(b[0], m, "bracket"), jj = index_from_json(b[1], m, "bracket"),
                    k = index_from_json(b[2], m, "bracket");
        if (i == jj)
            throw ParseError("bracket entry with i == j");
        Rational v = rational_from_json(b[3]);
        c[(i * m + jj) * m + k] = v;
        c[(jj * m + i) * m + k] = -v;
    }
    std::string name = j.contains("label") ? j.at("label").get<std::string>() : "custom";
    return LieAlgebra(m, std::move(c), name);
}

Json lie_algebra_to_json(const LieAlgebra& alg)
{
    std::size_t m = alg.dim();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (alg.c(i, j, k) != 0)
                    brackets.push_back(Json{i + 1, j + 1, k + 1, to_string(alg.c(i, j, k))});
    return Json{{"label", alg.name()}, {"dim", m}, {"brackets", brackets}};
}

GroupElementField group_element_from_json(const Json& j)
{
    if (j.contains("matrix"))
        return GroupElementField(matrix_from_json(field(j, "matrix"), "matrix"),
                                 matrix_from_json(field(j, "inverse"), "inverse"));
    std::size_t n = count_from_json(field(j, "n"), "n");
    std::vector<Shear> shears;
    for (const auto& s : field(j, "shears")) {
        if (!s.is_array() || s.size() != 3)
            throw ParseError("shears are [i, j, \"p\"]");
        std::size_t a = index_from_json(s[0], n, "shear"), b = index_from_json(s[1], n, "shear");
        if (a == b)
            throw ParseError("shear with i == j");
        shears.push_back({a, b, poly_from_json(s[2])});
    }
    return GroupElementField::from_shears(n, shears);
}

Json group_element_to_json(const GroupElementField& g)
{
    return Json{{"matrix", matrix_to_json(g.matrix())}, {"inverse", matrix_to_json(g.inverse())}};
}

UnipotentGroup unipotent_group_from_json(const Json& j)
{
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "heisenberg")
            return UnipotentGroup::heisenberg();
        const std::string prefix = "upper_triangular:";
        if (name.rfind(prefix, 0) == 0)
            return UnipotentGroup::upper_triangular(std::stoul(name.substr(prefix.size())));
        throw ParseError("unknown group '" + name + "'");
    }
    std::size_t n = count_from_json(field(j, "n"), "n");
    std::vector<UnipotentGroup::Position> positions;
    for (const auto& p : field(j, "positions")) {
        if (!p.is_array() || p.size() != 2)
            throw ParseError("positions are [i, j]");
        positions.emplace_back(index_from_json(p[0], n, "position"), index_from_json(p[1], n, "position"));
    }
    try {
        return UnipotentGroup(n, positions);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("group: ") + e.what());
    }
}

GaugePotential potential_from_json(const Json& j, std::size_t base_dim, std::size_t algebra_dim)
{
    if (!j.is_array() || j.size() != base_dim)
        throw ParseError("potential needs one entry per base coordinate");
    GaugePotential a;
    for (const auto& comp : j) {
        if (!comp.is_array() || comp.size() != algebra_dim)
            throw ParseError("potential component needs " + std::to_string(algebra_dim) + " entries");
        GammaField g(algebra_dim);
        for (std::size_t i = 0; i < algebra_dim; ++i)
            g[i] = poly_from_json(comp[i]);
        a.components.push_back(std::move(g));
    }
    return a;
}

BundleTransitions bundle_transitions_from_json(const Json& j)
{
    BundleTransitions b;
    for (const auto& c : field(j, "charts"))
        b.charts.push_back(c.get<std::string>());
    auto index = [&](const Json& id) {
        for (std::size_t i = 0; i < b.charts.size(); ++i)
            if (b.charts[i] == id.get<std::string>())
                return i;
        throw ParseError("unknown chart '" + id.get<std::string>() + "'");
    };
    for (const auto& t : field(j, "transitions"))
        b.g.insert_or_assign({index(field(t, "from")), index(field(t, "to"))}, group_element_from_json(t));
    return b;
}

} // namespace tlacalc
