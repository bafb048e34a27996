#pragma once

#include "tlacalc/fields.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace tlacalc {

/// Where form values live.
///  - Scalar: polynomial functions, no action of the kernel.
///  - Kernel: the Lie algebra itself with the adjoint action.
///  - Endo:   n x n matrices, acted on by commutators with a representation.
enum class ValueKind { Scalar, Kernel, Endo };

const char* to_string(ValueKind kind);

/// Value of a form on arguments: 1 entry (Scalar), m entries (Kernel,
/// coordinates in the algebra basis) or n*n entries (Endo, row-major).
using Value = std::vector<Poly>;

/// The trivial Lie algebroid TLA(M, g) over a base with `base_dim`
/// coordinates, together with the value space of the forms.
///
/// Forms are expanded on the 1-forms dx^0..dx^{d-1}, theta^0..theta^{m-1}
/// (theta dual to the algebra basis); generator k < d is dx^k, generator
/// d + a is theta^a. All dx legs come before theta legs.
class FormContext {
public:
    static std::shared_ptr<const FormContext> scalar(std::size_t base_dim, LieAlgebraPtr algebra);
    static std::shared_ptr<const FormContext> kernel(std::size_t base_dim, LieAlgebraPtr algebra);
    static std::shared_ptr<const FormContext> endo(std::size_t base_dim, LieAlgebraPtr algebra, Representation rep);

    std::size_t base_dim() const noexcept { return base_dim_; }
    const LieAlgebra& algebra() const noexcept { return *algebra_; }
    const LieAlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
    std::size_t algebra_dim() const noexcept { return algebra_->dim(); }
    ValueKind kind() const noexcept { return kind_; }
    /// Matrix size for Endo values, 0 otherwise.
    std::size_t endo_size() const noexcept { return rep_.n; }
    const Representation& representation() const noexcept { return rep_; }

    std::size_t num_generators() const noexcept { return base_dim_ + algebra_->dim(); }
    std::size_t value_dim() const noexcept;

    /// Scalar-valued context over the same algebroid.
    std::shared_ptr<const FormContext> scalar_sibling() const;

    Value zero_value() const { return Value(value_dim()); }
    /// e_a acting on a value (adjoint action, commutator with rep(e_a), or 0).
    Value act(std::size_t a, const Value& v) const;
    /// The Lie bracket (Kernel) or matrix commutator (Endo) of values.
    Value bracket(const Value& u, const Value& v) const;

    /// Same base dimension and structure constants.
    bool same_algebroid(const FormContext& o) const;
    friend bool operator==(const FormContext& a, const FormContext& b);

private:
    FormContext() = default;
    void build_action();

    std::size_t base_dim_ = 0;
    LieAlgebraPtr algebra_;
    ValueKind kind_ = ValueKind::Scalar;
    Representation rep_;
    struct Entry {
        std::size_t row;
        std::size_t col;
        Rational coeff;
    };
    std::vector<std::vector<Entry>> action_; // per basis element, sparse value_dim x value_dim
};

using ContextPtr = std::shared_ptr<const FormContext>;

/// An element X (+) gamma of TLA(M, g).
struct TlaElement {
    PolyVectorField x;
    GammaField gamma;

    /// The anchor rho(X (+) gamma) = X.
    const PolyVectorField& anchor() const noexcept { return x; }
    friend bool operator==(const TlaElement&, const TlaElement&) = default;
};

TlaElement make_element(const FormContext& ctx, PolyVectorField x, GammaField gamma);
/// iota(l) = 0 (+) l.
TlaElement kernel_element(const FormContext& ctx, GammaField gamma);
/// d/dx_mu (+) 0.
TlaElement coordinate_element(const FormContext& ctx, std::size_t mu);
TlaElement scale(const Poly& f, const TlaElement& e);
TlaElement operator+(const TlaElement& a, const TlaElement& b);

/// [X, Y] (+) (X.eta - Y.gamma + [gamma, eta]).
TlaElement tla_bracket(const LieAlgebra& alg, const TlaElement& a, const TlaElement& b);

/// Homogeneous form of degree r: sum over generator subsets K (|K| = r) of
/// e^K (x) value_K, with polynomial coefficients inside the values.
class MixedForm {
public:
    using Mask = std::uint32_t;
    using Components = std::map<Mask, Value>;

    MixedForm(ContextPtr ctx, int degree);

    /// 0-form with the given value.
    static MixedForm function(ContextPtr ctx, Value v);
    /// dx^mu (x) v.
    static MixedForm dx(ContextPtr ctx, std::size_t mu, Value v);
    /// theta^a (x) v.
    static MixedForm theta(ContextPtr ctx, std::size_t a, Value v);
    /// e^{mask} (x) v.
    static MixedForm basis(ContextPtr ctx, Mask mask, Value v);

    const ContextPtr& context() const noexcept { return ctx_; }
    const FormContext& ctx() const noexcept { return *ctx_; }
    int degree() const noexcept { return degree_; }
    const Components& components() const noexcept { return components_; }
    bool is_zero() const noexcept { return components_.empty(); }

    /// Accumulates e^mask (x) v; zero components are dropped.
    void add(Mask mask, const Value& v);
    Value component(Mask mask) const;

    /// (de Rham degree, exterior-dual degree) of a basis element.
    std::pair<int, int> bidegree(Mask mask) const;
    /// The projection onto bidegree (p, q).
    MixedForm bidegree_part(int p, int q) const;
    /// Reinterpret the components in another context with the same shape.
    MixedForm with_context(ContextPtr ctx) const;

    MixedForm& operator+=(const MixedForm& o);
    MixedForm& operator-=(const MixedForm& o);
    MixedForm operator-() const;
    friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
    friend MixedForm operator-(MixedForm a, const MixedForm& b) { return a -= b; }
    friend MixedForm operator*(const Poly& f, const MixedForm& w);
    friend MixedForm operator*(const Rational& c, const MixedForm& w);
    friend bool operator==(const MixedForm& a, const MixedForm& b);

private:
    void check_compatible(const MixedForm& o) const;

    ContextPtr ctx_;
    int degree_;
    Components components_;
};

/// Mask helpers.
inline MixedForm::Mask dx_mask(std::size_t mu) { return MixedForm::Mask(1) << mu; }
inline MixedForm::Mask theta_mask(const FormContext& ctx, std::size_t a)
{
    return MixedForm::Mask(1) << (ctx.base_dim() + a);
}
/// Sign and union of e^A ^ e^B; sign 0 when A and B overlap.
std::pair<int, MixedForm::Mask> wedge_masks(MixedForm::Mask a, MixedForm::Mask b);

/// Pairing of generators with an element: (X^0..X^{d-1}, gamma^0..gamma^{m-1}).
std::vector<Poly> frame_coordinates(const FormContext& ctx, const TlaElement& e);

/// w(args) with the determinant normalization e^{k1}^..^e^{kr}(v_1..v_r) = det[e^{ki}(v_j)].
Value evaluate(const MixedForm& w, const std::vector<TlaElement>& args);

/// Exterior product; values multiply as Scalar*any, any*Scalar, Endo*Endo.
/// Agrees with the alternating sum carrying 1/(p! q!).
MixedForm wedge(const MixedForm& a, const MixedForm& b);

/// Graded bracket: Lie bracket of values (Kernel) or graded commutator
/// a b - (-1)^{|a||b|} b a (Endo).
MixedForm graded_bracket(const MixedForm& a, const MixedForm& b);

/// Total differential d + s' computed componentwise.
MixedForm differential(const MixedForm& w);

/// (d w)(args) by the literal Koszul sum; independent of `differential`.
Value differential_via_koszul(const MixedForm& w, const std::vector<TlaElement>& args);

/// phi(x) . v: derivative of the entries along X plus the action of gamma.
Value act_on_value(const FormContext& ctx, const TlaElement& x, const Value& v);

/// i_x w; zero on 0-forms.
MixedForm interior(const TlaElement& x, const MixedForm& w);

/// L_x = d i_x + i_x d.
MixedForm lie_derivative(const TlaElement& x, const MixedForm& w);

/// Defects of the four Cartan relations on w (all zero for a Cartan operation):
/// i_{fx} - f i_x, i_x i_y + i_y i_x, [L_x, i_y] - i_[x,y], [L_x, L_y] - L_[x,y].
struct CartanDefects {
    MixedForm linearity;
    MixedForm anticommutator;
    MixedForm lie_interior;
    MixedForm lie_lie;

    bool all_zero() const
    {
        return linearity.is_zero() && anticommutator.is_zero() && lie_interior.is_zero() && lie_lie.is_zero();
    }
};

CartanDefects cartan_defects(const TlaElement& x, const TlaElement& y, const Poly& f, const MixedForm& w);

/// Family of algebroid elements acting by interior products.
struct CartanOperation {
    std::vector<TlaElement> generators;
};

/// The operation of the kernel: generators 0 (+) e_a.
CartanOperation kernel_operation(const FormContext& ctx);

bool is_horizontal(const MixedForm& w, const CartanOperation& op);
bool is_invariant(const MixedForm& w, const CartanOperation& op);
bool is_basic(const MixedForm& w, const CartanOperation& op);

/// Tautological kernel-valued 1-form theta(gamma) = gamma (Kernel context),
/// or sum_a theta^a (x) rep(e_a) in an Endo context.
MixedForm tautological_form(ContextPtr ctx);

/// Value conversions.
GammaField to_gamma(const Value& v);
Value from_gamma(const GammaField& g);
PolyMatrix to_matrix(const FormContext& ctx, const Value& v);
Value from_matrix(const PolyMatrix& m);

/// Multiply every value of an Endo form by a matrix on the left / right.
MixedForm left_multiply(const PolyMatrix& g, const MixedForm& w);
MixedForm right_multiply(const MixedForm& w, const PolyMatrix& g);

/// Apply a Q-linear map on values componentwise, landing in `target`.
template <class F>
MixedForm map_values(const MixedForm& w, ContextPtr target, F&& f)
{
    MixedForm out(std::move(target), w.degree());
    for (const auto& [mask, v] : w.components())
        out.add(mask, f(v));
    return out;
}

} // namespace tlacalc
