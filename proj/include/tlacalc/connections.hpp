#pragma once

#include "tlacalc/forms.hpp"

#include <vector>

namespace tlacalc {

/// Pure de Rham potential A = sum_mu dx^mu (x) A_mu, with A_mu a GammaField.
struct GaugePotential {
    std::vector<GammaField> components;
};

/// A as a kernel-valued 1-form of bidegree (1, 0).
MixedForm potential_form(ContextPtr kernel_ctx, const GaugePotential& a);

/// The bidegree (1, 0) part of a kernel-valued 1-form, read back as a potential.
GaugePotential potential_of(const MixedForm& w);

/// alpha = A - theta; satisfies alpha(0 (+) l) = -l.
MixedForm connection_from_potential(ContextPtr kernel_ctx, const GaugePotential& a);

/// The canonical flat splitting alpha = -theta.
MixedForm flat_connection(ContextPtr kernel_ctx);

/// Exact check of alpha(0 (+) e_a) = -e_a for every basis element; since the
/// check is componentwise it covers all polynomial multiples.
bool is_normalized(const MixedForm& alpha);

/// d alpha + 1/2 [alpha, alpha] for a kernel-valued 1-form.
MixedForm curvature(const MixedForm& alpha);

/// d R + [alpha, R].
MixedForm bianchi_defect(const MixedForm& alpha);

/// D eta = d eta + [alpha, eta].
MixedForm covariant_differential(const MixedForm& alpha, const MixedForm& eta);

/// First-order gauge transform omega + d xi + [omega, xi] for a kernel-valued 0-form xi.
MixedForm infinitesimal_gauge(const MixedForm& omega, const GammaField& xi);

/// Representation applied to the values of a kernel-valued form; `endo_ctx`
/// carries the representation.
MixedForm apply_representation(const MixedForm& w, ContextPtr endo_ctx);

/// Endo-valued 1-form omega^E of the induced A-connection.
MixedForm induce_rep_connection(const MixedForm& omega, ContextPtr endo_ctx);

/// d_E omega + omega ^ omega for an Endo-valued 1-form.
MixedForm rep_curvature(const MixedForm& omega);

/// d_E R + [omega, R] (graded commutator).
MixedForm rep_bianchi_defect(const MixedForm& omega);

/// g^-1 omega g + g^-1 d_E g.
MixedForm finite_gauge(const MixedForm& omega, const GroupElementField& g);

/// Forgetful inclusion of ordinary connections into generalized ones.
MixedForm embed_ordinary_as_generalized(const MixedForm& alpha);

} // namespace tlacalc
