#pragma once

#include "tlacalc/connections.hpp"

#include <string>
#include <utility>

namespace tlacalc {

/// Derivation calculus of M_n: Endo forms over sl_n (defining representation)
/// with no base coordinates. Every derivation is ad_gamma, gamma traceless.
ContextPtr matrix_ncg_context(std::size_t n);

/// Derivation calculus of A = Q[x_1..x_d] (x) M_n: der(A) = TLA(base, sl_n)
/// acting on M_n-valued forms through commutators.
ContextPtr endo_ncg_context(std::size_t base_dim, std::size_t n);

/// Kernel-valued sibling of an NC context (forms with values in sl_n).
ContextPtr kernel_ncg_context(const FormContext& nc_ctx);

/// ad_gamma as an algebroid element; the trace part of gamma is discarded.
TlaElement inner_derivation(const FormContext& nc_ctx, const PolyMatrix& gamma);

/// Evaluates X . a for a in A: X on entries plus [gamma, a].
PolyMatrix derivation_apply(const FormContext& nc_ctx, const TlaElement& x, const PolyMatrix& a);

/// i theta: sum_a theta^a (x) e_a, so that i theta(ad_gamma) = gamma - tr(gamma)/n.
MixedForm canonical_itheta(ContextPtr nc_ctx);

/// Noncommutative differential; rejects forms already at top degree.
MixedForm nc_differential(const MixedForm& w);

/// d'(i theta) - (i theta)^2.
MixedForm maurer_cartan_defect(ContextPtr nc_ctx);

/// d'a - [i theta, a] for an M_n-valued 0-form a.
MixedForm degree_zero_defect(const MixedForm& a);

/// d'w - (i theta w - (-1)^{deg w} w i theta).
MixedForm itheta_commutator_defect(const MixedForm& w);

/// First basis 1-form theta^a (x) E_ij whose commutator defect is nonzero,
/// paired with that defect. Throws if none exists.
std::pair<MixedForm, MixedForm> higher_degree_witness(ContextPtr nc_ctx);

/// Number of basis 0-forms E_ij with nonzero degree-0 defect (expected 0).
std::size_t degree_zero_witness_count(ContextPtr nc_ctx);

/// Rank of gamma -> ad_gamma on the sl_n basis, as linear maps of M_n.
std::size_t inner_derivation_rank(std::size_t n);

/// nabla_x a = x . a + omega(x) a on the right module M = A.
PolyMatrix nc_connection_apply(const MixedForm& omega, const TlaElement& x, const PolyMatrix& a);

/// d omega + omega ^ omega.
MixedForm nc_curvature(const MixedForm& omega);

/// [nabla_x, nabla_y] a - nabla_[x,y] a computed from the operators.
PolyMatrix nc_operator_curvature(const MixedForm& omega, const TlaElement& x, const TlaElement& y,
                                 const PolyMatrix& a);

/// omega^g = g^-1 omega g + g^-1 d g.
MixedForm nc_gauge(const MixedForm& omega, const GroupElementField& g);

/// Every component has zero trace.
bool is_traceless(const MixedForm& w);

/// Tagged connection spaces. The first three carry Endo-valued 1-forms and
/// are identified by the identity; the last three carry kernel-valued
/// 1-forms (generalized) or traceless Endo-valued 1-forms (traceless NC).
enum class ConnectionSpace {
    DerAConnection,
    AtiyahConnection,
    NcConnection,
    GeneralizedDerA,
    GeneralizedAtiyah,
    TracelessNc,
};

const char* to_string(ConnectionSpace space);
ConnectionSpace parse_connection_space(const std::string& name);

/// Converts a connection payload between isomorphic spaces. Kernel-valued
/// payloads are realized through the defining representation of sl_n.
MixedForm convert_connection(ConnectionSpace from, ConnectionSpace to, const MixedForm& payload);

} // namespace tlacalc
