#pragma once

#include "gravfock/operator_expr.h"

namespace gravfock {

/// The right-hand side of the (anti)commutator [x, y]_-+ for an annihilator x and a
/// creator y of the same species; zero for different species.
///   scalar: 2 omega_k Lambda^-4 (2pi)^4 delta4(K,H) (2pi)^3 delta3(k,h)
///   Dirac:  (k0/m) delta_st Lambda^-4 (2pi)^4 delta4(K,H) (2pi)^3 delta3(k,h)
///   gauge:  2 omega_k eta^{g g'} eta^{G G'} Lambda^-2 (2pi)^4 delta4(K,H) (2pi)^3 delta3(k,h)
OperatorExpr contact_term(const LadderOperator& annihilator, const LadderOperator& creator);

/// Rewrites every monomial into canonical order (creators left of annihilators,
/// each block sorted by the operator key) and keeps the identity exact by emitting
/// the contact term at every annihilator/creator exchange. Fermionic exchanges
/// carry a sign; a repeated fermionic operator annihilates the monomial.
OperatorExpr reduce_to_normal_form(const OperatorExpr& e);

/// Same reordering with the contact terms discarded, i.e. :e:.
OperatorExpr normal_order(const OperatorExpr& e);

/// [A, B] = AB - BA and {A, B} = AB + BA, both in normal form.
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);

/// <0| e |0>: the operator-free part of the normal form.
OperatorExpr vev(const OperatorExpr& e);

/// Grading of an operator word: +1 for an even number of fermionic factors.
bool is_even(const std::vector<LadderOperator>& word);

}  // namespace gravfock
