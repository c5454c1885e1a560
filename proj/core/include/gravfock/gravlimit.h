#pragma once

#include <map>
#include <optional>

#include "gravfock/fock.h"
#include "gravfock/operator_expr.h"

namespace gravfock {

/// Length scale Lambda and regularized inner volume V_reg, both > 0. The ratio
/// V_reg / Lambda^4 is what enters the limit; it is 1 unless configured.
struct RegularizationConfig {
  Rational lambda{1};
  Rational v_reg{1};

  Rational ratio() const;
  /// Throws std::invalid_argument unless lambda > 0 and v_reg > 0.
  void validate() const;
  /// lambda with V_reg = ratio * lambda^4.
  static RegularizationConfig with_ratio(const Rational& lambda, const Rational& ratio = Rational(1));
};

/// Gravitational limit of an expression. Every inner label K is replaced by the
/// on-shell four-momentum (omega_k, k) of the operator carrying it, using the
/// mass of that operator's field. A delta4 whose arguments coincide becomes
/// V_reg / (2pi)^4, and V_reg^n is rewritten as ratio^n Lambda^{4n}.
///
/// `associations` supplies K -> k for inner labels that no operator of `e`
/// carries (for example after a vacuum expectation value). Throws
/// std::invalid_argument for an inner label without association, for
/// conflicting associations, and for an inner delta that does not collapse.
OperatorExpr grav_limit_expr(const OperatorExpr& e, const RegularizationConfig& cfg,
                             const std::map<InnerLabel, InnerLabel>& associations = {});

/// Sets every quantum's inner label to its on-shell inertial momentum. Idempotent.
FockState project_state(const FockState& s);

/// Substitutes a numeric value for Lambda.
OperatorExpr evaluate_lambda(const OperatorExpr& e, const Rational& lambda);

/// Net power of Lambda if all terms share it; std::nullopt otherwise.
std::optional<int> lambda_power(const OperatorExpr& e);

}  // namespace gravfock
