#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gravfock/fock.h"
#include "gravfock/kinematics.h"
#include "gravfock/operator_expr.h"

namespace gravfock {

enum class FieldKind { Scalar, Dirac, Gauge };

const char* to_string(FieldKind k);
MassTag mass_tag(FieldKind k);

/// Free Feynman propagator in momentum space (gauge parameter fixed to 1):
///   scalar: i Lambda^4 delta4(X-Y)   *  1 / (k^2 - m^2 + i eps)
///   Dirac:  i Lambda^4 delta4(X-Y)   *  (kslash + m) / (k^2 - m^2 + i eps)
///   gauge:  i Lambda^2 Tdelta(X-Y)   *  -eta_{mu nu} / (k^2 - mu^2 + i eps)  (x)  Pi_{alpha beta}(K)
/// with the inner transversal projector Pi = -eta + K K / K^2 = sum_Gamma E E.
struct PropagatorSpec {
  FieldKind kind{FieldKind::Scalar};
  double mass{1.0};
  double i_epsilon{1e-8};

  /// Power of Lambda in front of the inner delta.
  int lambda_power() const { return kind == FieldKind::Gauge ? 2 : 4; }
  /// Throws std::invalid_argument for mass < 0, i_epsilon <= 0, or a massless
  /// Dirac / gauge field.
  void validate() const;
  std::string describe() const;

  /// Coefficient of the on-shell momentum integrand d^3k e^{-ik(x-y)} e^{-iK(X-Y)}
  /// implied by the prefactor and kernel after the k^0 contour integral:
  /// Lambda^p (2pi)^-4 from the inner delta (including the Lambda^4 measure of the
  /// transversal delta for the gauge field) times (2pi)^-3 (2 k^0)^-1, with
  /// 2 k^0 written as 2 omega(k) or 2 m (k0/m). The numerator matrices are left out.
  OperatorExpr expected_integrand(const MomentumLabel& k) const;
};

/// Inner transversal projector Pi_{alpha beta} = -eta_{alpha beta} + K_alpha K_beta / K^2
/// (lower indices). Requires K^2 != 0.
kinematics::Matrix4d inner_projector(const kinematics::FourVector& big_k);

struct PropagatorValue {
  FieldKind kind{FieldKind::Scalar};
  /// 1 / (k^2 - m^2 + i eps).
  std::complex<double> pole;
  /// Dirac: (kslash + m) * pole.
  kinematics::Matrix4cd dirac;
  /// Gauge: -eta_{mu nu} * pole and Pi_{alpha beta}; the kernel is their tensor product.
  kinematics::Matrix4cd spacetime;
  kinematics::Matrix4d inner;

  /// Gauge kernel entry [mu nu][alpha beta].
  std::complex<double> gauge(int mu, int nu, int alpha, int beta) const { return spacetime(mu, nu) * inner(alpha, beta); }
};

/// Kernel at momentum k (and inner momentum K for the gauge field). Rejects
/// i_epsilon <= 0, and K^2 = 0 or a missing K for the gauge field.
PropagatorValue propagator_eval(const PropagatorSpec& spec, const kinematics::FourVector& k,
                                const std::optional<kinematics::FourVector>& big_k = std::nullopt);

/// Kernel after multiplication by (k^2 - m^2), kept as an exact pole order:
/// the free two-point function has pole order 1 and amputates to its numerator.
struct PoleForm {
  int pole_order{1};
  std::string numerator;
};
PoleForm kernel_form(const PropagatorSpec& spec);
PoleForm amputate(const PoleForm& f);

/// Integrand factors of a mode expansion:
///   scalar, gauge: d^3k / ((2pi)^3 2 omega_k) * d^4K / (2pi)^4 * Lambda^4
///   Dirac:         d^3k / (2pi)^3 * m / k0    * d^4K / (2pi)^4 * Lambda^4
struct ModeExpansion {
  FieldKind kind{FieldKind::Scalar};
  OperatorExpr measure(const MomentumLabel& k) const;
  std::string describe() const;
};

struct WickCheck {
  FieldKind kind{FieldKind::Scalar};
  bool structural{false};
  bool other_orderings_vanish{false};
  double numerator_residual{0.0};
  bool passed{false};
  std::string lhs;
  std::string rhs;
  std::string detail;
};

/// Computes <0| field field^dagger |0> in momentum space from the mode expansion
/// and the operator algebra: the contact term is multiplied by the mode measure
/// of the second field and the sifting integrals over (h, H) (and the spin t)
/// are carried out. The remaining coefficient of the first field's measure must
/// equal PropagatorSpec::expected_integrand exactly; the spin or polarization
/// sums are compared numerically with the kernel numerator at a sample momentum.
WickCheck wick_two_point(FieldKind kind, const FieldMasses& masses, double tol,
                         const kinematics::ThreeVector& sample_k = {0.3, -0.4, 1.2},
                         const kinematics::FourVector& sample_big_k = {2.0, 0.5, -0.25, 0.75});

}  // namespace gravfock
