#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gravfock/gravlimit.h"
#include "gravfock/propagator.h"

namespace gravfock {

/// One external leg of a Green function.
struct Leg {
  bool incoming{true};
  FieldKind kind{FieldKind::Scalar};
  bool antiparticle{false};  // Dirac only
  MomentumLabel momentum{RVec3{}};
  /// Explicit energy; when present the leg must satisfy E^2 = p^2 + m^2 exactly.
  std::optional<Rational> energy;
  std::optional<Discrete> spin;         // Dirac
  std::optional<Discrete> polarization; // gauge gamma
  std::optional<Discrete> inner_polarization;  // gauge Gamma
};

/// Constant momentum-space factor at an interaction point joining a set of legs.
struct VertexRule {
  ComplexRational factor;
  std::vector<std::size_t> legs;  // indices into GreenFunction::legs
};

struct FieldSpec {
  FieldKind kind{FieldKind::Scalar};
  Rational mass{1};
};

struct GreenFunction {
  std::vector<FieldSpec> fields;
  std::vector<Leg> legs;
  std::vector<VertexRule> vertices;

  /// Mass of the field of the given kind; throws if the field is not declared.
  Rational mass(FieldKind k) const;
};

/// Wave-function constants Z, Z2, Z3 in (0, 1], one per field kind.
struct LSZRecipe {
  double z{1.0};
  double z2{1.0};
  double z3{1.0};
  bool gravitational_limit{true};

  double constant(FieldKind k) const;
  void validate() const;
};

/// A free propagation line joining an incoming and an outgoing leg.
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> lines;  // (in leg, out leg)
  int sign{1};
};

/// Spinor or polarization carried by an amputated leg.
struct LegAttachment {
  std::size_t leg{0};
  std::string kind;  // "1", "u", "ubar", "v", "vbar", "eps(x)E"
  Eigen::Vector4cd spinor{Eigen::Vector4cd::Zero()};
  Eigen::Matrix4d polarization{Eigen::Matrix4d::Zero()};  // eps^rho E_alpha
};

struct Amplitude {
  /// Gravitational limit of <out|in> built from barred operators.
  OperatorExpr elastic;
  /// elastic divided by the product of single-quantum norms of the in legs.
  OperatorExpr normalized_elastic;
  std::vector<Pairing> pairings;
  /// Sum over vertices of vertex factor times the per-leg amputation factors
  /// (i / sqrt Z) * i, including the sign (-1)^{#Dirac particle legs}.
  std::complex<double> connected{0.0, 0.0};
  /// Exactly zero when every vertex factor vanishes (or there are no vertices).
  bool connected_is_zero{true};
  std::vector<LegAttachment> attachments;
  /// Net Lambda power left in the elastic part (the gauge limit keeps Lambda^2 per quantum).
  std::optional<int> lambda_power;
};

/// Rejects off-shell legs (explicit energy not on the mass shell), Dirac legs
/// without spin, gauge legs without polarizations or with gamma = 0, vertices
/// referring to unknown legs, and undeclared fields.
void validate_legs(const GreenFunction& g);

/// Perfect matchings of incoming to outgoing legs of the same species with
/// their fermionic sign.
std::vector<Pairing> wick_pairings(const GreenFunction& g);

Amplitude lsz_reduce(const GreenFunction& g, const LSZRecipe& recipe, const RegularizationConfig& cfg);

/// Independent elastic oracle: the sum over species-preserving permutations of
/// products of the limit normalizations
///   scalar 2 omega (2pi)^3 delta3, Dirac (k0/m) delta_st (2pi)^3 delta3,
///   gauge 2 omega eta eta ratio Lambda^2 (2pi)^3 delta3,
/// written down directly rather than derived from the operator algebra.
OperatorExpr elastic_oracle(const GreenFunction& g, const RegularizationConfig& cfg);

/// Barred creator for a leg (inner label on shell).
LadderOperator leg_creator(const Leg& leg);

}  // namespace gravfock
