#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gravfock/kinematics.h"
#include "gravfock/operator_expr.h"

namespace gravfock {

/// Masses used when a formal on-shell energy is evaluated numerically.
struct FieldMasses {
  double scalar{1.0};
  double dirac{1.0};
  double gauge{1.0};
  double of(MassTag t) const;
};

/// Exact four-vector whose time component may contain on-shell energies
/// omega(k) = sqrt(k^2 + m^2), kept as formal symbols with rational weights.
/// Contravariant components.
struct FormalFourVector {
  RVec4 rational{};
  std::map<std::pair<MomentumLabel, MassTag>, Rational> energies;

  /// (omega_k, k) for a bound momentum label.
  static FormalFourVector on_shell(const MomentumLabel& k, MassTag mass);
  static FormalFourVector from(const RVec4& v);

  FormalFourVector& operator+=(const FormalFourVector& o);
  FormalFourVector& operator*=(const Rational& s);
  friend FormalFourVector operator+(FormalFourVector a, const FormalFourVector& b) { return a += b; }
  friend bool operator==(const FormalFourVector& a, const FormalFourVector& b);

  kinematics::FourVector evaluate(const FieldMasses& m) const;
};
std::string to_string(const FormalFourVector& v);

/// Multi-quanta state: a linear combination of creator words acting on |0>.
/// Words are kept in canonical order; kets with a spacelike bound inner label
/// are rejected at construction.
class FockState {
 public:
  FockState() = default;  // the zero vector
  static FockState vacuum();
  /// e |0>, reduced; words ending in an annihilator vanish.
  static FockState from(const OperatorExpr& e);

  const OperatorExpr& expr() const { return expr_; }
  bool is_zero() const { return expr_.is_zero(); }

  friend bool operator==(const FockState& a, const FockState& b) { return a.expr_ == b.expr_; }

 private:
  explicit FockState(OperatorExpr e) : expr_(std::move(e)) {}
  OperatorExpr expr_;
};

/// "<expr> |0>", or "0" for the zero vector.
std::string to_string(const FockState& s);

FockState apply(const OperatorExpr& e, const FockState& s);

/// <bra|ket> = <0| bra^dagger ket |0>.
OperatorExpr inner_product(const FockState& bra, const FockState& ket);

/// Product of eta^{gg} eta^{GG} over the gauge quanta of a word (+1 for matter).
/// Polarization labels must be bound.
int norm_sign(const std::vector<LadderOperator>& word);

/// Drops every ket containing a gauge quantum with g = 0.
FockState physical_filter(const FockState& s);

enum class MomentumKind { Inertial, Inner };

struct KetEigenvalue {
  Term ket;
  FormalFourVector value;
};

/// Per-ket eigenvalue of p (Inertial) or P (Inner): the sum over quanta of k
/// (resp. K), each gauge quantum weighted by eta^{gg} eta^{GG}. All labels must
/// be bound.
std::vector<KetEigenvalue> momentum_action(MomentumKind which, const FockState& s);

}  // namespace gravfock
