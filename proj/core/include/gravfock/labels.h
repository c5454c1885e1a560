#pragma once

#include <optional>
#include <string>
#include <variant>

#include "gravfock/rational.h"

namespace gravfock {

/// Operator species: a (scalar), b / d (Dirac particle / antiparticle), A (gauge a_+).
enum class Species { Scalar, DiracParticle, DiracAntiparticle, Gauge };

/// Which mass sets the on-shell energy of a label: m (scalar), m (Dirac) or mu (gauge).
enum class MassTag { Scalar, Dirac, Gauge };

MassTag mass_tag(Species s);
char species_head(Species s);
bool is_fermionic(Species s);

struct Symbol {
  std::string name;
};
inline bool operator==(const Symbol& a, const Symbol& b) { return a.name == b.name; }
inline bool operator<(const Symbol& a, const Symbol& b) { return a.name < b.name; }

/// Inertial three-momentum label: bound rational value or free symbol. Bound
/// values order before symbols.
struct MomentumLabel {
  std::variant<RVec3, Symbol> value;

  static MomentumLabel symbol(std::string name) { return {Symbol{std::move(name)}}; }
  static MomentumLabel bound(RVec3 v) { return {std::move(v)}; }
  bool is_bound() const { return std::holds_alternative<RVec3>(value); }
  const RVec3& vec() const { return std::get<RVec3>(value); }
};
bool operator==(const MomentumLabel& a, const MomentumLabel& b);
bool operator<(const MomentumLabel& a, const MomentumLabel& b);

/// The on-shell four-vector (omega_k, k) of a momentum label; what an inner label
/// becomes in the gravitational limit.
struct OnShell {
  MomentumLabel momentum;
  MassTag mass;
};
bool operator==(const OnShell& a, const OnShell& b);
bool operator<(const OnShell& a, const OnShell& b);

/// Inner (gravitational) four-momentum label K: bound rational contravariant
/// vector, symbol, or projected onto the on-shell inertial momentum.
struct InnerLabel {
  std::variant<RVec4, Symbol, OnShell> value;

  static InnerLabel symbol(std::string name) { return {Symbol{std::move(name)}}; }
  static InnerLabel bound(RVec4 v) { return {std::move(v)}; }
  static InnerLabel on_shell(MomentumLabel k, MassTag m) { return {OnShell{std::move(k), m}}; }
  bool is_bound() const { return std::holds_alternative<RVec4>(value); }
  bool is_symbol() const { return std::holds_alternative<Symbol>(value); }
  bool is_on_shell() const { return std::holds_alternative<OnShell>(value); }
  const RVec4& vec() const { return std::get<RVec4>(value); }
};
bool operator==(const InnerLabel& a, const InnerLabel& b);
bool operator<(const InnerLabel& a, const InnerLabel& b);

/// Spin s or polarization gamma / Gamma: bound integer or free symbol.
struct Discrete {
  std::variant<int, Symbol> value;

  static Discrete symbol(std::string name) { return {Symbol{std::move(name)}}; }
  static Discrete bound(int v) { return {v}; }
  bool is_bound() const { return std::holds_alternative<int>(value); }
  int get() const { return std::get<int>(value); }
};
bool operator==(const Discrete& a, const Discrete& b);
bool operator<(const Discrete& a, const Discrete& b);

std::string to_string(const MomentumLabel& k);
std::string to_string(const InnerLabel& k);
std::string to_string(const Discrete& d);

/// A creation or annihilation operator. Construct through the named factories,
/// which enforce the label invariants (spin only on Dirac operators, Gamma != 0,
/// momentum/inner labels both bound or both symbolic).
class LadderOperator {
 public:
  static LadderOperator scalar(MomentumLabel k, InnerLabel big_k, bool dagger = false);
  static LadderOperator dirac(Species s, MomentumLabel k, Discrete spin, InnerLabel big_k, bool dagger = false);
  static LadderOperator gauge(MomentumLabel k, Discrete gamma, InnerLabel big_k, Discrete big_gamma,
                              bool dagger = false);

  Species species() const { return species_; }
  bool dagger() const { return dagger_; }
  bool fermionic() const { return is_fermionic(species_); }
  bool creator() const { return dagger_; }
  const MomentumLabel& momentum() const { return momentum_; }
  const InnerLabel& inner() const { return inner_; }
  const std::optional<Discrete>& spin() const { return spin_; }
  const std::optional<Discrete>& gamma() const { return gamma_; }
  const std::optional<Discrete>& big_gamma() const { return big_gamma_; }

  /// Inner label elided, i.e. projected onto the on-shell inertial momentum.
  bool barred() const { return inner_.is_on_shell(); }

  LadderOperator adjoint() const;
  LadderOperator with_inner(InnerLabel big_k) const;
  LadderOperator with_momentum(MomentumLabel k) const;
  /// Replaces both labels at once, so bound/symbolic consistency is checked on the result.
  LadderOperator with_labels(MomentumLabel k, InnerLabel big_k) const;
  LadderOperator with_spin(Discrete s) const;
  LadderOperator with_polarizations(Discrete gamma, Discrete big_gamma) const;
  /// The gravitational-limit operator: inner label replaced by (omega_k, k).
  LadderOperator projected() const;

  friend bool operator==(const LadderOperator& a, const LadderOperator& b);
  /// Canonical order: creators before annihilators, then species, then labels.
  friend bool operator<(const LadderOperator& a, const LadderOperator& b);

 private:
  LadderOperator() = default;
  void validate() const;

  Species species_{Species::Scalar};
  bool dagger_{false};
  MomentumLabel momentum_;
  InnerLabel inner_;
  std::optional<Discrete> spin_;
  std::optional<Discrete> gamma_;
  std::optional<Discrete> big_gamma_;
};

std::string to_string(const LadderOperator& op);

}  // namespace gravfock
