#pragma once

#include <map>
#include <string>
#include <variant>

#include "gravfock/labels.h"

namespace gravfock {

// Symbolic coefficient factors. Each atom carries an integer power inside an
// AtomPowers map; distribution-valued atoms (deltas) are kept formal.

/// Length scale Lambda.
struct LambdaAtom {};
/// 2 pi.
struct TwoPiAtom {};
/// Regularized inner volume V_reg.
struct VregAtom {};
/// omega_k = sqrt(k^2 + mass^2) for the mass named by the tag (Scalar or Gauge).
struct OmegaAtom {
  MomentumLabel k;
  MassTag mass{MassTag::Scalar};
};
/// k^0 / m for the Dirac mass.
struct EnergyOverMassAtom {
  MomentumLabel k;
};
/// delta^3(p - q); labels stored in canonical order.
struct Delta3Atom {
  MomentumLabel p, q;
};
/// delta^4(P - Q); labels stored in canonical order.
struct Delta4Atom {
  InnerLabel p, q;
};
/// delta^3(0), delta^4(0) markers produced when a delta is evaluated at coincident labels.
struct Delta3Zero {};
struct Delta4Zero {};
/// Kronecker delta_{st} over spin labels.
struct KroneckerAtom {
  Discrete s, t;
};
/// eta^{gamma gamma'} (space-time polarization) or eta^{Gamma Gamma'} (inner).
struct MetricAtom {
  Discrete a, b;
  bool inner{false};
};

using Atom = std::variant<LambdaAtom, TwoPiAtom, VregAtom, OmegaAtom, EnergyOverMassAtom, Delta3Atom, Delta4Atom,
                          Delta3Zero, Delta4Zero, KroneckerAtom, MetricAtom>;

bool operator==(const LambdaAtom&, const LambdaAtom&);
bool operator<(const LambdaAtom&, const LambdaAtom&);
bool operator==(const TwoPiAtom&, const TwoPiAtom&);
bool operator<(const TwoPiAtom&, const TwoPiAtom&);
bool operator==(const VregAtom&, const VregAtom&);
bool operator<(const VregAtom&, const VregAtom&);
bool operator==(const OmegaAtom&, const OmegaAtom&);
bool operator<(const OmegaAtom&, const OmegaAtom&);
bool operator==(const EnergyOverMassAtom&, const EnergyOverMassAtom&);
bool operator<(const EnergyOverMassAtom&, const EnergyOverMassAtom&);
bool operator==(const Delta3Atom&, const Delta3Atom&);
bool operator<(const Delta3Atom&, const Delta3Atom&);
bool operator==(const Delta4Atom&, const Delta4Atom&);
bool operator<(const Delta4Atom&, const Delta4Atom&);
bool operator==(const Delta3Zero&, const Delta3Zero&);
bool operator<(const Delta3Zero&, const Delta3Zero&);
bool operator==(const Delta4Zero&, const Delta4Zero&);
bool operator<(const Delta4Zero&, const Delta4Zero&);
bool operator==(const KroneckerAtom&, const KroneckerAtom&);
bool operator<(const KroneckerAtom&, const KroneckerAtom&);
bool operator==(const MetricAtom&, const MetricAtom&);
bool operator<(const MetricAtom&, const MetricAtom&);

/// Atom -> integer exponent; zero exponents are never stored.
using AtomPowers = std::map<Atom, int>;

Atom delta3(MomentumLabel p, MomentumLabel q);
Atom delta4(InnerLabel p, InnerLabel q);
Atom kronecker(Discrete s, Discrete t);
Atom metric(Discrete a, Discrete b, bool inner);

void multiply_into(AtomPowers& into, const Atom& atom, int power = 1);
void multiply_into(AtomPowers& into, const AtomPowers& other);
AtomPowers inverse(const AtomPowers& atoms);

/// Canonicalizes an atom multiset in place and folds evaluable atoms into
/// `scalar`. Returns false when the product vanishes.
///
/// Delta and Kronecker atoms are grouped into classes of identified labels and
/// rewritten in star form around the smallest label: delta(p,q) delta(q,r)
/// becomes delta(p,q) delta(p,r), a repeated delta contributes delta(0), and two
/// distinct bound labels in one class give zero. Omega and k0/m atoms are moved
/// to the class representative, i.e. f(q) delta(p - q) = f(p) delta(p - q).
/// On-shell inner labels follow their momentum class, so
/// delta4(os(k), os(h)) delta3(k, h) = delta4(0) delta3(k, h).
bool canonicalize(AtomPowers& atoms, ComplexRational& scalar);

std::string to_string(const Atom& atom);

}  // namespace gravfock
