#include "gravfock/fock.h"

#include <cmath>
#include <stdexcept>

#include "gravfock/normal_order.h"

namespace gravfock {

double FieldMasses::of(MassTag t) const {
  switch (t) {
    case MassTag::Scalar: return scalar;
    case MassTag::Dirac: return dirac;
    case MassTag::Gauge: return gauge;
  }
  return scalar;
}

FormalFourVector FormalFourVector::on_shell(const MomentumLabel& k, MassTag mass) {
  if (!k.is_bound()) throw std::invalid_argument("on-shell energy needs a bound momentum");
  FormalFourVector v;
  v.rational = {Rational(0), k.vec()[0], k.vec()[1], k.vec()[2]};
  v.energies.emplace(std::make_pair(k, mass), Rational(1));
  return v;
}

FormalFourVector FormalFourVector::from(const RVec4& r) {
  FormalFourVector v;
  v.rational = r;
  return v;
}

FormalFourVector& FormalFourVector::operator+=(const FormalFourVector& o) {
  for (std::size_t i = 0; i < 4; ++i) rational[i] += o.rational[i];
  for (const auto& [key, w] : o.energies) {
    auto [it, inserted] = energies.try_emplace(key, w);
    if (!inserted) {
      it->second += w;
      if (it->second == 0) energies.erase(it);
    }
  }
  return *this;
}

FormalFourVector& FormalFourVector::operator*=(const Rational& s) {
  for (auto& c : rational) c *= s;
  if (s == 0) {
    energies.clear();
  } else {
    for (auto& [key, w] : energies) w *= s;
  }
  return *this;
}

bool operator==(const FormalFourVector& a, const FormalFourVector& b) {
  return a.rational == b.rational && a.energies == b.energies;
}

kinematics::FourVector FormalFourVector::evaluate(const FieldMasses& m) const {
  kinematics::FourVector out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = to_double(rational[i]);
  for (const auto& [key, w] : energies) {
    const auto& k = key.first.vec();
    out[0] += to_double(w) * kinematics::on_shell_energy({to_double(k[0]), to_double(k[1]), to_double(k[2])},
                                                         m.of(key.second));
  }
  return out;
}

std::string to_string(const FormalFourVector& v) {
  std::string t = v.energies.empty() || v.rational[0] != 0 ? to_string(v.rational[0]) : "";
  for (const auto& [key, w] : v.energies) {
    const std::string head = key.second == MassTag::Gauge ? "omega_A(" : (key.second == MassTag::Dirac ? "omega_D(" : "omega(");
    const std::string sym = head + to_string(key.first) + ")";
    const Rational mag = w < 0 ? Rational(-w) : w;
    const std::string term = mag == 1 ? sym : to_string(mag) + "*" + sym;
    if (t.empty()) {
      t = (w < 0 ? "-" : "") + term;
    } else {
      t += (w < 0 ? " - " : " + ") + term;
    }
  }
  return "(" + t + ", " + to_string(v.rational[1]) + ", " + to_string(v.rational[2]) + ", " +
         to_string(v.rational[3]) + ")";
}

namespace {

void check_support(const LadderOperator& o) {
  if (o.inner().is_bound() && minkowski_square(o.inner().vec()) < 0) {
    throw std::invalid_argument("inner momentum " + to_string(o.inner()) +
                                " is spacelike and outside the support of the field");
  }
}

int eta_diag(int g) { return g == 0 ? 1 : -1; }

}  // namespace

FockState FockState::vacuum() { return FockState(OperatorExpr::number(ComplexRational(1))); }

FockState FockState::from(const OperatorExpr& e) {
  OperatorExpr kept;
  const OperatorExpr reduced = reduce_to_normal_form(e);
  for (const auto& [t, c] : reduced.terms()) {
    bool creators_only = true;
    for (const auto& o : t.factors) creators_only = creators_only && o.creator();
    if (!creators_only) continue;
    for (const auto& o : t.factors) check_support(o);
    kept.add(t, c);
  }
  return FockState(std::move(kept));
}

std::string to_string(const FockState& s) {
  if (s.is_zero()) return "0";
  const auto& terms = s.expr().terms();
  if (terms.size() == 1 && terms.begin()->first.factors.empty() && terms.begin()->first.atoms.empty() &&
      terms.begin()->second == ComplexRational(1)) {
    return "|0>";
  }
  const std::string body = to_string(s.expr());
  return (terms.size() > 1 ? "(" + body + ")" : body) + " |0>";
}

FockState apply(const OperatorExpr& e, const FockState& s) { return FockState::from(e * s.expr()); }

OperatorExpr inner_product(const FockState& bra, const FockState& ket) { return vev(bra.expr().adjoint() * ket.expr()); }

int norm_sign(const std::vector<LadderOperator>& word) {
  int sign = 1;
  for (const auto& o : word) {
    if (o.species() != Species::Gauge) continue;
    if (!o.gamma()->is_bound() || !o.big_gamma()->is_bound()) {
      throw std::invalid_argument("norm sign needs bound polarization labels");
    }
    sign *= eta_diag(o.gamma()->get()) * eta_diag(o.big_gamma()->get());
  }
  return sign;
}

FockState physical_filter(const FockState& s) {
  OperatorExpr kept;
  for (const auto& [t, c] : s.expr().terms()) {
    bool physical = true;
    for (const auto& o : t.factors) {
      if (o.species() != Species::Gauge) continue;
      if (!o.gamma()->is_bound()) throw std::invalid_argument("physical filter needs bound polarization labels");
      physical = physical && o.gamma()->get() != 0;
    }
    if (physical) kept.add(t, c);
  }
  return FockState::from(kept);
}

std::vector<KetEigenvalue> momentum_action(MomentumKind which, const FockState& s) {
  std::vector<KetEigenvalue> out;
  for (const auto& [t, c] : s.expr().terms()) {
    FormalFourVector total;
    for (const auto& o : t.factors) {
      if (!o.momentum().is_bound()) {
        throw std::invalid_argument("momentum eigenvalue needs bound labels, got " + to_string(o));
      }
      FormalFourVector q;
      if (which == MomentumKind::Inertial) {
        q = FormalFourVector::on_shell(o.momentum(), mass_tag(o.species()));
      } else if (o.inner().is_bound()) {
        q = FormalFourVector::from(o.inner().vec());
      } else {
        const auto& os = std::get<OnShell>(o.inner().value);
        q = FormalFourVector::on_shell(os.momentum, os.mass);
      }
      if (o.species() == Species::Gauge) q *= Rational(norm_sign({o}));
      total += q;
    }
    out.push_back({t, std::move(total)});
  }
  return out;
}

}  // namespace gravfock
