#include "gravfock/labels.h"

#include <stdexcept>
#include <tuple>

namespace gravfock {

MassTag mass_tag(Species s) {
  switch (s) {
    case Species::Scalar: return MassTag::Scalar;
    case Species::DiracParticle:
    case Species::DiracAntiparticle: return MassTag::Dirac;
    case Species::Gauge: return MassTag::Gauge;
  }
  return MassTag::Scalar;
}

char species_head(Species s) {
  switch (s) {
    case Species::Scalar: return 'a';
    case Species::DiracParticle: return 'b';
    case Species::DiracAntiparticle: return 'd';
    case Species::Gauge: return 'A';
  }
  return '?';
}

bool is_fermionic(Species s) { return s == Species::DiracParticle || s == Species::DiracAntiparticle; }

bool operator==(const MomentumLabel& a, const MomentumLabel& b) { return a.value == b.value; }
bool operator<(const MomentumLabel& a, const MomentumLabel& b) { return a.value < b.value; }

bool operator==(const OnShell& a, const OnShell& b) { return a.momentum == b.momentum && a.mass == b.mass; }
bool operator<(const OnShell& a, const OnShell& b) {
  if (!(a.momentum == b.momentum)) return a.momentum < b.momentum;
  return a.mass < b.mass;
}

bool operator==(const InnerLabel& a, const InnerLabel& b) { return a.value == b.value; }
bool operator<(const InnerLabel& a, const InnerLabel& b) { return a.value < b.value; }

bool operator==(const Discrete& a, const Discrete& b) { return a.value == b.value; }
bool operator<(const Discrete& a, const Discrete& b) { return a.value < b.value; }

namespace {

template <std::size_t N>
std::string vec_string(const std::array<Rational, N>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string to_string(const MomentumLabel& k) {
  if (k.is_bound()) return vec_string(k.vec());
  return std::get<Symbol>(k.value).name;
}

std::string to_string(const InnerLabel& k) {
  if (k.is_bound()) return vec_string(k.vec());
  if (k.is_symbol()) return std::get<Symbol>(k.value).name;
  const auto& os = std::get<OnShell>(k.value);
  const char* head = os.mass == MassTag::Scalar ? "os" : (os.mass == MassTag::Dirac ? "osD" : "osA");
  return std::string(head) + "(" + to_string(os.momentum) + ")";
}

std::string to_string(const Discrete& d) {
  if (d.is_bound()) return std::to_string(d.get());
  return std::get<Symbol>(d.value).name;
}

LadderOperator LadderOperator::scalar(MomentumLabel k, InnerLabel big_k, bool dagger) {
  LadderOperator op;
  op.species_ = Species::Scalar;
  op.dagger_ = dagger;
  op.momentum_ = std::move(k);
  op.inner_ = std::move(big_k);
  op.validate();
  return op;
}

LadderOperator LadderOperator::dirac(Species s, MomentumLabel k, Discrete spin, InnerLabel big_k, bool dagger) {
  if (!is_fermionic(s)) throw std::invalid_argument("dirac operator requires species b or d");
  LadderOperator op;
  op.species_ = s;
  op.dagger_ = dagger;
  op.momentum_ = std::move(k);
  op.inner_ = std::move(big_k);
  op.spin_ = std::move(spin);
  op.validate();
  return op;
}

LadderOperator LadderOperator::gauge(MomentumLabel k, Discrete gamma, InnerLabel big_k, Discrete big_gamma,
                                     bool dagger) {
  LadderOperator op;
  op.species_ = Species::Gauge;
  op.dagger_ = dagger;
  op.momentum_ = std::move(k);
  op.inner_ = std::move(big_k);
  op.gamma_ = std::move(gamma);
  op.big_gamma_ = std::move(big_gamma);
  op.validate();
  return op;
}

void LadderOperator::validate() const {
  if (inner_.is_on_shell()) {
    const auto& os = std::get<OnShell>(inner_.value);
    if (!(os.momentum == momentum_) || os.mass != mass_tag(species_)) {
      throw std::invalid_argument("projected inner label must refer to the operator's own momentum");
    }
  } else if (momentum_.is_bound() != inner_.is_bound()) {
    throw std::invalid_argument("momentum and inner labels must be both bound or both symbolic");
  }
  if (is_fermionic(species_)) {
    if (!spin_) throw std::invalid_argument("Dirac operator requires a spin label");
    if (spin_->is_bound() && spin_->get() != 1 && spin_->get() != 2) {
      throw std::invalid_argument("spin must be 1 or 2");
    }
  } else if (spin_) {
    throw std::invalid_argument("spin label only allowed on Dirac operators");
  }
  if (species_ == Species::Gauge) {
    if (!gamma_ || !big_gamma_) throw std::invalid_argument("gauge operator requires gamma and Gamma labels");
    if (gamma_->is_bound() && (gamma_->get() < 0 || gamma_->get() > 3)) {
      throw std::invalid_argument("gamma must be in 0..3");
    }
    if (big_gamma_->is_bound() && (big_gamma_->get() < 1 || big_gamma_->get() > 3)) {
      throw std::invalid_argument("Gamma must be in 1..3 (Gamma = 0 is excluded by inner transversality)");
    }
  } else if (gamma_ || big_gamma_) {
    throw std::invalid_argument("polarization labels only allowed on gauge operators");
  }
}

LadderOperator LadderOperator::adjoint() const {
  LadderOperator op = *this;
  op.dagger_ = !dagger_;
  return op;
}

LadderOperator LadderOperator::with_inner(InnerLabel big_k) const {
  LadderOperator op = *this;
  op.inner_ = std::move(big_k);
  op.validate();
  return op;
}

LadderOperator LadderOperator::with_momentum(MomentumLabel k) const {
  LadderOperator op = *this;
  op.momentum_ = std::move(k);
  if (op.inner_.is_on_shell()) op.inner_ = InnerLabel::on_shell(op.momentum_, mass_tag(species_));
  op.validate();
  return op;
}

LadderOperator LadderOperator::with_labels(MomentumLabel k, InnerLabel big_k) const {
  LadderOperator op = *this;
  op.momentum_ = std::move(k);
  op.inner_ = std::move(big_k);
  op.validate();
  return op;
}

LadderOperator LadderOperator::with_spin(Discrete s) const {
  LadderOperator op = *this;
  op.spin_ = std::move(s);
  op.validate();
  return op;
}

LadderOperator LadderOperator::with_polarizations(Discrete gamma, Discrete big_gamma) const {
  LadderOperator op = *this;
  op.gamma_ = std::move(gamma);
  op.big_gamma_ = std::move(big_gamma);
  op.validate();
  return op;
}

LadderOperator LadderOperator::projected() const {
  LadderOperator op = *this;
  op.inner_ = InnerLabel::on_shell(momentum_, mass_tag(species_));
  return op;
}

bool operator==(const LadderOperator& a, const LadderOperator& b) {
  return std::tie(a.species_, a.dagger_, a.momentum_, a.inner_, a.spin_, a.gamma_, a.big_gamma_) ==
         std::tie(b.species_, b.dagger_, b.momentum_, b.inner_, b.spin_, b.gamma_, b.big_gamma_);
}

bool operator<(const LadderOperator& a, const LadderOperator& b) {
  // creators (dagger = true) first
  if (a.dagger_ != b.dagger_) return a.dagger_;
  return std::tie(a.species_, a.momentum_, a.inner_, a.spin_, a.gamma_, a.big_gamma_) <
         std::tie(b.species_, b.momentum_, b.inner_, b.spin_, b.gamma_, b.big_gamma_);
}

std::string to_string(const LadderOperator& op) {
  std::string out(1, species_head(op.species()));
  if (op.dagger()) out += "'";
  out += "(" + to_string(op.momentum());
  if (op.spin()) out += ",s=" + to_string(*op.spin());
  if (op.gamma()) out += ",g=" + to_string(*op.gamma());
  if (!op.barred()) out += ";" + to_string(op.inner());
  if (op.big_gamma()) out += ",G=" + to_string(*op.big_gamma());
  return out + ")";
}

}  // namespace gravfock
