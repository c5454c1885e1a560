#include "gravfock/lsz.h"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "gravfock/normal_order.h"

namespace gravfock {

namespace kin = kinematics;

Rational GreenFunction::mass(FieldKind k) const {
  for (const auto& f : fields)
    if (f.kind == k) return f.mass;
  throw std::invalid_argument(std::string("no field declared for ") + to_string(k) + " legs");
}

double LSZRecipe::constant(FieldKind k) const {
  switch (k) {
    case FieldKind::Scalar: return z;
    case FieldKind::Dirac: return z2;
    case FieldKind::Gauge: return z3;
  }
  return z;
}

void LSZRecipe::validate() const {
  for (double v : {z, z2, z3}) {
    if (!(v > 0.0 && v <= 1.0)) throw std::invalid_argument("wave-function constants must lie in (0, 1]");
  }
}

LadderOperator leg_creator(const Leg& leg) {
  const InnerLabel os = InnerLabel::on_shell(leg.momentum, mass_tag(leg.kind));
  switch (leg.kind) {
    case FieldKind::Scalar: return LadderOperator::scalar(leg.momentum, os, true);
    case FieldKind::Dirac:
      if (!leg.spin) throw std::invalid_argument("Dirac leg without spin has no spinor attachment");
      return LadderOperator::dirac(leg.antiparticle ? Species::DiracAntiparticle : Species::DiracParticle, leg.momentum,
                                   *leg.spin, os, true);
    case FieldKind::Gauge:
      if (!leg.polarization || !leg.inner_polarization) {
        throw std::invalid_argument("gauge leg needs polarizations g and G");
      }
      return LadderOperator::gauge(leg.momentum, *leg.polarization, os, *leg.inner_polarization, true);
  }
  throw std::logic_error("unknown field kind");
}

void validate_legs(const GreenFunction& g) {
  for (std::size_t i = 0; i < g.legs.size(); ++i) {
    const Leg& leg = g.legs[i];
    const std::string where = "leg " + std::to_string(i + 1) + ": ";
    const Rational m = g.mass(leg.kind);
    if (m < 0) throw std::invalid_argument(where + "negative mass");
    if (leg.kind != FieldKind::Scalar && !(m > 0)) throw std::invalid_argument(where + "field needs a positive mass");
    if (leg.kind != FieldKind::Dirac && leg.antiparticle) {
      throw std::invalid_argument(where + "only Dirac legs distinguish antiparticles");
    }
    if (leg.energy) {
      if (!leg.momentum.is_bound()) throw std::invalid_argument(where + "explicit energy needs a bound momentum");
      const auto& p = leg.momentum.vec();
      const Rational shell = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m;
      if (!(*leg.energy > 0) || *leg.energy * *leg.energy != shell) {
        throw std::invalid_argument(where + "off shell: E^2 = " + to_string(Rational(*leg.energy * *leg.energy)) +
                                    " but p^2 + m^2 = " + to_string(shell));
      }
    }
    if (leg.kind == FieldKind::Gauge && leg.polarization && leg.polarization->is_bound() &&
        leg.polarization->get() == 0) {
      throw std::invalid_argument(where + "asymptotic gauge quanta need gamma in 1..3");
    }
    try {
      (void)leg_creator(leg);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  for (const auto& v : g.vertices)
    for (std::size_t l : v.legs)
      if (l >= g.legs.size()) throw std::invalid_argument("vertex refers to unknown leg " + std::to_string(l + 1));
}

namespace {

bool same_species(const Leg& a, const Leg& b) { return a.kind == b.kind && a.antiparticle == b.antiparticle; }

int inversion_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

OperatorExpr state_word(const GreenFunction& g, bool incoming) {
  std::vector<LadderOperator> word;
  for (const auto& leg : g.legs)
    if (leg.incoming == incoming) word.push_back(leg_creator(leg));
  return OperatorExpr::word(std::move(word));
}

OperatorExpr divide(const OperatorExpr& e, const OperatorExpr& monomial) {
  if (monomial.size() != 1) throw std::invalid_argument("normalization is not a single monomial");
  const auto& [nt, nc] = *monomial.terms().begin();
  OperatorExpr out;
  for (const auto& [t, c] : e.terms()) {
    AtomPowers atoms = t.atoms;
    multiply_into(atoms, inverse(nt.atoms));
    out.add(t.factors, std::move(atoms), c / nc);
  }
  return out;
}

Eigen::Vector4cd row_as_vector(const Eigen::RowVector4cd& r) { return r.transpose(); }

}  // namespace

std::vector<Pairing> wick_pairings(const GreenFunction& g) {
  std::vector<std::size_t> ins, outs;
  for (std::size_t i = 0; i < g.legs.size(); ++i) (g.legs[i].incoming ? ins : outs).push_back(i);
  std::vector<Pairing> result;
  if (ins.size() != outs.size()) return result;

  std::vector<bool> used(ins.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> lines;
  std::function<void(std::size_t)> recurse = [&](std::size_t j) {
    if (j == outs.size()) {
      // Fermionic sign: order of the paired in-fermions along the out-fermion order.
      std::vector<std::size_t> perm;
      for (const auto& [in, out] : lines)
        if (g.legs[out].kind == FieldKind::Dirac) perm.push_back(in);
      result.push_back({lines, inversion_sign(perm)});
      return;
    }
    const Leg& out_leg = g.legs[outs[j]];
    for (std::size_t i = 0; i < ins.size(); ++i) {
      if (used[i] || !same_species(g.legs[ins[i]], out_leg)) continue;
      used[i] = true;
      lines.emplace_back(ins[i], outs[j]);
      recurse(j + 1);
      lines.pop_back();
      used[i] = false;
    }
  };
  recurse(0);
  return result;
}

OperatorExpr elastic_oracle(const GreenFunction& g, const RegularizationConfig& cfg) {
  OperatorExpr total;
  for (const auto& p : wick_pairings(g)) {
    OperatorExpr product = OperatorExpr::number(ComplexRational(p.sign));
    for (const auto& [in, out] : p.lines) {
      const Leg& a = g.legs[in];
      const Leg& b = g.legs[out];
      OperatorExpr f = OperatorExpr::atom(TwoPiAtom{}, 3) * OperatorExpr::atom(delta3(b.momentum, a.momentum));
      switch (a.kind) {
        case FieldKind::Scalar:
          f *= OperatorExpr::number(ComplexRational(2)) * OperatorExpr::atom(OmegaAtom{a.momentum, MassTag::Scalar});
          break;
        case FieldKind::Dirac:
          f *= OperatorExpr::atom(EnergyOverMassAtom{a.momentum}) * OperatorExpr::atom(kronecker(*b.spin, *a.spin));
          break;
        case FieldKind::Gauge:
          f *= OperatorExpr::number(ComplexRational(2) * ComplexRational(cfg.ratio())) *
               OperatorExpr::atom(OmegaAtom{a.momentum, MassTag::Gauge}) * OperatorExpr::atom(LambdaAtom{}, 2) *
               OperatorExpr::atom(metric(*b.polarization, *a.polarization, false)) *
               OperatorExpr::atom(metric(*b.inner_polarization, *a.inner_polarization, true));
          break;
      }
      product *= f;
    }
    total += product;
  }
  return total;
}

Amplitude lsz_reduce(const GreenFunction& g, const LSZRecipe& recipe, const RegularizationConfig& cfg) {
  recipe.validate();
  cfg.validate();
  validate_legs(g);

  Amplitude amp;
  const FockState in = FockState::from(state_word(g, true));
  const FockState out = FockState::from(state_word(g, false));
  amp.elastic = grav_limit_expr(inner_product(out, in), cfg);

  OperatorExpr norm = OperatorExpr::number(ComplexRational(1));
  for (const auto& leg : g.legs) {
    if (!leg.incoming) continue;
    const FockState one = FockState::from(OperatorExpr::op(leg_creator(leg)));
    norm *= grav_limit_expr(inner_product(one, one), cfg);
  }
  amp.normalized_elastic = divide(amp.elastic, norm);
  amp.lambda_power = lambda_power(amp.elastic);
  amp.pairings = wick_pairings(g);

  // Per-leg amputation: (i / sqrt Z) (k^2 - m^2) * i / (k^2 - m^2) = i * i / sqrt Z.
  std::vector<std::complex<double>> leg_factor(g.legs.size());
  for (std::size_t i = 0; i < g.legs.size(); ++i) {
    const Leg& leg = g.legs[i];
    const double z = recipe.constant(leg.kind);
    std::complex<double> f = std::complex<double>(0.0, 1.0) / std::sqrt(z) * std::complex<double>(0.0, 1.0);
    if (leg.kind == FieldKind::Dirac && !leg.antiparticle) f = -f;
    leg_factor[i] = f;
  }
  for (const auto& v : g.vertices) {
    if (v.factor.is_zero()) continue;
    amp.connected_is_zero = false;
    std::complex<double> term = v.factor.to_complex();
    for (std::size_t l : v.legs) term *= leg_factor[l];
    amp.connected += term;
  }

  for (std::size_t i = 0; i < g.legs.size(); ++i) {
    const Leg& leg = g.legs[i];
    LegAttachment a;
    a.leg = i;
    if (leg.kind == FieldKind::Scalar) {
      a.kind = "1";
    } else if (leg.kind == FieldKind::Dirac) {
      const bool bar = leg.incoming == leg.antiparticle;
      a.kind = std::string(leg.antiparticle ? "v" : "u") + (bar ? "bar" : "");
    } else {
      a.kind = "eps(x)E";
    }
    const bool numeric = leg.momentum.is_bound() && (!leg.spin || leg.spin->is_bound()) &&
                         (!leg.polarization || leg.polarization->is_bound()) &&
                         (!leg.inner_polarization || leg.inner_polarization->is_bound());
    if (numeric && leg.kind != FieldKind::Scalar) {
      const auto& p = leg.momentum.vec();
      const kin::MassShellMomentum k({to_double(p[0]), to_double(p[1]), to_double(p[2])}, to_double(g.mass(leg.kind)));
      if (leg.kind == FieldKind::Dirac) {
        const auto psi =
            kin::dirac_spinor(k, leg.spin->get(), leg.antiparticle ? kin::SpinorKind::V : kin::SpinorKind::U);
        a.spinor = (a.kind.size() > 1) ? row_as_vector(psi.bar()) : psi.components;
      } else {
        const auto eps = kin::build_spacetime_polarizations(k, k.mass());
        const auto big_e = kin::build_inner_polarizations(k.four_vector());
        const auto e1 = eps.eps[static_cast<std::size_t>(leg.polarization->get())];
        const auto e2 = kin::lower(big_e(leg.inner_polarization->get()));
        for (int r = 0; r < 4; ++r)
          for (int s = 0; s < 4; ++s) a.polarization(r, s) = e1[r] * e2[s];
      }
    }
    amp.attachments.push_back(a);
  }
  return amp;
}

}  // namespace gravfock
