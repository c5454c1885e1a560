#include "gravfock/propagator.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gravfock/normal_order.h"

namespace gravfock {

namespace kin = kinematics;

const char* to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Scalar: return "scalar";
    case FieldKind::Dirac: return "dirac";
    case FieldKind::Gauge: return "gauge";
  }
  return "?";
}

MassTag mass_tag(FieldKind k) {
  switch (k) {
    case FieldKind::Scalar: return MassTag::Scalar;
    case FieldKind::Dirac: return MassTag::Dirac;
    case FieldKind::Gauge: return MassTag::Gauge;
  }
  return MassTag::Scalar;
}

void PropagatorSpec::validate() const {
  if (!(mass >= 0.0)) throw std::invalid_argument("propagator mass must be >= 0");
  if (!(i_epsilon > 0.0)) throw std::invalid_argument("i_epsilon must be > 0");
  if (kind != FieldKind::Scalar && !(mass > 0.0)) {
    throw std::invalid_argument(std::string(to_string(kind)) + " propagator needs a positive mass");
  }
}

std::string PropagatorSpec::describe() const {
  switch (kind) {
    case FieldKind::Scalar: return "i Lambda^4 delta4(X-Y) * 1/(k^2 - m^2 + i eps)";
    case FieldKind::Dirac: return "i Lambda^4 delta4(X-Y) * (kslash + m)/(k^2 - m^2 + i eps)";
    case FieldKind::Gauge:
      return "i Lambda^2 Tdelta(X-Y) * -eta_{mu nu}/(k^2 - mu^2 + i eps) (x) Pi_{alpha beta}(K), "
             "Pi = -eta + K K/K^2";
  }
  return "";
}

OperatorExpr PropagatorSpec::expected_integrand(const MomentumLabel& k) const {
  OperatorExpr e = OperatorExpr::atom(LambdaAtom{}, lambda_power() + (kind == FieldKind::Gauge ? 4 : 0));
  e *= OperatorExpr::atom(TwoPiAtom{}, -4);  // inner delta
  e *= OperatorExpr::atom(TwoPiAtom{}, -3);  // d^3k / (2pi)^3
  if (kind == FieldKind::Dirac) {
    // 1 / (2 k0) = (k0/m)^-1 / (2m); the 1/(2m) goes with the numerator.
    e *= OperatorExpr::atom(EnergyOverMassAtom{k}, -1);
  } else {
    e *= OperatorExpr::atom(OmegaAtom{k, mass_tag(kind)}, -1);
    e *= OperatorExpr::number(ComplexRational(Rational(1, 2)));
  }
  return e;
}

kin::Matrix4d inner_projector(const kin::FourVector& big_k) {
  const double k2 = kin::minkowski_dot(big_k, big_k);
  if (k2 == 0.0) throw std::invalid_argument("inner projector is singular for K^2 = 0");
  const kin::FourVector kl = kin::lower(big_k);
  kin::Matrix4d p;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) p(a, b) = -kin::metric(a, b) + kl[a] * kl[b] / k2;
  return p;
}

PropagatorValue propagator_eval(const PropagatorSpec& spec, const kin::FourVector& k,
                                const std::optional<kin::FourVector>& big_k) {
  spec.validate();
  PropagatorValue v;
  v.kind = spec.kind;
  const double k2 = kin::minkowski_dot(k, k);
  v.pole = 1.0 / std::complex<double>(k2 - spec.mass * spec.mass, spec.i_epsilon);
  v.dirac = kin::Matrix4cd::Zero();
  v.spacetime = kin::Matrix4cd::Zero();
  v.inner = kin::Matrix4d::Zero();
  if (spec.kind == FieldKind::Dirac) {
    v.dirac = (kin::GammaAlgebra::instance().slash(k) + spec.mass * kin::Matrix4cd::Identity()) * v.pole;
  } else if (spec.kind == FieldKind::Gauge) {
    if (!big_k) throw std::invalid_argument("gauge propagator needs an inner momentum K");
    v.inner = inner_projector(*big_k);
    for (int m = 0; m < 4; ++m) v.spacetime(m, m) = -kin::metric(m, m) * v.pole;
  }
  return v;
}

PoleForm kernel_form(const PropagatorSpec& spec) {
  switch (spec.kind) {
    case FieldKind::Scalar: return {1, "1"};
    case FieldKind::Dirac: return {1, "kslash + m"};
    case FieldKind::Gauge: return {1, "-eta (x) Pi"};
  }
  return {1, "1"};
}

PoleForm amputate(const PoleForm& f) {
  if (f.pole_order < 1) throw std::invalid_argument("no pole left to amputate");
  return {f.pole_order - 1, f.numerator};
}

OperatorExpr ModeExpansion::measure(const MomentumLabel& k) const {
  OperatorExpr e = OperatorExpr::atom(TwoPiAtom{}, -7);
  e *= OperatorExpr::atom(LambdaAtom{}, 4);
  if (kind == FieldKind::Dirac) {
    e *= OperatorExpr::atom(EnergyOverMassAtom{k}, -1);
  } else {
    e *= OperatorExpr::atom(OmegaAtom{k, mass_tag(kind)}, -1);
    e *= OperatorExpr::number(ComplexRational(Rational(1, 2)));
  }
  return e;
}

std::string ModeExpansion::describe() const {
  switch (kind) {
    case FieldKind::Scalar: return "phi = int d3k/((2pi)^3 2w) d4K/(2pi)^4 Lambda^4 [a e^{-ikx-iKX} + h.c.]";
    case FieldKind::Dirac:
      return "psi = sum_s int d3k/(2pi)^3 m/k0 d4K/(2pi)^4 Lambda^4 [b u e^{-ikx-iKX} + d^dagger v e^{ikx+iKX}]";
    case FieldKind::Gauge:
      return "A = sum_{g,G} int d3k/((2pi)^3 2w) d4K/(2pi)^4 Lambda^4 eps(k,g) E(K,G) [a e^{-ikx-iKX} + h.c.]";
  }
  return "";
}

namespace {

MomentumLabel sym(const char* n) { return MomentumLabel::symbol(n); }
InnerLabel isym(const char* n) { return InnerLabel::symbol(n); }
Discrete dsym(const char* n) { return Discrete::symbol(n); }

struct Pair {
  LadderOperator first;   // field at (x, X): annihilator part
  LadderOperator second;  // field at (y, Y): creator part
};

Pair make_pair_for(FieldKind kind, Species dirac_species = Species::DiracParticle) {
  switch (kind) {
    case FieldKind::Scalar:
      return {LadderOperator::scalar(sym("k"), isym("K")), LadderOperator::scalar(sym("h"), isym("H"), true)};
    case FieldKind::Dirac:
      return {LadderOperator::dirac(dirac_species, sym("k"), dsym("s"), isym("K")),
              LadderOperator::dirac(dirac_species, sym("h"), dsym("t"), isym("H"), true)};
    case FieldKind::Gauge:
      return {LadderOperator::gauge(sym("k"), dsym("g"), isym("K"), dsym("G")),
              LadderOperator::gauge(sym("h"), dsym("g2"), isym("H"), dsym("G2"), true)};
  }
  throw std::logic_error("unknown field kind");
}

// Coefficient of the contact term for fixed spin / polarization labels, after
// the sifting integrals over (h, H). Returns nullopt when the remaining atoms
// differ from `expected_atoms`.
std::optional<Rational> label_weight(const OperatorExpr& integrand, const Bindings& b, const AtomPowers& expected_atoms) {
  const ResolveResult r = delta_resolve(integrand, b, {"h", "H"});
  if (!r.ok()) return std::nullopt;
  if (r.value.is_zero()) return Rational(0);
  if (r.value.size() != 1) return std::nullopt;
  const auto& [t, c] = *r.value.terms().begin();
  if (!t.factors.empty() || t.atoms != expected_atoms || !c.is_real()) return std::nullopt;
  return c.real();
}

}  // namespace

WickCheck wick_two_point(FieldKind kind, const FieldMasses& masses, double tol, const kin::ThreeVector& sample_k,
                         const kin::FourVector& sample_big_k) {
  WickCheck out;
  out.kind = kind;
  std::ostringstream detail;

  const double mass = masses.of(mass_tag(kind));
  PropagatorSpec spec{kind, mass, 1e-8};
  spec.validate();
  const ModeExpansion mode{kind};
  const Pair p = make_pair_for(kind);

  const OperatorExpr first = OperatorExpr::op(p.first);
  const OperatorExpr second = OperatorExpr::op(p.second);
  const OperatorExpr first_dag = OperatorExpr::op(p.first.adjoint());
  const OperatorExpr second_dag = OperatorExpr::op(p.second.adjoint());

  // Only the annihilator-at-x / creator-at-y product survives between vacua.
  out.other_orderings_vanish =
      vev(first * second_dag).is_zero() && vev(first_dag * second).is_zero() && vev(first_dag * second_dag).is_zero();

  const OperatorExpr contact = vev(first * second);
  const OperatorExpr integrand = mode.measure(p.second.momentum()) * contact;

  std::set<std::string> integrated{"h", "H"};
  if (kind == FieldKind::Dirac) integrated.insert("t");
  const ResolveResult sifted = delta_resolve(integrand, Bindings{}, integrated);
  const OperatorExpr lhs = mode.measure(p.first.momentum()) * sifted.value;

  OperatorExpr rhs = spec.expected_integrand(p.first.momentum());
  if (kind == FieldKind::Gauge) {
    rhs *= OperatorExpr::atom(metric(dsym("g"), dsym("g2"), false));
    rhs *= OperatorExpr::atom(metric(dsym("G"), dsym("G2"), true));
  }
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  out.structural = sifted.ok() && lhs == rhs;
  if (!sifted.ok()) {
    for (const auto& i : sifted.issues) detail << i << "; ";
  }

  // Numerator: spin / polarization sums weighted by the algebra's coefficients.
  const kin::MassShellMomentum k(sample_k, mass);
  const kin::FourVector kv = k.four_vector();
  const PropagatorValue value = propagator_eval(spec, kv, sample_big_k);
  double residual = 0.0;
  bool weights_ok = true;

  if (kind == FieldKind::Scalar) {
    residual = std::abs(value.pole * (kin::minkowski_dot(kv, kv) - mass * mass + std::complex<double>(0, spec.i_epsilon)) - 1.0);
  } else if (kind == FieldKind::Dirac) {
    for (Species sp : {Species::DiracParticle, Species::DiracAntiparticle}) {
      const Pair q = make_pair_for(kind, sp);
      const OperatorExpr c = mode.measure(q.second.momentum()) * vev(OperatorExpr::op(q.first) * OperatorExpr::op(q.second));
      const auto kind_uv = sp == Species::DiracParticle ? kin::SpinorKind::U : kin::SpinorKind::V;
      kin::Matrix4cd sum = kin::Matrix4cd::Zero();
      for (int s = 1; s <= 2; ++s) {
        for (int t = 1; t <= 2; ++t) {
          Bindings b;
          b.discrete.emplace("s", Discrete::bound(s));
          b.discrete.emplace("t", Discrete::bound(t));
          const auto w = label_weight(c, b, {});
          if (!w) {
            weights_ok = false;
            continue;
          }
          if (*w == 0) continue;
          const auto psi = kin::dirac_spinor(k, s, kind_uv);
          const auto chi = kin::dirac_spinor(k, t, kind_uv);
          sum += to_double(*w) * psi.components * chi.bar();
        }
      }
      const double sign = sp == Species::DiracParticle ? 1.0 : -1.0;
      const kin::Matrix4cd numerator =
          kin::GammaAlgebra::instance().slash(kv) + sign * mass * kin::Matrix4cd::Identity();
      residual = std::max(residual, (2.0 * mass * sum - numerator).cwiseAbs().maxCoeff());
    }
    const kin::Matrix4cd kernel_numerator = value.dirac / value.pole;
    residual = std::max(residual, (kernel_numerator - (kin::GammaAlgebra::instance().slash(kv) +
                                                       mass * kin::Matrix4cd::Identity()))
                                      .cwiseAbs()
                                      .maxCoeff());
  } else {
    const auto eps = kin::build_spacetime_polarizations(k, mass);
    const auto big_e = kin::build_inner_polarizations(sample_big_k);
    AtomPowers lambda2;
    multiply_into(lambda2, LambdaAtom{}, 2);
    double tensor[4][4][4][4] = {};
    for (int g = 0; g < 4; ++g) {
      for (int g2 = 0; g2 < 4; ++g2) {
        for (int G = 1; G <= 3; ++G) {
          for (int G2 = 1; G2 <= 3; ++G2) {
            Bindings b;
            b.discrete.emplace("g", Discrete::bound(g));
            b.discrete.emplace("g2", Discrete::bound(g2));
            b.discrete.emplace("G", Discrete::bound(G));
            b.discrete.emplace("G2", Discrete::bound(G2));
            const auto w = label_weight(integrand, b, lambda2);
            if (!w) {
              weights_ok = false;
              continue;
            }
            if (*w == 0) continue;
            const auto e1 = kin::lower(eps.eps[static_cast<std::size_t>(g)]);
            const auto e2 = kin::lower(eps.eps[static_cast<std::size_t>(g2)]);
            const auto f1 = kin::lower(big_e(G));
            const auto f2 = kin::lower(big_e(G2));
            for (int mu = 0; mu < 4; ++mu)
              for (int nu = 0; nu < 4; ++nu)
                for (int a = 0; a < 4; ++a)
                  for (int bb = 0; bb < 4; ++bb) tensor[mu][nu][a][bb] += to_double(*w) * e1[mu] * e2[nu] * f1[a] * f2[bb];
          }
        }
      }
    }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int a = 0; a < 4; ++a)
          for (int bb = 0; bb < 4; ++bb) {
            const std::complex<double> kernel = value.gauge(mu, nu, a, bb) / value.pole;
            residual = std::max(residual, std::abs(tensor[mu][nu][a][bb] - kernel));
          }
  }

  out.numerator_residual = residual;
  if (!weights_ok) detail << "label weights did not reduce to numbers; ";
  if (!out.other_orderings_vanish) detail << "a vanishing operator ordering has a vacuum expectation value; ";
  if (!out.structural) detail << "integrand mismatch; ";
  if (residual > tol) detail << "numerator residual " << residual << " exceeds tolerance; ";
  out.passed = out.structural && out.other_orderings_vanish && weights_ok && residual <= tol;
  out.detail = out.passed ? "prefactor, inner delta and kernel numerator match" : detail.str();
  return out;
}

}  // namespace gravfock
