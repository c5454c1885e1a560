#include "gravfock/gravlimit.h"

#include <stdexcept>

namespace gravfock {

Rational RegularizationConfig::ratio() const { return v_reg / (lambda * lambda * lambda * lambda); }

void RegularizationConfig::validate() const {
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be > 0");
  if (!(v_reg > 0)) throw std::invalid_argument("v_reg must be > 0");
}

RegularizationConfig RegularizationConfig::with_ratio(const Rational& lambda, const Rational& ratio) {
  RegularizationConfig cfg;
  cfg.lambda = lambda;
  cfg.v_reg = ratio * lambda * lambda * lambda * lambda;
  cfg.validate();
  return cfg;
}

namespace {

Rational rational_pow(const Rational& base, int n) {
  Rational out(1);
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out *= base;
  return n < 0 ? Rational(1 / out) : out;
}

void associate(std::map<InnerLabel, InnerLabel>& assoc, const LadderOperator& o) {
  if (o.barred()) return;
  const InnerLabel target = InnerLabel::on_shell(o.momentum(), mass_tag(o.species()));
  auto [it, inserted] = assoc.try_emplace(o.inner(), target);
  if (!inserted && !(it->second == target)) {
    throw std::invalid_argument("inner label " + to_string(o.inner()) + " is carried by operators with different momenta");
  }
}

InnerLabel project_label(const InnerLabel& l, const std::map<InnerLabel, InnerLabel>& assoc) {
  if (l.is_on_shell()) return l;
  auto it = assoc.find(l);
  if (it == assoc.end()) {
    throw std::invalid_argument("inner label " + to_string(l) + " has no associated momentum in the limit");
  }
  return it->second;
}

}  // namespace

OperatorExpr grav_limit_expr(const OperatorExpr& e, const RegularizationConfig& cfg,
                             const std::map<InnerLabel, InnerLabel>& associations) {
  cfg.validate();
  std::map<InnerLabel, InnerLabel> assoc;
  for (const auto& [t, c] : e.terms())
    for (const auto& o : t.factors) associate(assoc, o);
  for (const auto& [k, v] : associations) {
    if (!v.is_on_shell()) throw std::invalid_argument("association target must be an on-shell label");
    auto [it, inserted] = assoc.try_emplace(k, v);
    if (!inserted && !(it->second == v)) {
      throw std::invalid_argument("conflicting association for inner label " + to_string(k));
    }
  }

  const OperatorExpr projected = e.transform([](const LadderOperator& o) { return o.projected(); },
                                             [&](const Atom& a) -> Atom {
                                               if (const auto* d = std::get_if<Delta4Atom>(&a)) {
                                                 return delta4(project_label(d->p, assoc), project_label(d->q, assoc));
                                               }
                                               return a;
                                             });

  const Rational ratio = cfg.ratio();
  OperatorExpr out;
  for (const auto& [t, c] : projected.terms()) {
    AtomPowers atoms;
    ComplexRational coeff = c;
    int vreg = 0;
    for (const auto& [a, p] : t.atoms) {
      if (std::holds_alternative<Delta4Atom>(a)) {
        throw std::invalid_argument("inner delta " + to_string(a) +
                                    " does not collapse; link the momenta by a delta3 or bind them");
      }
      if (std::holds_alternative<Delta4Zero>(a)) {
        vreg += p;
        multiply_into(atoms, TwoPiAtom{}, -4 * p);
      } else if (std::holds_alternative<VregAtom>(a)) {
        vreg += p;
      } else {
        multiply_into(atoms, a, p);
      }
    }
    if (vreg != 0) {
      coeff *= ComplexRational(rational_pow(ratio, vreg));
      multiply_into(atoms, LambdaAtom{}, 4 * vreg);
    }
    out.add(t.factors, std::move(atoms), coeff);
  }
  return out;
}

FockState project_state(const FockState& s) {
  return FockState::from(s.expr().transform([](const LadderOperator& o) { return o.projected(); },
                                            [](const Atom& a) { return a; }));
}

OperatorExpr evaluate_lambda(const OperatorExpr& e, const Rational& lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be > 0");
  OperatorExpr out;
  for (const auto& [t, c] : e.terms()) {
    AtomPowers atoms = t.atoms;
    ComplexRational coeff = c;
    if (auto it = atoms.find(Atom{LambdaAtom{}}); it != atoms.end()) {
      coeff *= ComplexRational(rational_pow(lambda, it->second));
      atoms.erase(it);
    }
    out.add(t.factors, std::move(atoms), coeff);
  }
  return out;
}

std::optional<int> lambda_power(const OperatorExpr& e) {
  std::optional<int> power;
  for (const auto& [t, c] : e.terms()) {
    auto it = t.atoms.find(Atom{LambdaAtom{}});
    const int p = it == t.atoms.end() ? 0 : it->second;
    if (power && *power != p) return std::nullopt;
    power = p;
  }
  return power ? power : std::optional<int>(0);
}

}  // namespace gravfock
