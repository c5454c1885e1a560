#include "gravfock/normal_order.h"

#include <utility>

namespace gravfock {

namespace {

bool same_field(const LadderOperator& x, const LadderOperator& y) { return x.species() == y.species(); }

struct Monomial {
  std::vector<LadderOperator> factors;
  AtomPowers atoms;
  ComplexRational coeff;
};

// Bubble-sorts one monomial into canonical order. Contact terms produced along
// the way are pushed onto `pending` when `keep_contacts` is set.
void sort_monomial(Monomial m, bool keep_contacts, std::vector<Monomial>& pending, OperatorExpr& out) {
  auto& f = m.factors;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const LadderOperator& x = f[i];
      const LadderOperator& y = f[i + 1];
      if (x == y && x.fermionic()) return;
      if (!(y < x)) continue;

      if (keep_contacts && !x.creator() && y.creator() && same_field(x, y)) {
        const OperatorExpr c = contact_term(x, y);
        for (const auto& [t, v] : c.terms()) {
          Monomial contact;
          contact.factors.assign(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i));
          contact.factors.insert(contact.factors.end(), f.begin() + static_cast<std::ptrdiff_t>(i + 2), f.end());
          contact.atoms = m.atoms;
          multiply_into(contact.atoms, t.atoms);
          contact.coeff = m.coeff * v;
          pending.push_back(std::move(contact));
        }
      }
      if (x.fermionic() && y.fermionic()) m.coeff = -m.coeff;
      std::swap(f[i], f[i + 1]);
      swapped = true;
    }
  }
  out.add(std::move(m.factors), std::move(m.atoms), std::move(m.coeff));
}

OperatorExpr reorder(const OperatorExpr& e, bool keep_contacts) {
  std::vector<Monomial> pending;
  for (const auto& [t, c] : e.terms()) pending.push_back({t.factors, t.atoms, c});
  OperatorExpr out;
  while (!pending.empty()) {
    Monomial m = std::move(pending.back());
    pending.pop_back();
    sort_monomial(std::move(m), keep_contacts, pending, out);
  }
  return out;
}

}  // namespace

OperatorExpr contact_term(const LadderOperator& x, const LadderOperator& y) {
  OperatorExpr out;
  if (!same_field(x, y) || x.creator() || !y.creator()) return out;

  AtomPowers atoms;
  ComplexRational c(1);
  multiply_into(atoms, TwoPiAtom{}, 7);
  multiply_into(atoms, delta4(x.inner(), y.inner()));
  multiply_into(atoms, delta3(x.momentum(), y.momentum()));
  switch (x.species()) {
    case Species::Scalar:
      c = ComplexRational(2);
      multiply_into(atoms, OmegaAtom{x.momentum(), MassTag::Scalar});
      multiply_into(atoms, LambdaAtom{}, -4);
      break;
    case Species::DiracParticle:
    case Species::DiracAntiparticle:
      multiply_into(atoms, EnergyOverMassAtom{x.momentum()});
      multiply_into(atoms, kronecker(*x.spin(), *y.spin()));
      multiply_into(atoms, LambdaAtom{}, -4);
      break;
    case Species::Gauge:
      c = ComplexRational(2);
      multiply_into(atoms, OmegaAtom{x.momentum(), MassTag::Gauge});
      multiply_into(atoms, metric(*x.gamma(), *y.gamma(), false));
      multiply_into(atoms, metric(*x.big_gamma(), *y.big_gamma(), true));
      multiply_into(atoms, LambdaAtom{}, -2);
      break;
  }
  out.add({}, std::move(atoms), c);
  return out;
}

OperatorExpr reduce_to_normal_form(const OperatorExpr& e) { return reorder(e, true); }

OperatorExpr normal_order(const OperatorExpr& e) { return reorder(e, false); }

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
  return reduce_to_normal_form(a * b - b * a);
}

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
  return reduce_to_normal_form(a * b + b * a);
}

OperatorExpr vev(const OperatorExpr& e) {
  OperatorExpr out;
  const OperatorExpr reduced = reduce_to_normal_form(e);
  for (const auto& [t, c] : reduced.terms())
    if (t.factors.empty()) out.add(t, c);
  return out;
}

bool is_even(const std::vector<LadderOperator>& word) {
  std::size_t n = 0;
  for (const auto& o : word) n += o.fermionic() ? 1 : 0;
  return n % 2 == 0;
}

}  // namespace gravfock
