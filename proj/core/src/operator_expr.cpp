#include "gravfock/operator_expr.h"

#include <optional>
#include <stdexcept>
#include <tuple>

namespace gravfock {

bool operator==(const Term& a, const Term& b) { return a.factors == b.factors && a.atoms == b.atoms; }

bool operator<(const Term& a, const Term& b) {
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
  return std::tie(a.factors, a.atoms) < std::tie(b.factors, b.atoms);
}

OperatorExpr OperatorExpr::number(const ComplexRational& c) {
  OperatorExpr e;
  e.add({}, {}, c);
  return e;
}

OperatorExpr OperatorExpr::op(const LadderOperator& o) {
  OperatorExpr e;
  e.add({o}, {}, ComplexRational(1));
  return e;
}

OperatorExpr OperatorExpr::atom(const Atom& a, int power) {
  OperatorExpr e;
  AtomPowers atoms;
  multiply_into(atoms, a, power);
  e.add({}, std::move(atoms), ComplexRational(1));
  return e;
}

OperatorExpr OperatorExpr::word(std::vector<LadderOperator> factors) {
  OperatorExpr e;
  e.add(std::move(factors), {}, ComplexRational(1));
  return e;
}

void OperatorExpr::add(std::vector<LadderOperator> factors, AtomPowers atoms, ComplexRational c) {
  if (!canonicalize(atoms, c)) return;
  Term t{std::move(factors), std::move(atoms)};
  auto [it, inserted] = terms_.try_emplace(std::move(t), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool OperatorExpr::is_scalar() const {
  for (const auto& [t, c] : terms_)
    if (!t.factors.empty()) return false;
  return true;
}

std::size_t OperatorExpr::max_length() const {
  std::size_t n = 0;
  for (const auto& [t, c] : terms_) n = std::max(n, t.factors.size());
  return n;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const OperatorExpr& o) {
  OperatorExpr out;
  for (const auto& [ta, ca] : terms_) {
    for (const auto& [tb, cb] : o.terms_) {
      std::vector<LadderOperator> f = ta.factors;
      f.insert(f.end(), tb.factors.begin(), tb.factors.end());
      AtomPowers a = ta.atoms;
      multiply_into(a, tb.atoms);
      out.add(std::move(f), std::move(a), ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const ComplexRational& c) {
  OperatorExpr out = a;
  return out *= c;
}

OperatorExpr OperatorExpr::adjoint() const {
  OperatorExpr out;
  for (const auto& [t, c] : terms_) {
    std::vector<LadderOperator> f;
    f.reserve(t.factors.size());
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) f.push_back(it->adjoint());
    out.add(std::move(f), t.atoms, c.conj());
  }
  return out;
}

MomentumLabel substitute(const MomentumLabel& l, const std::map<std::string, MomentumLabel>& m) {
  if (const auto* s = std::get_if<Symbol>(&l.value)) {
    if (auto it = m.find(s->name); it != m.end()) return it->second;
  }
  return l;
}

InnerLabel substitute(const InnerLabel& l, const Bindings& b) {
  if (const auto* s = std::get_if<Symbol>(&l.value)) {
    if (auto it = b.inner.find(s->name); it != b.inner.end()) return it->second;
    return l;
  }
  if (const auto* os = std::get_if<OnShell>(&l.value)) {
    return InnerLabel::on_shell(substitute(os->momentum, b.momenta), os->mass);
  }
  return l;
}

Discrete substitute(const Discrete& d, const std::map<std::string, Discrete>& m) {
  if (const auto* s = std::get_if<Symbol>(&d.value)) {
    if (auto it = m.find(s->name); it != m.end()) return it->second;
  }
  return d;
}

LadderOperator substitute(const LadderOperator& o, const Bindings& b) {
  LadderOperator out = o.with_labels(substitute(o.momentum(), b.momenta), substitute(o.inner(), b));
  if (o.spin()) out = out.with_spin(substitute(*o.spin(), b.discrete));
  if (o.gamma()) {
    out = out.with_polarizations(substitute(*o.gamma(), b.discrete), substitute(*o.big_gamma(), b.discrete));
  }
  return out;
}

Atom substitute(const Atom& a, const Bindings& b) {
  return std::visit(
      [&](const auto& x) -> Atom {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OmegaAtom>) {
          return OmegaAtom{substitute(x.k, b.momenta), x.mass};
        } else if constexpr (std::is_same_v<T, EnergyOverMassAtom>) {
          return EnergyOverMassAtom{substitute(x.k, b.momenta)};
        } else if constexpr (std::is_same_v<T, Delta3Atom>) {
          return delta3(substitute(x.p, b.momenta), substitute(x.q, b.momenta));
        } else if constexpr (std::is_same_v<T, Delta4Atom>) {
          return delta4(substitute(x.p, b), substitute(x.q, b));
        } else if constexpr (std::is_same_v<T, KroneckerAtom>) {
          return kronecker(substitute(x.s, b.discrete), substitute(x.t, b.discrete));
        } else if constexpr (std::is_same_v<T, MetricAtom>) {
          return metric(substitute(x.a, b.discrete), substitute(x.b, b.discrete), x.inner);
        } else {
          return x;
        }
      },
      a);
}

namespace {

bool mentions(const MomentumLabel& l, const std::string& name) {
  const auto* s = std::get_if<Symbol>(&l.value);
  return s && s->name == name;
}

bool mentions(const InnerLabel& l, const std::string& name) {
  if (const auto* s = std::get_if<Symbol>(&l.value)) return s->name == name;
  if (const auto* os = std::get_if<OnShell>(&l.value)) return mentions(os->momentum, name);
  return false;
}

bool mentions(const Discrete& d, const std::string& name) {
  const auto* s = std::get_if<Symbol>(&d.value);
  return s && s->name == name;
}

bool mentions(const Term& t, const std::string& name) {
  for (const auto& o : t.factors) {
    if (mentions(o.momentum(), name) || mentions(o.inner(), name)) return true;
    if (o.spin() && mentions(*o.spin(), name)) return true;
    if (o.gamma() && (mentions(*o.gamma(), name) || mentions(*o.big_gamma(), name))) return true;
  }
  for (const auto& [a, p] : t.atoms) {
    const bool hit = std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, OmegaAtom> || std::is_same_v<T, EnergyOverMassAtom>) {
            return mentions(x.k, name);
          } else if constexpr (std::is_same_v<T, Delta3Atom> || std::is_same_v<T, Delta4Atom>) {
            return mentions(x.p, name) || mentions(x.q, name);
          } else if constexpr (std::is_same_v<T, KroneckerAtom>) {
            return mentions(x.s, name) || mentions(x.t, name);
          } else if constexpr (std::is_same_v<T, MetricAtom>) {
            return mentions(x.a, name) || mentions(x.b, name);
          } else {
            return false;
          }
        },
        a);
    if (hit) return true;
  }
  return false;
}

// Finds a delta atom that has `name` as one argument; fills the substitution
// replacing the symbol by the other argument.
bool find_sifting_delta(const Term& t, const std::string& name, Atom& consumed, Bindings& sub) {
  for (const auto& [a, p] : t.atoms) {
    if (const auto* d = std::get_if<Delta3Atom>(&a)) {
      if (mentions(d->p, name) || mentions(d->q, name)) {
        consumed = a;
        sub.momenta.emplace(name, mentions(d->p, name) ? d->q : d->p);
        return true;
      }
    } else if (const auto* d4 = std::get_if<Delta4Atom>(&a)) {
      const bool lp = d4->p.is_symbol() && mentions(d4->p, name);
      const bool lq = d4->q.is_symbol() && mentions(d4->q, name);
      if (lp || lq) {
        consumed = a;
        sub.inner.emplace(name, lp ? d4->q : d4->p);
        return true;
      }
    } else if (const auto* k = std::get_if<KroneckerAtom>(&a)) {
      if (mentions(k->s, name) || mentions(k->t, name)) {
        consumed = a;
        sub.discrete.emplace(name, mentions(k->s, name) ? k->t : k->s);
        return true;
      }
    }
  }
  return false;
}

std::optional<Term> substitute_term(const Term& t, const Bindings& b, std::vector<std::string>& issues) {
  Term out;
  try {
    for (const auto& o : t.factors) out.factors.push_back(substitute(o, b));
  } catch (const std::invalid_argument& e) {
    issues.emplace_back(std::string("inconsistent binding: ") + e.what());
    return std::nullopt;
  }
  for (const auto& [a, p] : t.atoms) multiply_into(out.atoms, substitute(a, b), p);
  return out;
}

}  // namespace

ResolveResult delta_resolve(const OperatorExpr& e, const Bindings& bindings, const std::set<std::string>& integrated) {
  ResolveResult r;

  for (const auto& [name, v] : bindings.discrete) {
    if (bindings.momenta.count(name) || bindings.inner.count(name)) {
      r.issues.push_back("symbol '" + name + "' bound with two different label kinds");
    }
  }
  for (const auto& [name, v] : bindings.momenta) {
    if (bindings.inner.count(name)) r.issues.push_back("symbol '" + name + "' bound with two different label kinds");
  }
  if (!r.ok()) return r;

  OperatorExpr bound;
  for (const auto& [t, c] : e.terms()) {
    auto sub = substitute_term(t, bindings, r.issues);
    if (sub) bound.add(sub->factors, sub->atoms, c);
  }

  OperatorExpr current = std::move(bound);
  for (const auto& name : integrated) {
    OperatorExpr next;
    for (const auto& [t, c] : current.terms()) {
      if (!mentions(t, name)) {
        r.issues.push_back("integrand independent of '" + name + "'");
        next.add(t, c);
        continue;
      }
      Atom consumed;
      Bindings sub;
      if (!find_sifting_delta(t, name, consumed, sub)) {
        r.issues.push_back("no delta function to integrate over '" + name + "'");
        next.add(t, c);
        continue;
      }
      Term reduced = t;
      multiply_into(reduced.atoms, consumed, -1);
      auto s = substitute_term(reduced, sub, r.issues);
      if (s) next.add(s->factors, s->atoms, c);
    }
    current = std::move(next);
  }
  r.value = std::move(current);
  return r;
}

}  // namespace gravfock
