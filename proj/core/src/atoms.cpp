#include "gravfock/atoms.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace gravfock {

bool operator==(const LambdaAtom&, const LambdaAtom&) { return true; }
bool operator<(const LambdaAtom&, const LambdaAtom&) { return false; }
bool operator==(const TwoPiAtom&, const TwoPiAtom&) { return true; }
bool operator<(const TwoPiAtom&, const TwoPiAtom&) { return false; }
bool operator==(const VregAtom&, const VregAtom&) { return true; }
bool operator<(const VregAtom&, const VregAtom&) { return false; }
bool operator==(const Delta3Zero&, const Delta3Zero&) { return true; }
bool operator<(const Delta3Zero&, const Delta3Zero&) { return false; }
bool operator==(const Delta4Zero&, const Delta4Zero&) { return true; }
bool operator<(const Delta4Zero&, const Delta4Zero&) { return false; }

bool operator==(const OmegaAtom& a, const OmegaAtom& b) { return a.k == b.k && a.mass == b.mass; }
bool operator<(const OmegaAtom& a, const OmegaAtom& b) { return std::tie(a.mass, a.k) < std::tie(b.mass, b.k); }
bool operator==(const EnergyOverMassAtom& a, const EnergyOverMassAtom& b) { return a.k == b.k; }
bool operator<(const EnergyOverMassAtom& a, const EnergyOverMassAtom& b) { return a.k < b.k; }
bool operator==(const Delta3Atom& a, const Delta3Atom& b) { return a.p == b.p && a.q == b.q; }
bool operator<(const Delta3Atom& a, const Delta3Atom& b) { return std::tie(a.p, a.q) < std::tie(b.p, b.q); }
bool operator==(const Delta4Atom& a, const Delta4Atom& b) { return a.p == b.p && a.q == b.q; }
bool operator<(const Delta4Atom& a, const Delta4Atom& b) { return std::tie(a.p, a.q) < std::tie(b.p, b.q); }
bool operator==(const KroneckerAtom& a, const KroneckerAtom& b) { return a.s == b.s && a.t == b.t; }
bool operator<(const KroneckerAtom& a, const KroneckerAtom& b) { return std::tie(a.s, a.t) < std::tie(b.s, b.t); }
bool operator==(const MetricAtom& a, const MetricAtom& b) {
  return a.inner == b.inner && a.a == b.a && a.b == b.b;
}
bool operator<(const MetricAtom& a, const MetricAtom& b) {
  return std::tie(a.inner, a.a, a.b) < std::tie(b.inner, b.a, b.b);
}

Atom delta3(MomentumLabel p, MomentumLabel q) {
  if (q < p) std::swap(p, q);
  return Delta3Atom{std::move(p), std::move(q)};
}

Atom delta4(InnerLabel p, InnerLabel q) {
  if (q < p) std::swap(p, q);
  return Delta4Atom{std::move(p), std::move(q)};
}

Atom kronecker(Discrete s, Discrete t) {
  if (t < s) std::swap(s, t);
  return KroneckerAtom{std::move(s), std::move(t)};
}

Atom metric(Discrete a, Discrete b, bool inner) {
  if (b < a) std::swap(a, b);
  return MetricAtom{std::move(a), std::move(b), inner};
}

void multiply_into(AtomPowers& into, const Atom& atom, int power) {
  if (power == 0) return;
  auto [it, inserted] = into.try_emplace(atom, power);
  if (!inserted) {
    it->second += power;
    if (it->second == 0) into.erase(it);
  }
}

void multiply_into(AtomPowers& into, const AtomPowers& other) {
  for (const auto& [atom, power] : other) multiply_into(into, atom, power);
}

AtomPowers inverse(const AtomPowers& atoms) {
  AtomPowers out;
  for (const auto& [atom, power] : atoms) out.emplace(atom, -power);
  return out;
}

namespace {

int metric_value(int a, int b) { return a != b ? 0 : (a == 0 ? 1 : -1); }

Rational int_pow(const Rational& base, int exponent) {
  Rational out(1);
  const bool invert = exponent < 0;
  for (int i = 0; i < (invert ? -exponent : exponent); ++i) out *= base;
  return invert ? Rational(1 / out) : out;
}

// Classes of labels identified by delta atoms. The smallest label of a class is
// its representative (bound values order before symbols).
template <class T>
class LabelClasses {
 public:
  void add_edge(const T& a, const T& b, int count) {
    touch(a);
    touch(b);
    const T ra = find(a);
    const T rb = find(b);
    if (!(ra == rb)) {
      if (ra < rb) {
        parent_.insert_or_assign(rb, ra);
      } else {
        parent_.insert_or_assign(ra, rb);
      }
    }
    edges_.push_back({a, count});
  }

  T find(const T& a) const {
    T cur = a;
    for (auto it = parent_.find(cur); it != parent_.end(); it = parent_.find(cur)) cur = it->second;
    return cur;
  }

  bool empty() const { return members_.empty(); }

  // Star form: one delta(rep, x) per non-representative member, plus
  // (edges - (members - 1)) coincident-delta markers per class.
  struct Star {
    std::map<T, std::vector<T>> members;
    std::map<T, int> surplus;
  };
  Star star() const {
    Star s;
    for (const auto& m : members_) s.members[find(m)].push_back(m);
    for (const auto& [label, count] : edges_) s.surplus[find(label)] += count;
    for (auto& [rep, list] : s.members) s.surplus[rep] -= static_cast<int>(list.size()) - 1;
    return s;
  }

 private:
  void touch(const T& a) {
    if (std::find(members_.begin(), members_.end(), a) == members_.end()) members_.push_back(a);
  }

  std::map<T, T> parent_;
  std::vector<T> members_;
  std::vector<std::pair<T, int>> edges_;
};

bool concrete(const InnerLabel& l) {
  return l.is_bound() || (l.is_on_shell() && std::get<OnShell>(l.value).momentum.is_bound());
}

bool provably_distinct(const MomentumLabel& a, const MomentumLabel& b) {
  return a.is_bound() && b.is_bound() && !(a == b);
}

bool provably_distinct(const InnerLabel& a, const InnerLabel& b) {
  if (a.is_bound() && b.is_bound()) return !(a == b);
  if (a.is_on_shell() && b.is_on_shell() && concrete(a) && concrete(b)) {
    const auto& x = std::get<OnShell>(a.value);
    const auto& y = std::get<OnShell>(b.value);
    return x.mass == y.mass && !(x.momentum == y.momentum);
  }
  return false;
}

bool provably_distinct(const Discrete& a, const Discrete& b) { return a.is_bound() && b.is_bound() && !(a == b); }

template <class T>
bool class_has_conflict(const std::vector<T>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (provably_distinct(members[i], members[j])) return true;
  return false;
}

InnerLabel map_inner(const InnerLabel& l, const LabelClasses<MomentumLabel>& momenta) {
  if (!l.is_on_shell()) return l;
  const auto& os = std::get<OnShell>(l.value);
  return InnerLabel::on_shell(momenta.find(os.momentum), os.mass);
}

Discrete map_discrete(const Discrete& d, const LabelClasses<Discrete>& spins) { return spins.find(d); }

}  // namespace

bool canonicalize(AtomPowers& atoms, ComplexRational& scalar) {
  if (scalar.is_zero()) return false;

  LabelClasses<MomentumLabel> momenta;
  LabelClasses<Discrete> spins;
  std::vector<std::pair<Delta4Atom, int>> inner_edges;
  AtomPowers rest;

  for (const auto& [atom, power] : atoms) {
    if (power == 0) continue;
    if (const auto* d = std::get_if<Delta3Atom>(&atom)) {
      if (power < 0) throw std::domain_error("negative power of a delta function");
      momenta.add_edge(d->p, d->q, power);
    } else if (const auto* d4 = std::get_if<Delta4Atom>(&atom)) {
      if (power < 0) throw std::domain_error("negative power of a delta function");
      inner_edges.emplace_back(*d4, power);
    } else if (const auto* k = std::get_if<KroneckerAtom>(&atom)) {
      if (power < 0) throw std::domain_error("negative power of a Kronecker delta");
      spins.add_edge(k->s, k->t, 1);
    } else {
      multiply_into(rest, atom, power);
    }
  }

  AtomPowers result;
  Rational factor(1);

  const auto mstar = momenta.star();
  for (const auto& [rep, members] : mstar.members) {
    if (class_has_conflict(members)) return false;
    for (const auto& m : members)
      if (!(m == rep)) multiply_into(result, delta3(rep, m));
    multiply_into(result, Delta3Zero{}, mstar.surplus.at(rep));
  }

  LabelClasses<InnerLabel> inner;
  for (const auto& [d, power] : inner_edges) inner.add_edge(map_inner(d.p, momenta), map_inner(d.q, momenta), power);
  const auto istar = inner.star();
  for (const auto& [rep, members] : istar.members) {
    if (class_has_conflict(members)) return false;
    for (const auto& m : members)
      if (!(m == rep)) multiply_into(result, delta4(rep, m));
    multiply_into(result, Delta4Zero{}, istar.surplus.at(rep));
  }

  const auto sstar = spins.star();
  for (const auto& [rep, members] : sstar.members) {
    if (class_has_conflict(members)) return false;
    for (const auto& m : members)
      if (!(m == rep)) multiply_into(result, kronecker(rep, m));
  }

  AtomPowers metrics;
  for (const auto& [atom, power] : rest) {
    if (const auto* w = std::get_if<OmegaAtom>(&atom)) {
      multiply_into(result, OmegaAtom{momenta.find(w->k), w->mass}, power);
    } else if (const auto* e = std::get_if<EnergyOverMassAtom>(&atom)) {
      multiply_into(result, EnergyOverMassAtom{momenta.find(e->k)}, power);
    } else if (const auto* m = std::get_if<MetricAtom>(&atom)) {
      const Discrete a = map_discrete(m->a, spins);
      const Discrete b = map_discrete(m->b, spins);
      if (a.is_bound() && b.is_bound()) {
        const int v = metric_value(a.get(), b.get());
        if (v == 0) {
          if (power < 0) throw std::domain_error("division by a vanishing metric component");
          return false;
        }
        factor *= int_pow(Rational(v), power);
      } else {
        multiply_into(metrics, metric(a, b, m->inner), power);
      }
    } else {
      multiply_into(result, atom, power);
    }
  }

  // (eta^{gg})^2 = 1 for any single index value g.
  for (const auto& [atom, power] : metrics) {
    const auto& m = std::get<MetricAtom>(atom);
    if (m.a == m.b) {
      if (((power % 2) + 2) % 2) multiply_into(result, atom, 1);
    } else {
      multiply_into(result, atom, power);
    }
  }

  if (factor != 1) scalar *= ComplexRational(factor);
  atoms = std::move(result);
  return !scalar.is_zero();
}

std::string to_string(const Atom& atom) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, LambdaAtom>) {
          return "Lambda";
        } else if constexpr (std::is_same_v<T, TwoPiAtom>) {
          return "twopi";
        } else if constexpr (std::is_same_v<T, VregAtom>) {
          return "Vreg";
        } else if constexpr (std::is_same_v<T, OmegaAtom>) {
          return std::string(a.mass == MassTag::Gauge ? "omega_A(" : "omega(") + to_string(a.k) + ")";
        } else if constexpr (std::is_same_v<T, EnergyOverMassAtom>) {
          return "k0m(" + to_string(a.k) + ")";
        } else if constexpr (std::is_same_v<T, Delta3Atom>) {
          return "delta3(" + to_string(a.p) + "," + to_string(a.q) + ")";
        } else if constexpr (std::is_same_v<T, Delta4Atom>) {
          return "delta4(" + to_string(a.p) + "," + to_string(a.q) + ")";
        } else if constexpr (std::is_same_v<T, Delta3Zero>) {
          return "delta3(0)";
        } else if constexpr (std::is_same_v<T, Delta4Zero>) {
          return "delta4(0)";
        } else if constexpr (std::is_same_v<T, KroneckerAtom>) {
          return "kron(" + to_string(a.s) + "," + to_string(a.t) + ")";
        } else {
          return std::string(a.inner ? "etaI(" : "eta(") + to_string(a.a) + "," + to_string(a.b) + ")";
        }
      },
      atom);
}

}  // namespace gravfock
