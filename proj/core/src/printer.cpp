#include "gravfock/operator_expr.h"

namespace gravfock {

namespace {

bool negative(const ComplexRational& c) {
  return (c.imag() == 0 && c.real() < 0) || (c.real() == 0 && c.imag() < 0);
}

std::string atom_power(const Atom& a, int p) {
  std::string s = to_string(a);
  if (p != 1) s += "^" + std::to_string(p);
  return s;
}

// Monomial with a non-negative leading coefficient.
std::string body(const Term& t, const ComplexRational& c) {
  std::vector<std::string> parts;
  const bool unit = c == ComplexRational(1);
  if (!unit || (t.atoms.empty() && t.factors.empty())) parts.push_back(to_string(c));
  for (const auto& [a, p] : t.atoms) parts.push_back(atom_power(a, p));
  for (const auto& o : t.factors) parts.push_back(to_string(o));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " * ";
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string to_string(const Term& t) { return body(t, ComplexRational(1)); }

std::string to_string(const OperatorExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.terms()) {
    const bool neg = negative(c);
    const ComplexRational mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += body(t, mag);
    first = false;
  }
  return out;
}

}  // namespace gravfock
