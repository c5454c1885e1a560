#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gravfock/atoms.h"
#include "gravfock/labels.h"

namespace gravfock {

/// One monomial without its numeric coefficient: an ordered operator word and
/// a multiset of symbolic atoms.
struct Term {
  std::vector<LadderOperator> factors;
  AtomPowers atoms;
};
bool operator==(const Term& a, const Term& b);
bool operator<(const Term& a, const Term& b);

/// Formal sum of monomials with complex-rational coefficients. Every mutation
/// canonicalizes the atom part of the affected monomial and merges equal terms;
/// zero terms are never stored.
class OperatorExpr {
 public:
  using TermMap = std::map<Term, ComplexRational>;

  OperatorExpr() = default;

  static OperatorExpr number(const ComplexRational& c);
  static OperatorExpr op(const LadderOperator& o);
  static OperatorExpr atom(const Atom& a, int power = 1);
  static OperatorExpr word(std::vector<LadderOperator> factors);

  void add(std::vector<LadderOperator> factors, AtomPowers atoms, ComplexRational c);
  void add(const Term& t, const ComplexRational& c) { add(t.factors, t.atoms, c); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// No term carries operators.
  bool is_scalar() const;
  /// Longest operator word among the terms.
  std::size_t max_length() const;

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const OperatorExpr& o);
  OperatorExpr& operator*=(const ComplexRational& c);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const OperatorExpr& b) { return a *= b; }
  friend OperatorExpr operator*(const ComplexRational& c, OperatorExpr a) { return a *= c; }
  friend OperatorExpr operator-(OperatorExpr a) { return a *= ComplexRational(-1); }
  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) { return a.terms_ == b.terms_; }

  /// Hermitian adjoint: reverses every word, flips daggers, conjugates coefficients.
  /// Atoms are real.
  OperatorExpr adjoint() const;

  /// Applies `f` to every operator and every atom label; used for substitutions.
  template <class OpFn, class AtomFn>
  OperatorExpr transform(OpFn&& op_fn, AtomFn&& atom_fn) const {
    OperatorExpr out;
    for (const auto& [t, c] : terms_) {
      std::vector<LadderOperator> f;
      f.reserve(t.factors.size());
      for (const auto& o : t.factors) f.push_back(op_fn(o));
      AtomPowers a;
      for (const auto& [atom, p] : t.atoms) multiply_into(a, atom_fn(atom), p);
      out.add(std::move(f), std::move(a), c);
    }
    return out;
  }

 private:
  TermMap terms_;
};

OperatorExpr operator*(const OperatorExpr& a, const ComplexRational& c);

/// Canonical text form; parse_expression(to_string(e)) == e.
std::string to_string(const OperatorExpr& e);
std::string to_string(const Term& t);

/// Label substitution. Keys are symbol names; values replace the symbol.
struct Bindings {
  std::map<std::string, MomentumLabel> momenta;
  std::map<std::string, InnerLabel> inner;
  std::map<std::string, Discrete> discrete;
};

struct ResolveResult {
  OperatorExpr value;
  /// Inconsistent or unusable bindings, and integrated symbols without a delta.
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

/// Substitutes `bindings`, then performs the sifting integral for each symbol in
/// `integrated`: a delta linking the symbol to another label is consumed and the
/// symbol replaced by that label throughout the term. Coincident bound labels
/// leave delta(0) markers, distinct bound labels give zero.
ResolveResult delta_resolve(const OperatorExpr& e, const Bindings& bindings,
                            const std::set<std::string>& integrated = {});

MomentumLabel substitute(const MomentumLabel& l, const std::map<std::string, MomentumLabel>& m);
InnerLabel substitute(const InnerLabel& l, const Bindings& b);
Discrete substitute(const Discrete& d, const std::map<std::string, Discrete>& m);
LadderOperator substitute(const LadderOperator& o, const Bindings& b);
Atom substitute(const Atom& a, const Bindings& b);

}  // namespace gravfock
