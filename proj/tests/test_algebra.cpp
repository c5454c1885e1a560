#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "gravfock/normal_order.h"
#include "gravfock/parser.h"

using namespace gravfock;

namespace {

OperatorExpr P(const std::string& s) { return parse_expression(s); }

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  std::string rat() {
    const int n = pick(-9, 9), d = pick(1, 4);
    return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
  }
  std::string mom() { return pick(0, 1) ? std::string(1, "kpq"[pick(0, 2)]) : "[" + rat() + "," + rat() + "," + rat() + "]"; }
  std::string op() {
    const std::string dag = pick(0, 1) ? "'" : "";
    const std::string k = std::string(1, "kpq"[pick(0, 2)]);
    const std::string big = std::string(1, "KPQ"[pick(0, 2)]);
    switch (pick(0, 3)) {
      case 0: return "a" + dag + "(" + k + ";" + big + ")";
      case 1: return "b" + dag + "(" + k + ",s=" + std::to_string(pick(1, 2)) + ";" + big + ")";
      case 2: return "d" + dag + "(" + k + ",s=s;" + big + ")";
      default: return "A" + dag + "(" + k + ",g=" + std::to_string(pick(0, 3)) + ";" + big + ",G=" + std::to_string(pick(1, 3)) + ")";
    }
  }
  std::string atom() {
    switch (pick(0, 7)) {
      case 0: return "Lambda^" + std::to_string(pick(-4, 4));
      case 1: return "twopi";
      case 2: return "omega(" + mom() + ")";
      case 3: return "omega_A(" + mom() + ")";
      case 4: return "k0m(" + mom() + ")";
      case 5: return "delta3(k,p)";
      case 6: return "eta(g,1)";
      default: return "kron(s,t)";
    }
  }
  std::string monomial() {
    std::string t = std::to_string(pick(1, 9)) + "/" + std::to_string(pick(1, 4));
    if (pick(0, 1)) t = "(" + t + (pick(0, 1) ? "+" : "-") + std::to_string(pick(1, 9)) + "i)";
    for (int n = pick(0, 2); n > 0; --n) t += " * " + atom();
    for (int n = pick(0, 3); n > 0; --n) t += " * " + op();
    return t;
  }
  std::string expr() {
    std::string e = (pick(0, 1) ? "-" : "") + monomial();
    for (int n = pick(0, 3); n > 0; --n) e += (pick(0, 1) ? " + " : " - ") + monomial();
    return e;
  }
};

}  // namespace

TEST_CASE("scalar commutator with inner labels") {
  CHECK(commutator(P("a(k;K)"), P("a'(h;H)")) == P("2 * Lambda^-4 * twopi^7 * omega(k) * delta3(k,h) * delta4(K,H)"));
  CHECK(commutator(P("a'(h;H)"), P("a(k;K)")) == P("-2 * Lambda^-4 * twopi^7 * omega(h) * delta3(k,h) * delta4(K,H)"));
  CHECK(commutator(P("a(k;K)"), P("a(h;H)")).is_zero());
  CHECK(commutator(P("a'(k;K)"), P("a'(h;H)")).is_zero());
}

TEST_CASE("Dirac anticommutators") {
  const auto rhs = P("Lambda^-4 * twopi^7 * k0m(k) * kron(s,t) * delta3(k,h) * delta4(K,H)");
  CHECK(anticommutator(P("b(k,s=s;K)"), P("b'(h,s=t;H)")) == rhs);
  CHECK(anticommutator(P("d(k,s=s;K)"), P("d'(h,s=t;H)")) == rhs);
  CHECK(anticommutator(P("b(k,s=s;K)"), P("d'(h,s=t;H)")).is_zero());
  CHECK(anticommutator(P("b'(k,s=s;K)"), P("b'(h,s=t;H)")).is_zero());
  CHECK(anticommutator(P("b(k,s=1;K)"), P("b'(h,s=2;H)")).is_zero());
}

TEST_CASE("gauge commutator carries both metric factors and Lambda^-2") {
  CHECK(commutator(P("A(k,g=g;K,G=G)"), P("A'(h,g=x;H,G=y)")) ==
        P("2 * Lambda^-2 * twopi^7 * omega_A(k) * eta(g,x) * etaI(G,y) * delta3(k,h) * delta4(K,H)"));
  CHECK(commutator(P("A(k,g=0;K,G=1)"), P("A'(h,g=0;H,G=1)")) ==
        P("-2 * Lambda^-2 * twopi^7 * omega_A(k) * delta3(k,h) * delta4(K,H)"));
  CHECK(commutator(P("A(k,g=1;K,G=1)"), P("A'(h,g=2;H,G=1)")).is_zero());
  CHECK(commutator(P("A(k,g=1;K,G=1)"), P("a'(h;H)")).is_zero());
}

TEST_CASE("fermionic words") {
  CHECK(normal_order(P("b(k,s=1;K) * b'(h,s=2;H)")) == P("-b'(h,s=2;H) * b(k,s=1;K)"));
  CHECK(reduce_to_normal_form(P("b'(k,s=1;K) * b'(k,s=1;K)")).is_zero());
  CHECK(reduce_to_normal_form(P("b'(h,s=1;H) * b'(k,s=1;K) + b'(k,s=1;K) * b'(h,s=1;H)")).is_zero());
  CHECK(is_even(P("b'(k,s=1;K) * d'(h,s=1;H)").terms().begin()->first.factors));
  CHECK_FALSE(is_even(P("b'(k,s=1;K)").terms().begin()->first.factors));
}

TEST_CASE("vacuum expectation values") {
  CHECK(vev(P("a(k;K) * a'(h;H)")) == P("2 * Lambda^-4 * twopi^7 * omega(k) * delta3(k,h) * delta4(K,H)"));
  CHECK(vev(P("a'(h;H) * a(k;K)")).is_zero());
  CHECK(vev(P("a(k;K) * a(h;H)")).is_zero());
  CHECK(vev(P("3 * Lambda")) == P("3 * Lambda"));
}

TEST_CASE("deltas sift and collapse") {
  CHECK(P("delta3(k,h) * omega(h)") == P("delta3(k,h) * omega(k)"));
  CHECK(P("delta3([1,0,0],[1,0,0])") == P("delta3(0)"));
  CHECK(P("delta3([1,0,0],[0,1,0])").is_zero());
  CHECK(P("kron(1,2)").is_zero());
  CHECK(P("kron(2,2)") == P("1"));
  CHECK(P("eta(0,0)") == P("1"));
  CHECK(P("eta(3,3)") == P("-1"));
  CHECK(P("delta3(k,h) * delta3(h,q)") == P("delta3(k,h) * delta3(k,q)"));
}

TEST_CASE("delta_resolve integrates a symbol") {
  const auto r = delta_resolve(P("delta3(k,h) * omega(h) * a'(h;H)"), {}, {"h"});
  REQUIRE(r.ok());
  CHECK(r.value == P("omega(k) * a'(k;H)"));
  Bindings b;
  b.momenta["k"] = MomentumLabel::bound({Rational(1), Rational(0), Rational(0)});
  b.momenta["h"] = MomentumLabel::bound({Rational(0), Rational(1), Rational(0)});
  CHECK(delta_resolve(P("delta3(k,h)"), b).value.is_zero());
  CHECK_FALSE(delta_resolve(P("omega(h)"), {}, {"h"}).ok());
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(P("a(k"), ParseError);
  CHECK_THROWS_AS(P("x(k)"), ParseError);
  CHECK_THROWS_AS(P("A(k,g=1;K,G=0)"), std::exception);
  CHECK_THROWS_AS(P("a(k,s=1;K)"), std::exception);
  CHECK_THROWS_AS(P("1 +"), ParseError);
  try {
    P("a(k;K) * ?");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.column() > 1);
  }
}

TEST_CASE("time ordering and kets") {
  const auto t = parse_maybe_time_ordered("T a(k;K) * a'(h;H)");
  CHECK(t.time_ordered);
  CHECK(t.expr == P("a(k;K) * a'(h;H)"));
  CHECK_FALSE(parse_maybe_time_ordered("a(k;K)").time_ordered);
  CHECK(parse_ket("|0>") == P("1"));
  CHECK(parse_ket("a'(k;K) |0>") == P("a'(k;K)"));
}

TEST_CASE("printer and parser round-trip on random expressions") {
  Gen g(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::string text = g.expr();
    const OperatorExpr e = P(text);
    INFO(text);
    CHECK(P(to_string(e)) == e);
    CHECK(to_string(P(to_string(e))) == to_string(e));
  }
}

TEST_CASE("normal form is idempotent and preserves the operator identity") {
  Gen g(99);
  for (int i = 0; i < 200; ++i) {
    std::string w = g.op();
    for (int n = g.pick(1, 3); n > 0; --n) w += " * " + g.op();
    const OperatorExpr e = P(w);
    const OperatorExpr nf = reduce_to_normal_form(e);
    INFO(w);
    CHECK(reduce_to_normal_form(nf) == nf);
    CHECK(normal_order(normal_order(e)) == normal_order(e));
    CHECK(reduce_to_normal_form(e.adjoint()) == reduce_to_normal_form(nf.adjoint()));
  }
}

TEST_CASE("Jacobi identity for bosonic words") {
  Gen g(5);
  for (int i = 0; i < 60; ++i) {
    std::vector<OperatorExpr> x;
    for (int j = 0; j < 3; ++j) {
      std::string o = g.op();
      while (o[0] == 'b' || o[0] == 'd') o = g.op();
      x.push_back(P(o));
    }
    const OperatorExpr j = commutator(x[0], commutator(x[1], x[2])) + commutator(x[1], commutator(x[2], x[0])) +
                           commutator(x[2], commutator(x[0], x[1]));
    CHECK(reduce_to_normal_form(j).is_zero());
  }
}
