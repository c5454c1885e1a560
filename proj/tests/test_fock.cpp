#include <doctest.h>

#include <random>
#include <string>

#include "gravfock/fock.h"
#include "gravfock/normal_order.h"
#include "gravfock/parser.h"

using namespace gravfock;

namespace {

OperatorExpr P(const std::string& s) { return parse_expression(s); }

RVec3 v3(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }
RVec4 v4(int a, int b, int c, int d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

std::string vec(const RVec3& v) { return "[" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + "]"; }
std::string vec(const RVec4& v) {
  return "[" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + "," + to_string(v[3]) + "]";
}

int eta(int a) { return a == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("vacuum and single quanta") {
  const FockState vac = FockState::vacuum();
  CHECK(inner_product(vac, vac) == P("1"));
  CHECK(apply(P("a(k;K)"), vac).is_zero());
  const FockState one = FockState::from(P("a'(k;K)"));
  CHECK(inner_product(one, one) == P("2 * Lambda^-4 * twopi^7 * omega(k) * delta3(0) * delta4(0)"));
  CHECK(inner_product(one, FockState::from(P("b'(k,s=1;K)"))).is_zero());
  CHECK(to_string(FockState()) == "0");
}

TEST_CASE("annihilator acting on a one-quantum ket") {
  const FockState one = FockState::from(P("a'(h;H)"));
  const FockState r = apply(P("a(k;K)"), one);
  CHECK(r.expr() == P("2 * Lambda^-4 * twopi^7 * omega(k) * delta3(k,h) * delta4(K,H)"));
}

TEST_CASE("spacelike inner labels are rejected") {
  CHECK_THROWS(FockState::from(P("a'([0,0,0];[1,2,0,0])")));
  CHECK_NOTHROW(FockState::from(P("a'([0,0,0];[2,1,0,0])")));
}

TEST_CASE("norm signs of gauge quanta") {
  for (int g = 0; g <= 3; ++g)
    for (int G = 1; G <= 3; ++G) {
      const auto e = P("A'(k,g=" + std::to_string(g) + ";K,G=" + std::to_string(G) + ")");
      CHECK(norm_sign(e.terms().begin()->first.factors) == eta(g) * -1);
    }
  CHECK(norm_sign(P("a'(k;K)").terms().begin()->first.factors) == 1);
  CHECK(norm_sign(P("A'(k,g=0;K,G=1) * A'(h,g=0;H,G=2)").terms().begin()->first.factors) == 1);
}

TEST_CASE("physical filter drops g = 0 quanta") {
  const FockState s = FockState::from(P("A'(k,g=0;K,G=1) + A'(k,g=2;K,G=1) + a'(h;H)"));
  CHECK(physical_filter(s) == FockState::from(P("A'(k,g=2;K,G=1) + a'(h;H)")));
}

TEST_CASE("momentum eigenvalues are additive over quanta") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> comp(-4, 4), pos(5, 9), kind(0, 3), gam(0, 3), big_gam(1, 3), spin(1, 2);
  for (int i = 0; i < 100; ++i) {
    std::string ket;
    RVec4 inner_sum{};
    RVec3 p_sum{};
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int q = 0; q < n; ++q) {
      const RVec3 k = v3(comp(rng), comp(rng), comp(rng));
      const RVec4 big = v4(pos(rng) + 4, comp(rng), comp(rng), comp(rng));
      int w = 1;
      std::string op;
      switch (kind(rng)) {
        case 0: op = "a'(" + vec(k) + ";" + vec(big) + ")"; break;
        case 1: op = "b'(" + vec(k) + ",s=" + std::to_string(spin(rng)) + ";" + vec(big) + ")"; break;
        case 2: op = "d'(" + vec(k) + ",s=" + std::to_string(spin(rng)) + ";" + vec(big) + ")"; break;
        default: {
          const int g = gam(rng), G = big_gam(rng);
          w = eta(g) * eta(G);
          op = "A'(" + vec(k) + ",g=" + std::to_string(g) + ";" + vec(big) + ",G=" + std::to_string(G) + ")";
        }
      }
      ket += (q ? " * " : "") + op;
      for (int j = 0; j < 3; ++j) p_sum[j] += w * k[j];
      for (int j = 0; j < 4; ++j) inner_sum[j] += w * big[j];
    }
    const FockState s = FockState::from(P(ket));
    if (s.is_zero()) continue;
    INFO(ket);
    for (const auto& e : momentum_action(MomentumKind::Inner, s)) CHECK(e.value == FormalFourVector::from(inner_sum));
    for (const auto& e : momentum_action(MomentumKind::Inertial, s)) {
      for (int j = 0; j < 3; ++j) CHECK(e.value.rational[j + 1] == p_sum[j]);
      CHECK(e.value.rational[0] == 0);
      CHECK_FALSE(e.value.energies.empty());
    }
  }
}

TEST_CASE("formal on-shell energies") {
  const auto w = FormalFourVector::on_shell(MomentumLabel::bound(v3(3, 0, 0)), MassTag::Scalar);
  FieldMasses m;
  m.scalar = 4.0;
  CHECK(w.evaluate(m)[0] == doctest::Approx(5.0));
  CHECK(to_string(w) == "(omega([3,0,0]), 3, 0, 0)");
}
