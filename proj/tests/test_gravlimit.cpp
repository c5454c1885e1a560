#include <doctest.h>

#include <string>

#include "gravfock/gravlimit.h"
#include "gravfock/normal_order.h"
#include "gravfock/parser.h"

using namespace gravfock;

namespace {

OperatorExpr P(const std::string& s) { return parse_expression(s); }

OperatorExpr barred(const OperatorExpr& bracket, const RegularizationConfig& cfg) { return grav_limit_expr(bracket, cfg); }

}  // namespace

TEST_CASE("barred brackets in the limit with V_reg = Lambda^4") {
  const RegularizationConfig unit;
  CHECK(barred(commutator(P("a(k)"), P("a'(h)")), unit) == P("2 * omega(k) * twopi^3 * delta3(k,h)"));
  CHECK(barred(anticommutator(P("b(k,s=s)"), P("b'(h,s=t)")), unit) == P("k0m(k) * kron(s,t) * twopi^3 * delta3(k,h)"));
  CHECK(barred(anticommutator(P("d(k,s=s)"), P("d'(h,s=t)")), unit) == P("k0m(k) * kron(s,t) * twopi^3 * delta3(k,h)"));
  CHECK(barred(commutator(P("A(k,g=g,G=G)"), P("A'(h,g=x,G=y)")), unit) ==
        P("2 * omega_A(k) * eta(g,x) * etaI(G,y) * Lambda^2 * twopi^3 * delta3(k,h)"));
}

TEST_CASE("matter limits do not depend on Lambda, the gauge limit scales as Lambda^2") {
  for (int l = 1; l <= 4; ++l) {
    const auto cfg = RegularizationConfig::with_ratio(Rational(l));
    const auto s = barred(commutator(P("a(k)"), P("a'(h)")), cfg);
    const auto d = barred(anticommutator(P("b(k,s=1)"), P("b'(h,s=1)")), cfg);
    const auto g = barred(commutator(P("A(k,g=1,G=1)"), P("A'(h,g=1,G=1)")), cfg);
    CHECK(lambda_power(s) == 0);
    CHECK(lambda_power(d) == 0);
    CHECK(lambda_power(g) == 2);
    CHECK(evaluate_lambda(g, Rational(l)) == P(std::to_string(2 * l * l) + " * omega_A(k) * twopi^3 * delta3(k,h)"));
  }
}

TEST_CASE("the volume ratio enters linearly") {
  const auto cfg = RegularizationConfig::with_ratio(Rational(1), Rational(3));
  CHECK(barred(commutator(P("a(k)"), P("a'(h)")), cfg) == P("6 * omega(k) * twopi^3 * delta3(k,h)"));
}

TEST_CASE("contact term limit with explicit associations") {
  const std::map<InnerLabel, InnerLabel> assoc{{InnerLabel::symbol("K"), InnerLabel::on_shell(MomentumLabel::symbol("k"), MassTag::Scalar)},
                                               {InnerLabel::symbol("H"), InnerLabel::on_shell(MomentumLabel::symbol("h"), MassTag::Scalar)}};
  CHECK(grav_limit_expr(commutator(P("a(k;K)"), P("a'(h;H)")), {}, assoc) == P("2 * omega(k) * twopi^3 * delta3(k,h)"));
  CHECK_THROWS_AS(grav_limit_expr(P("delta4(K,H)"), {}), std::invalid_argument);
}

TEST_CASE("regularization validation") {
  CHECK_THROWS_AS((RegularizationConfig{Rational(0), Rational(1)}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((RegularizationConfig{Rational(1), Rational(-1)}).validate(), std::invalid_argument);
  CHECK(RegularizationConfig::with_ratio(Rational(2), Rational(3)).v_reg == 48);
}

TEST_CASE("state projection is idempotent") {
  const FockState s = FockState::from(P("a'(k;K) * A'(h,g=1;H,G=2) + 2 * b'(p,s=1;Q)"));
  const FockState once = project_state(s);
  CHECK(project_state(once) == once);
  CHECK(once == FockState::from(P("a'(k) * A'(h,g=1,G=2) + 2 * b'(p,s=1)")));
  CHECK(project_state(FockState::vacuum()) == FockState::vacuum());
}
