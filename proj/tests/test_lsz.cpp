#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>

#include "gravfock/lsz.h"
#include "gravfock/parser.h"

using namespace gravfock;

namespace {

OperatorExpr P(const std::string& s) { return parse_expression(s); }

Leg leg(bool in, FieldKind kind, const std::string& p) {
  Leg l;
  l.incoming = in;
  l.kind = kind;
  l.momentum = MomentumLabel::symbol(p);
  return l;
}

Leg dirac(bool in, const std::string& p, const std::string& s, bool anti = false) {
  Leg l = leg(in, FieldKind::Dirac, p);
  l.spin = Discrete::symbol(s);
  l.antiparticle = anti;
  return l;
}

GreenFunction fields() {
  GreenFunction g;
  g.fields = {{FieldKind::Scalar, Rational(1)}, {FieldKind::Dirac, Rational(1)}, {FieldKind::Gauge, Rational(2)}};
  return g;
}

}  // namespace

TEST_CASE("free scalar two-point reduces to one") {
  GreenFunction g = fields();
  g.legs = {leg(true, FieldKind::Scalar, "k"), leg(false, FieldKind::Scalar, "h")};
  const auto amp = lsz_reduce(g, {}, {});
  CHECK(amp.elastic == P("2 * omega(k) * twopi^3 * delta3(k,h)"));
  CHECK(amp.connected_is_zero);
  CHECK(amp.pairings.size() == 1);
  CHECK(amp.lambda_power == 0);
}

TEST_CASE("free two-point normalization is one for bound momenta and any Lambda") {
  for (int l = 1; l <= 3; ++l) {
    GreenFunction g = fields();
    Leg in = leg(true, FieldKind::Gauge, "k");
    in.momentum = MomentumLabel::bound({Rational(1), Rational(2), Rational(-1, 3)});
    in.polarization = Discrete::bound(2);
    in.inner_polarization = Discrete::bound(3);
    Leg out = in;
    out.incoming = false;
    g.legs = {in, out};
    const auto amp = lsz_reduce(g, {}, RegularizationConfig::with_ratio(Rational(l)));
    CHECK(amp.normalized_elastic == P("1"));
    CHECK(amp.lambda_power == 2);
  }
}

TEST_CASE("free scalar four-point is a sum of elastic deltas") {
  GreenFunction g = fields();
  g.legs = {leg(true, FieldKind::Scalar, "k1"), leg(true, FieldKind::Scalar, "k2"), leg(false, FieldKind::Scalar, "h1"),
            leg(false, FieldKind::Scalar, "h2")};
  const auto amp = lsz_reduce(g, {}, {});
  const auto expected = P(
      "4 * omega(k1) * omega(k2) * twopi^6 * delta3(k1,h1) * delta3(k2,h2)"
      " + 4 * omega(k1) * omega(k2) * twopi^6 * delta3(k1,h2) * delta3(k2,h1)");
  CHECK(amp.elastic == expected);
  CHECK(elastic_oracle(g, {}) == expected);
  CHECK(amp.connected_is_zero);
  CHECK(amp.connected == std::complex<double>(0.0, 0.0));
}

TEST_CASE("two identical fermions pick up the exchange sign") {
  GreenFunction g = fields();
  g.legs = {dirac(true, "k1", "s1"), dirac(true, "k2", "s2"), dirac(false, "h1", "t1"), dirac(false, "h2", "t2")};
  const auto amp = lsz_reduce(g, {}, {});
  const auto expected = P(
      "k0m(k1) * k0m(k2) * kron(s1,t1) * kron(s2,t2) * twopi^6 * delta3(k1,h1) * delta3(k2,h2)"
      " - k0m(k1) * k0m(k2) * kron(s1,t2) * kron(s2,t1) * twopi^6 * delta3(k1,h2) * delta3(k2,h1)");
  CHECK(amp.elastic == expected);
  CHECK(elastic_oracle(g, {}) == expected);
  REQUIRE(amp.pairings.size() == 2);
  CHECK(amp.pairings[0].sign * amp.pairings[1].sign == -1);
}

TEST_CASE("particles and antiparticles do not pair") {
  GreenFunction g = fields();
  g.legs = {dirac(true, "k", "s"), dirac(false, "h", "t", true)};
  const auto amp = lsz_reduce(g, {}, {});
  CHECK(amp.elastic.is_zero());
  CHECK(amp.pairings.empty());
}

TEST_CASE("connected amplitude of a constant vertex") {
  GreenFunction g = fields();
  g.legs = {leg(true, FieldKind::Scalar, "k1"), leg(true, FieldKind::Scalar, "k2"), leg(false, FieldKind::Scalar, "h1"),
            leg(false, FieldKind::Scalar, "h2")};
  g.vertices = {{ComplexRational(Rational(-1, 2)), {0, 1, 2, 3}}};
  LSZRecipe r;
  r.z = 0.25;
  const auto amp = lsz_reduce(g, r, {});
  const std::complex<double> leg_factor = std::complex<double>(0, 1) / std::sqrt(0.25) * std::complex<double>(0, 1);
  CHECK(std::abs(amp.connected - (-0.5) * std::pow(leg_factor, 4)) < 1e-12);
  CHECK_FALSE(amp.connected_is_zero);
}

TEST_CASE("recipe and leg validation") {
  CHECK_THROWS((LSZRecipe{0.0, 1.0, 1.0, true}).validate());
  CHECK_THROWS((LSZRecipe{1.0, 1.5, 1.0, true}).validate());
  CHECK(LSZRecipe{0.5, 0.25, 0.125, true}.constant(FieldKind::Gauge) == 0.125);

  GreenFunction g = fields();
  Leg off = leg(true, FieldKind::Scalar, "k");
  off.momentum = MomentumLabel::bound({Rational(3, 4), Rational(0), Rational(0)});
  off.energy = Rational(1);
  g.legs = {off};
  CHECK_THROWS(validate_legs(g));
  g.legs[0].energy = Rational(5, 4);
  CHECK_NOTHROW(validate_legs(g));

  GreenFunction none;
  none.legs = {leg(true, FieldKind::Scalar, "k")};
  CHECK_THROWS(validate_legs(none));

  GreenFunction v = fields();
  v.legs = {leg(true, FieldKind::Scalar, "k")};
  v.vertices = {{ComplexRational(1), {0, 3}}};
  CHECK_THROWS(validate_legs(v));
}

TEST_CASE("Dirac attachments") {
  GreenFunction g = fields();
  Leg in = dirac(true, "k", "s");
  in.momentum = MomentumLabel::bound({Rational(0), Rational(1, 2), Rational(0)});
  in.spin = Discrete::bound(2);
  Leg out = in;
  out.incoming = false;
  g.legs = {in, out};
  const auto amp = lsz_reduce(g, {}, {});
  REQUIRE(amp.attachments.size() == 2);
  CHECK(amp.attachments[0].kind == "u");
  CHECK(amp.attachments[1].kind == "ubar");
  const kinematics::MassShellMomentum k({0, 0.5, 0}, 1.0);
  const auto u = kinematics::dirac_spinor(k, 2, kinematics::SpinorKind::U);
  CHECK((amp.attachments[0].spinor - u.components).norm() < 1e-12);
}
