#include <doctest.h>

#include <cmath>

#include "gravfock/parser.h"
#include "gravfock/propagator.h"

using namespace gravfock;
using namespace gravfock::kinematics;

TEST_CASE("scalar kernel value") {
  const PropagatorSpec spec{FieldKind::Scalar, 1.0, 1e-8};
  const auto v = propagator_eval(spec, {2.0, 1.0, 0.0, 0.0});
  CHECK(v.pole.real() == doctest::Approx(1.0 / 2.0));
  CHECK(std::abs(v.pole.imag()) < 1e-8);
}

TEST_CASE("Dirac numerator at rest") {
  const PropagatorSpec spec{FieldKind::Dirac, 2.0, 1e-8};
  const auto v = propagator_eval(spec, {1.0, 0.0, 0.0, 0.0});
  Matrix4cd num = Matrix4cd::Zero();
  num.diagonal() << 3, 3, 1, 1;
  CHECK((v.dirac - num * v.pole).norm() < 1e-12);
}

TEST_CASE("inner projector is transversal and idempotent") {
  const FourVector big_k{3.0, 1.0, -0.5, 0.25};
  const Matrix4d pi = inner_projector(big_k);
  Matrix4d eta = Matrix4d::Zero();
  eta.diagonal() << 1, -1, -1, -1;
  const Eigen::Vector4d kup(big_k[0], big_k[1], big_k[2], big_k[3]);
  CHECK((pi * kup).norm() < 1e-12);
  CHECK((pi * eta * pi + pi).norm() < 1e-12);
  CHECK_THROWS_AS(inner_projector({1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("gauge kernel factorizes") {
  const PropagatorSpec spec{FieldKind::Gauge, 1.0, 1e-8};
  const FourVector big_k{2.0, 0.5, 0.0, 0.0};
  const auto v = propagator_eval(spec, {3.0, 1.0, 0.0, 0.0}, big_k);
  const Matrix4d pi = inner_projector(big_k);
  CHECK(std::abs(v.gauge(0, 0, 1, 1) + v.pole * pi(1, 1)) < 1e-12);
  CHECK(std::abs(v.gauge(2, 2, 0, 1) - v.pole * pi(0, 1)) < 1e-12);
  CHECK_THROWS(propagator_eval(spec, {3.0, 1.0, 0.0, 0.0}));
}

TEST_CASE("invalid propagator specs") {
  CHECK_THROWS((PropagatorSpec{FieldKind::Scalar, 1.0, 0.0}).validate());
  CHECK_THROWS((PropagatorSpec{FieldKind::Dirac, 0.0, 1e-8}).validate());
  CHECK_THROWS((PropagatorSpec{FieldKind::Gauge, 0.0, 1e-8}).validate());
  CHECK_THROWS((PropagatorSpec{FieldKind::Scalar, -1.0, 1e-8}).validate());
  CHECK_NOTHROW((PropagatorSpec{FieldKind::Scalar, 0.0, 1e-8}).validate());
}

TEST_CASE("poles cancel on amputation") {
  for (auto kind : {FieldKind::Scalar, FieldKind::Dirac, FieldKind::Gauge}) {
    const auto f = kernel_form({kind, 1.0, 1e-8});
    CHECK(f.pole_order == 1);
    CHECK(amputate(f).pole_order == 0);
  }
}

TEST_CASE("Wick two-point functions match the propagators") {
  const auto k = MomentumLabel::symbol("k");
  CHECK(PropagatorSpec{FieldKind::Scalar}.expected_integrand(k) == parse_expression("1/2 * Lambda^4 * twopi^-7 * omega(k)^-1"));
  CHECK(PropagatorSpec{FieldKind::Dirac}.expected_integrand(k) == parse_expression("Lambda^4 * twopi^-7 * k0m(k)^-1"));
  for (auto kind : {FieldKind::Scalar, FieldKind::Dirac, FieldKind::Gauge}) {
    const WickCheck w = wick_two_point(kind, FieldMasses{}, 1e-12);
    INFO(to_string(kind), ": ", w.detail);
    CHECK(w.structural);
    CHECK(w.other_orderings_vanish);
    CHECK(w.numerator_residual < 1e-12);
    CHECK(w.passed);
  }
}

TEST_CASE("mode expansion measures") {
  const auto k = MomentumLabel::symbol("k");
  CHECK(ModeExpansion{FieldKind::Scalar}.measure(k) == parse_expression("1/2 * Lambda^4 * twopi^-7 * omega(k)^-1"));
  CHECK(ModeExpansion{FieldKind::Dirac}.measure(k) == parse_expression("Lambda^4 * twopi^-7 * k0m(k)^-1"));
}
