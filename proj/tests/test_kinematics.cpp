#include <doctest.h>

#include <cmath>
#include <random>

#include "gravfock/kinematics.h"

using namespace gravfock::kinematics;

namespace {

ThreeVector random_p(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  return {u(rng), u(rng), u(rng)};
}

FourVector random_timelike(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0), m(0.2, 3.0);
  const ThreeVector p{u(rng), u(rng), u(rng)};
  return MassShellMomentum(p, m(rng)).four_vector();
}

}  // namespace

TEST_CASE("on-shell energy") {
  CHECK(on_shell_energy({3, 0, 0}, 4) == doctest::Approx(5.0));
  CHECK(on_shell_energy({0, 0, 0}, 2) == 2.0);
  CHECK_THROWS_AS(on_shell_energy({0, 0, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(on_shell_energy({1, 0, 0}, -1), std::invalid_argument);
}

TEST_CASE("cone classification") {
  CHECK(cone_classify({2, 1, 0, 0}) == ConeClass::TimelikePlus);
  CHECK(cone_classify({-2, 1, 0, 0}) == ConeClass::TimelikeMinus);
  CHECK(cone_classify({1, 1, 0, 0}) == ConeClass::LightlikePlus);
  CHECK(cone_classify({-1, 0, 1, 0}) == ConeClass::LightlikeMinus);
  CHECK(cone_classify({1, 2, 0, 0}) == ConeClass::Spacelike);
  CHECK_FALSE(in_support(ConeClass::Spacelike));
}

TEST_CASE("gamma matrices in the Dirac representation") {
  const auto& g = GammaAlgebra::instance();
  Matrix4cd g0 = Matrix4cd::Zero();
  g0.diagonal() << 1, 1, -1, -1;
  CHECK((g.gamma(0) - g0).norm() == 0.0);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4cd expect = 2.0 * metric(mu, nu) * Matrix4cd::Identity();
      CHECK((g.anticommutator(mu, nu) - expect).norm() == 0.0);
    }
  const FourVector k{2.0, 0.3, -0.7, 1.1};
  const Matrix4cd ks = g.slash(k);
  CHECK((ks * ks - minkowski_dot(k, k) * Matrix4cd::Identity()).norm() < 1e-13);
}

TEST_CASE("space-time polarizations are orthonormal, transversal and complete") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const double mu = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
    const MassShellMomentum k(random_p(rng), mu);
    const auto pol = build_spacetime_polarizations(k, mu);
    const FourVector kv = k.four_vector();
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const double dot = minkowski_dot(pol.eps[a], pol.eps[b]);
        CHECK(std::abs(dot - metric(a, b)) < 1e-12 * std::max(1.0, kv[0] * kv[0] / (mu * mu)));
      }
      if (a > 0) CHECK(std::abs(minkowski_dot(kv, pol.eps[a])) < 1e-12 * std::max(1.0, kv[0] / mu) * kv[0]);
    }
    const double scale = std::max(1.0, kv[0] * kv[0] / (mu * mu));
    CHECK(spacetime_completeness_residual(pol, kv, mu).cwiseAbs().maxCoeff() < 1e-12 * scale);
  }
}

TEST_CASE("inner polarizations satisfy K.E = 0 and completeness") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const FourVector big_k = random_timelike(rng);
    const auto pol = build_inner_polarizations(big_k);
    const double k2 = minkowski_dot(big_k, big_k);
    const double scale = std::max(1.0, big_k[0] * big_k[0] / k2);
    for (int a = 1; a <= 3; ++a) {
      CHECK(std::abs(minkowski_dot(big_k, pol(a))) < 1e-12 * scale * big_k[0]);
      for (int b = 1; b <= 3; ++b) CHECK(std::abs(minkowski_dot(pol(a), pol(b)) - metric(a, b)) < 1e-12 * scale);
    }
    CHECK(inner_completeness_residual(pol, big_k).cwiseAbs().maxCoeff() < 1e-12 * scale);
  }
  CHECK_THROWS_AS(build_inner_polarizations({1, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_inner_polarizations({1, 2, 0, 0}), std::invalid_argument);
}

TEST_CASE("Dirac spinors solve the Dirac equation with the expected spin sums") {
  std::mt19937_64 rng(13);
  const auto& g = GammaAlgebra::instance();
  for (int i = 0; i < 100; ++i) {
    const double m = std::uniform_real_distribution<double>(0.2, 5.0)(rng);
    const MassShellMomentum k(random_p(rng), m);
    const FourVector kv = k.four_vector();
    const Matrix4cd ks = g.slash(kv);
    const double scale = std::max(1.0, kv[0] / m);
    for (int s = 1; s <= 2; ++s) {
      const auto u = dirac_spinor(k, s, SpinorKind::U);
      const auto v = dirac_spinor(k, s, SpinorKind::V);
      CHECK(((ks - m * Matrix4cd::Identity()) * u.components).norm() < 1e-12 * scale * m);
      CHECK(((ks + m * Matrix4cd::Identity()) * v.components).norm() < 1e-12 * scale * m);
      CHECK(std::abs((u.bar() * u.components)(0) - 1.0) < 1e-12 * scale);
      CHECK(std::abs((v.bar() * v.components)(0) + 1.0) < 1e-12 * scale);
    }
    const Matrix4cd su = (ks + m * Matrix4cd::Identity()) / (2 * m);
    const Matrix4cd sv = (ks - m * Matrix4cd::Identity()) / (2 * m);
    CHECK((spin_sum(k, SpinorKind::U) - su).cwiseAbs().maxCoeff() < 1e-12 * scale);
    CHECK((spin_sum(k, SpinorKind::V) - sv).cwiseAbs().maxCoeff() < 1e-12 * scale);
  }
  CHECK_THROWS_AS(dirac_spinor(MassShellMomentum({1, 0, 0}, 0), 1, SpinorKind::U), std::invalid_argument);
  CHECK_THROWS_AS(dirac_spinor(MassShellMomentum({1, 0, 0}, 1), 3, SpinorKind::U), std::invalid_argument);
}
