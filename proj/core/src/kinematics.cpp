#include "gravfock/kinematics.h"

#include <cmath>
#include <stdexcept>

namespace gravfock::kinematics {

double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

FourVector lower(const FourVector& v) { return {v[0], -v[1], -v[2], -v[3]}; }

double on_shell_energy(const ThreeVector& spatial, double mass) {
  if (!(mass >= 0.0)) throw std::invalid_argument("on_shell_energy: mass must be >= 0");
  const double p2 = spatial[0] * spatial[0] + spatial[1] * spatial[1] + spatial[2] * spatial[2];
  if (mass == 0.0 && p2 == 0.0) {
    throw std::invalid_argument("on_shell_energy: massless quantum with zero momentum");
  }
  return std::sqrt(p2 + mass * mass);
}

MassShellMomentum::MassShellMomentum(const ThreeVector& spatial, double mass)
    : spatial_(spatial), mass_(mass), energy_(on_shell_energy(spatial, mass)) {}

const char* to_string(ConeClass c) {
  switch (c) {
    case ConeClass::TimelikePlus: return "timelike_plus";
    case ConeClass::LightlikePlus: return "lightlike_plus";
    case ConeClass::TimelikeMinus: return "timelike_minus";
    case ConeClass::LightlikeMinus: return "lightlike_minus";
    case ConeClass::Spacelike: return "spacelike";
  }
  return "?";
}

ConeClass cone_classify(const FourVector& k, double tol) {
  const double k2 = minkowski_dot(k, k);
  if (k2 < -tol) return ConeClass::Spacelike;
  const bool light = std::abs(k2) <= tol;
  if (k[0] >= 0.0) return light ? ConeClass::LightlikePlus : ConeClass::TimelikePlus;
  return light ? ConeClass::LightlikeMinus : ConeClass::TimelikeMinus;
}

namespace {

// Orthonormal completion of the unit timelike direction `t` (t.t = 1) by
// Gram-Schmidt on the spatial axes x, y, z. The span of {t, x, y, z} is all of
// M^4 whenever t^0 != 0, and the orthogonal complement of t is spacelike, so
// every step normalizes a strictly negative-norm vector.
std::array<FourVector, 3> transverse_frame(const FourVector& t) {
  std::array<FourVector, 3> out{};
  for (int axis = 0; axis < 3; ++axis) {
    FourVector v{0.0, 0.0, 0.0, 0.0};
    v[static_cast<std::size_t>(axis + 1)] = 1.0;
    const double vt = minkowski_dot(v, t);
    for (std::size_t mu = 0; mu < 4; ++mu) v[mu] -= vt * t[mu];
    for (int j = 0; j < axis; ++j) {
      const auto& e = out[static_cast<std::size_t>(j)];
      const double ve = minkowski_dot(v, e);  // e.e = -1
      for (std::size_t mu = 0; mu < 4; ++mu) v[mu] += ve * e[mu];
    }
    const double n2 = -minkowski_dot(v, v);
    if (!(n2 > 0.0)) throw std::logic_error("transverse_frame: degenerate seed");
    const double n = std::sqrt(n2);
    for (auto& c : v) c /= n;
    out[static_cast<std::size_t>(axis)] = v;
  }
  return out;
}

}  // namespace

SpacetimePolarizations build_spacetime_polarizations(const MassShellMomentum& k, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("build_spacetime_polarizations: mu must be > 0");
  if (std::abs(k.mass() - mu) > 1e-12 * std::max(1.0, mu)) {
    throw std::invalid_argument("build_spacetime_polarizations: k is not on the mass shell of mu");
  }
  const FourVector kv = k.four_vector();
  FourVector t{kv[0] / mu, kv[1] / mu, kv[2] / mu, kv[3] / mu};
  const auto frame = transverse_frame(t);
  return {{t, frame[0], frame[1], frame[2]}};
}

InnerPolarizations build_inner_polarizations(const FourVector& big_k) {
  const double k2 = minkowski_dot(big_k, big_k);
  if (k2 < 0.0) throw std::invalid_argument("build_inner_polarizations: K is spacelike");
  if (k2 == 0.0) throw std::invalid_argument("build_inner_polarizations: K^2 = 0, projector is singular");
  const double n = std::sqrt(k2);
  FourVector t{big_k[0] / n, big_k[1] / n, big_k[2] / n, big_k[3] / n};
  return {transverse_frame(t)};
}

Matrix4d spacetime_completeness_residual(const SpacetimePolarizations& pol, const FourVector& k, double mu) {
  Matrix4d r;
  for (int rho = 0; rho < 4; ++rho) {
    for (int sigma = 0; sigma < 4; ++sigma) {
      double sum = 0.0;
      for (std::size_t g = 1; g < 4; ++g) sum += pol.eps[g][rho] * pol.eps[g][sigma];
      r(rho, sigma) = sum - (-metric(rho, sigma) + k[rho] * k[sigma] / (mu * mu));
    }
  }
  return r;
}

Matrix4d inner_completeness_residual(const InnerPolarizations& pol, const FourVector& big_k) {
  const FourVector kl = lower(big_k);
  const double k2 = minkowski_dot(big_k, big_k);
  Matrix4d r;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      double sum = 0.0;
      for (const auto& e : pol.eps) {
        const FourVector el = lower(e);
        sum += el[a] * el[b];
      }
      r(a, b) = sum - (-metric(a, b) + kl[a] * kl[b] / k2);
    }
  }
  return r;
}

GammaAlgebra::GammaAlgebra() {
  using C = std::complex<double>;
  const C i{0.0, 1.0};
  gamma_[0] = Matrix4cd::Zero();
  gamma_[0].diagonal() << 1.0, 1.0, -1.0, -1.0;

  // gamma^j = [[0, sigma^j], [-sigma^j, 0]]
  const std::array<Eigen::Matrix2cd, 3> pauli = [&] {
    std::array<Eigen::Matrix2cd, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -i, i, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  for (std::size_t j = 0; j < 3; ++j) {
    Matrix4cd g = Matrix4cd::Zero();
    g.block<2, 2>(0, 2) = pauli[j];
    g.block<2, 2>(2, 0) = -pauli[j];
    gamma_[j + 1] = g;
  }
}

Matrix4cd GammaAlgebra::slash(const FourVector& k) const {
  const FourVector kl = lower(k);
  Matrix4cd out = Matrix4cd::Zero();
  for (std::size_t mu = 0; mu < 4; ++mu) out += kl[mu] * gamma_[mu];
  return out;
}

Matrix4cd GammaAlgebra::anticommutator(int mu, int nu) const {
  return gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
}

const GammaAlgebra& GammaAlgebra::instance() {
  static const GammaAlgebra algebra;
  return algebra;
}

Eigen::RowVector4cd DiracSpinor::bar() const {
  return components.adjoint() * GammaAlgebra::instance().gamma(0);
}

DiracSpinor dirac_spinor(const MassShellMomentum& k, int spin, SpinorKind kind) {
  const double m = k.mass();
  if (!(m > 0.0)) throw std::invalid_argument("dirac_spinor: mass must be > 0");
  if (spin != 1 && spin != 2) throw std::invalid_argument("dirac_spinor: spin must be 1 or 2");

  // Boost of the rest-frame spinor: u = (kslash + m) u0 / sqrt(2m(E+m)),
  // v = (-kslash + m) v0 / sqrt(2m(E+m)).
  const auto& g = GammaAlgebra::instance();
  const FourVector kv = k.four_vector();
  Vector4cd rest = Vector4cd::Zero();
  const int slot = (kind == SpinorKind::U ? 0 : 2) + (spin - 1);
  rest(slot) = 1.0;
  const Matrix4cd numerator = kind == SpinorKind::U
                                  ? Matrix4cd(g.slash(kv) + m * Matrix4cd::Identity())
                                  : Matrix4cd(-g.slash(kv) + m * Matrix4cd::Identity());
  const double norm = std::sqrt(2.0 * m * (k.energy() + m));
  return {numerator * rest / norm, kind, spin, kv, m};
}

Matrix4cd spin_sum(const MassShellMomentum& k, SpinorKind kind) {
  Matrix4cd sum = Matrix4cd::Zero();
  for (int s = 1; s <= 2; ++s) {
    const auto psi = dirac_spinor(k, s, kind);
    sum += psi.components * psi.bar();
  }
  return sum;
}

}  // namespace gravfock::kinematics
