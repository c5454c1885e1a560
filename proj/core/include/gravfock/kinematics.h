#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace gravfock::kinematics {

/// Contravariant components (x^0, x^1, x^2, x^3) in natural units.
using FourVector = std::array<double, 4>;
using ThreeVector = std::array<double, 3>;

using Matrix4cd = Eigen::Matrix4cd;
using Vector4cd = Eigen::Vector4cd;
using Matrix4d = Eigen::Matrix4d;

/// Metric component eta^{mu nu} = eta_{mu nu} = diag(1,-1,-1,-1).
constexpr double metric(int mu, int nu) { return mu != nu ? 0.0 : (mu == 0 ? 1.0 : -1.0); }

double minkowski_dot(const FourVector& a, const FourVector& b);
FourVector lower(const FourVector& v);

/// Throws std::invalid_argument for a negative mass or for a massless quantum at
/// zero spatial momentum.
double on_shell_energy(const ThreeVector& spatial, double mass);

/// A momentum on its mass shell; the energy is derived at construction.
class MassShellMomentum {
 public:
  MassShellMomentum(const ThreeVector& spatial, double mass);

  const ThreeVector& spatial() const { return spatial_; }
  double mass() const { return mass_; }
  double energy() const { return energy_; }
  FourVector four_vector() const { return {energy_, spatial_[0], spatial_[1], spatial_[2]}; }

 private:
  ThreeVector spatial_;
  double mass_;
  double energy_;
};

enum class ConeClass { TimelikePlus, LightlikePlus, TimelikeMinus, LightlikeMinus, Spacelike };

const char* to_string(ConeClass c);

/// Classification by K^2 and sign(K^0). `tol` absorbs rounding when deciding K^2 == 0;
/// the zero vector is lightlike.
ConeClass cone_classify(const FourVector& k, double tol = 0.0);

inline bool in_support(ConeClass c) { return c != ConeClass::Spacelike; }

/// eps(k, gamma), gamma = 0..3, contravariant. eps(k,0) = k/mu; eps(k,1..3) from
/// Gram-Schmidt on the seed frame (x, y, z) in the Minkowski metric.
struct SpacetimePolarizations {
  std::array<FourVector, 4> eps;
};

/// E(K, Gamma), Gamma = 1..3 stored at indices 0..2, contravariant.
struct InnerPolarizations {
  std::array<FourVector, 3> eps;
  const FourVector& operator()(int big_gamma) const { return eps.at(static_cast<std::size_t>(big_gamma - 1)); }
};

/// Requires mu > 0 and k on the mass shell of mass mu.
SpacetimePolarizations build_spacetime_polarizations(const MassShellMomentum& k, double mu);

/// Requires K^2 > 0. Lightlike K is rejected: the completeness projector divides by K^2.
InnerPolarizations build_inner_polarizations(const FourVector& big_k);

/// sum_{gamma=1..3} eps^rho eps^sigma - (-eta^{rho sigma} + k^rho k^sigma / mu^2), entrywise.
Matrix4d spacetime_completeness_residual(const SpacetimePolarizations& pol, const FourVector& k, double mu);

/// sum_Gamma E_alpha E_beta - (-eta_{alpha beta} + K_alpha K_beta / K^2), entrywise (lower indices).
Matrix4d inner_completeness_residual(const InnerPolarizations& pol, const FourVector& big_k);

/// Gamma matrices in the Dirac (standard) representation.
class GammaAlgebra {
 public:
  GammaAlgebra();

  const Matrix4cd& gamma(int mu) const { return gamma_.at(static_cast<std::size_t>(mu)); }
  /// k-slash = gamma^mu k_mu for contravariant k.
  Matrix4cd slash(const FourVector& k) const;
  /// {gamma^mu, gamma^nu}
  Matrix4cd anticommutator(int mu, int nu) const;

  static const GammaAlgebra& instance();

 private:
  std::array<Matrix4cd, 4> gamma_;
};

enum class SpinorKind { U, V };

/// Free Dirac spinor with normalization u-bar u = 1, v-bar v = -1.
struct DiracSpinor {
  Vector4cd components;
  SpinorKind kind;
  int spin;
  FourVector momentum;
  double mass;

  /// psi-bar = psi^dagger gamma^0 as a row vector.
  Eigen::RowVector4cd bar() const;
};

/// Throws for m = 0 or spin outside {1, 2}.
DiracSpinor dirac_spinor(const MassShellMomentum& k, int spin, SpinorKind kind);

/// sum_s psi psi-bar for the given kind.
Matrix4cd spin_sum(const MassShellMomentum& k, SpinorKind kind);

}  // namespace gravfock::kinematics
