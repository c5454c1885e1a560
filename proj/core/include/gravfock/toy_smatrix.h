#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gravfock {

/// Basis state of a truncated graded Fock space: a list of quanta, each
/// labelled by a discrete inertial momentum k and inner momentum K.
struct ToyBasisState {
  std::vector<std::pair<int, int>> quanta;

  std::size_t particles() const { return quanta.size(); }
  /// Every quantum has K = k.
  bool physical() const;
  std::string to_string() const;
};

struct ToySMatrix {
  std::vector<ToyBasisState> basis;
  Eigen::MatrixXcd s;
  Eigen::MatrixXcd p;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  std::optional<Eigen::Index> vacuum() const;

  /// One-quantum basis over labels 0..n-1 for k and K (dimension n^2) with S = 1.
  static ToySMatrix one_quantum_identity(int n);
  /// Diagonal projector onto the physical basis states.
  static Eigen::MatrixXcd physical_projector(const std::vector<ToyBasisState>& basis);
};

/// Haar-distributed unitary of size n (QR of a complex Gaussian matrix).
Eigen::MatrixXcd haar_unitary(Eigen::Index n, std::mt19937_64& rng);

/// Random S over the one-quantum basis of dimension n^2, block diagonal with
/// independent Haar blocks on the physical and unphysical subspaces, so SP = PS.
ToySMatrix random_block_instance(int n, std::mt19937_64& rng);

struct UnitarityReport {
  double unitarity_residual{0.0};   // |S^dag S - 1|
  double projector_residual{0.0};   // max(|P^2 - P|, |P^dag - P|)
  double commutator_residual{0.0};  // |SP - PS|
  double conclusion_residual{0.0};  // |P S^dag S P - P|
  bool preconditions_hold{false};
  /// Only true when the preconditions hold and the conclusion is within tolerance.
  bool passed{false};
  std::vector<std::string> precondition_failures;
  std::string detail;
};

UnitarityReport toy_unitarity_check(const ToySMatrix& t, double tol);

struct BasisViolation {
  Eigen::Index index{0};
  std::string state;
  std::string message;
};

struct InvarianceReport {
  /// Phase alpha of the vacuum amplitude; S is rephased by exp(-i alpha) before
  /// the one-particle checks.
  double vacuum_phase{0.0};
  bool rephased{false};
  std::vector<BasisViolation> violations;
  bool passed{false};
};

InvarianceReport vacuum_and_one_particle_checks(const ToySMatrix& t, double tol);

/// Constructed instances used by the checks and tests.
namespace toy {
/// 2x2 unitary swapping a physical and an unphysical state: SP != PS.
ToySMatrix noncommuting_swap();
/// Vacuum, one- and two-particle sectors with S = exp(i alpha) on the vacuum and 1 elsewhere.
ToySMatrix vacuum_phase(double alpha);
/// Rotation by theta between a one-particle and a two-particle state.
ToySMatrix one_two_mixing(double theta);
/// Vacuum, one- and two-particle sectors with S = 1.
ToySMatrix graded_identity();
}  // namespace toy

}  // namespace gravfock
