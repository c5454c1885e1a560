#include <doctest.h>

#include <cmath>
#include <random>

#include "gravfock/toy_smatrix.h"

using namespace gravfock;

TEST_CASE("Haar unitaries are unitary") {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 5, 16}) {
    const Eigen::MatrixXcd u = haar_unitary(n, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);
  }
}

TEST_CASE("one-quantum basis and projector") {
  const auto t = ToySMatrix::one_quantum_identity(4);
  CHECK(t.dim() == 16);
  CHECK(t.p.trace().real() == doctest::Approx(4.0));
  CHECK((t.p * t.p - t.p).norm() == 0.0);
  CHECK_FALSE(t.vacuum().has_value());
}

TEST_CASE("projected unitarity on random block instances") {
  std::mt19937_64 rng(17);
  for (int n : {2, 4, 8}) {
    for (int i = 0; i < 20; ++i) {
      const auto t = random_block_instance(n, rng);
      CHECK(t.dim() == n * n);
      const auto rep = toy_unitarity_check(t, 1e-12);
      CHECK(rep.preconditions_hold);
      CHECK(rep.passed);
      const Eigen::MatrixXcd lhs = t.p * t.s.adjoint() * t.s * t.p;
      CHECK((lhs - t.p).norm() <= 1e-12);
    }
  }
}

TEST_CASE("a swap between physical and unphysical states breaks a precondition") {
  const auto rep = toy_unitarity_check(toy::noncommuting_swap(), 1e-12);
  CHECK_FALSE(rep.preconditions_hold);
  CHECK_FALSE(rep.passed);
  CHECK_FALSE(rep.precondition_failures.empty());
  CHECK(rep.commutator_residual > 0.5);
}

TEST_CASE("vacuum phase is removed before the one-particle checks") {
  const auto rep = vacuum_and_one_particle_checks(toy::vacuum_phase(0.7), 1e-12);
  CHECK(rep.passed);
  CHECK(rep.rephased);
  CHECK(rep.vacuum_phase == doctest::Approx(0.7));
  CHECK(vacuum_and_one_particle_checks(toy::graded_identity(), 1e-12).passed);
}

TEST_CASE("one-to-two particle mixing is reported") {
  const auto rep = vacuum_and_one_particle_checks(toy::one_two_mixing(0.3), 1e-12);
  CHECK_FALSE(rep.passed);
  CHECK_FALSE(rep.violations.empty());
  CHECK(vacuum_and_one_particle_checks(toy::one_two_mixing(0.0), 1e-12).passed);
}

TEST_CASE("basis state labels") {
  CHECK(ToyBasisState{{{1, 1}, {2, 2}}}.physical());
  CHECK_FALSE(ToyBasisState{{{1, 0}}}.physical());
  CHECK(ToyBasisState{}.physical());
}
