#include "gravfock/toy_smatrix.h"

#include <cmath>
#include <complex>
#include <sstream>

namespace gravfock {

using cd = std::complex<double>;

bool ToyBasisState::physical() const {
  for (const auto& [k, big_k] : quanta)
    if (k != big_k) return false;
  return true;
}

std::string ToyBasisState::to_string() const {
  if (quanta.empty()) return "|0>";
  std::ostringstream os;
  os << "|";
  for (std::size_t i = 0; i < quanta.size(); ++i) {
    if (i) os << ",";
    os << "(" << quanta[i].first << ";" << quanta[i].second << ")";
  }
  os << ">";
  return os.str();
}

std::optional<Eigen::Index> ToySMatrix::vacuum() const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].quanta.empty()) return static_cast<Eigen::Index>(i);
  return std::nullopt;
}

Eigen::MatrixXcd ToySMatrix::physical_projector(const std::vector<ToyBasisState>& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (basis[static_cast<std::size_t>(i)].physical()) p(i, i) = 1.0;
  return p;
}

ToySMatrix ToySMatrix::one_quantum_identity(int n) {
  ToySMatrix t;
  for (int k = 0; k < n; ++k)
    for (int big_k = 0; big_k < n; ++big_k) t.basis.push_back({{{k, big_k}}});
  t.s = Eigen::MatrixXcd::Identity(t.dim(), t.dim());
  t.p = physical_projector(t.basis);
  return t;
}

Eigen::MatrixXcd haar_unitary(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r) g(r, c) = cd(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0.0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

ToySMatrix random_block_instance(int n, std::mt19937_64& rng) {
  ToySMatrix t = ToySMatrix::one_quantum_identity(n);
  std::vector<Eigen::Index> phys, unphys;
  for (Eigen::Index i = 0; i < t.dim(); ++i) (t.basis[static_cast<std::size_t>(i)].physical() ? phys : unphys).push_back(i);
  const auto embed = [&](const std::vector<Eigen::Index>& idx) {
    const Eigen::MatrixXcd u = haar_unitary(static_cast<Eigen::Index>(idx.size()), rng);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        t.s(idx[r], idx[c]) = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  };
  t.s.setZero();
  embed(phys);
  if (!unphys.empty()) embed(unphys);
  return t;
}

UnitarityReport toy_unitarity_check(const ToySMatrix& t, double tol) {
  UnitarityReport rep;
  const auto n = t.dim();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd& s = t.s;
  const Eigen::MatrixXcd& p = t.p;
  rep.unitarity_residual = (s.adjoint() * s - id).norm();
  rep.projector_residual = std::max((p * p - p).norm(), (p.adjoint() - p).norm());
  rep.commutator_residual = (s * p - p * s).norm();
  rep.conclusion_residual = (p * s.adjoint() * s * p - p).norm();

  if (rep.unitarity_residual > tol) rep.precondition_failures.push_back("S is not unitary");
  if (rep.projector_residual > tol) rep.precondition_failures.push_back("P is not a self-adjoint projector");
  if (rep.commutator_residual > tol) rep.precondition_failures.push_back("SP != PS");
  rep.preconditions_hold = rep.precondition_failures.empty();

  std::ostringstream os;
  os.precision(3);
  if (!rep.preconditions_hold) {
    os << "precondition violated:";
    for (const auto& f : rep.precondition_failures) os << " " << f << ";";
    os << " conclusion not claimed";
  } else {
    rep.passed = rep.conclusion_residual <= tol;
    os << "|PS^dag SP - P| = " << std::scientific << rep.conclusion_residual;
  }
  rep.detail = os.str();
  return rep;
}

InvarianceReport vacuum_and_one_particle_checks(const ToySMatrix& t, double tol) {
  InvarianceReport rep;
  Eigen::MatrixXcd s = t.s;
  const auto vac = t.vacuum();
  const auto violation = [&](Eigen::Index i, std::string msg) {
    rep.violations.push_back({i, t.basis[static_cast<std::size_t>(i)].to_string(), std::move(msg)});
  };

  if (!vac) {
    rep.violations.push_back({-1, "|0>", "basis has no vacuum vector"});
  } else {
    const cd s00 = s(*vac, *vac);
    for (Eigen::Index i = 0; i < t.dim(); ++i) {
      if (i != *vac && std::abs(s(i, *vac)) > tol) violation(i, "vacuum scatters into this state");
    }
    if (std::abs(std::abs(s00) - 1.0) > tol) {
      violation(*vac, "vacuum amplitude has modulus " + std::to_string(std::abs(s00)));
    } else {
      rep.vacuum_phase = std::arg(s00);
      if (std::abs(rep.vacuum_phase) > tol) {
        s *= std::polar(1.0, -rep.vacuum_phase);
        rep.rephased = true;
      }
    }
  }

  for (Eigen::Index j = 0; j < t.dim(); ++j) {
    const auto& state = t.basis[static_cast<std::size_t>(j)];
    if (state.particles() != 1 || !state.physical()) continue;
    if (std::abs(s(j, j) - 1.0) > tol) violation(j, "one-particle diagonal element differs from 1");
    for (Eigen::Index i = 0; i < t.dim(); ++i) {
      if (i != j && std::abs(s(i, j)) > tol) violation(i, "one-particle state " + state.to_string() + " scatters into this state");
    }
  }
  rep.passed = rep.violations.empty();
  return rep;
}

namespace toy {

namespace {
ToySMatrix graded(int n) {
  ToySMatrix t;
  t.basis.push_back({});
  for (int k = 0; k < n; ++k) t.basis.push_back({{{k, k}}});
  t.basis.push_back({{{0, 0}, {1, 1}}});
  t.basis.push_back({{{0, 1}}});
  t.s = Eigen::MatrixXcd::Identity(t.dim(), t.dim());
  t.p = ToySMatrix::physical_projector(t.basis);
  return t;
}
}  // namespace

ToySMatrix noncommuting_swap() {
  ToySMatrix t;
  t.basis = {{{{0, 0}}}, {{{0, 1}}}};
  t.s = Eigen::MatrixXcd::Zero(2, 2);
  t.s(0, 1) = 1.0;
  t.s(1, 0) = 1.0;
  t.p = ToySMatrix::physical_projector(t.basis);
  return t;
}

ToySMatrix graded_identity() { return graded(2); }

ToySMatrix vacuum_phase(double alpha) {
  ToySMatrix t = graded(2);
  t.s *= std::polar(1.0, alpha);
  return t;
}

ToySMatrix one_two_mixing(double theta) {
  ToySMatrix t = graded(2);
  const Eigen::Index one = 1, two = 3;
  t.s(one, one) = std::cos(theta);
  t.s(two, two) = std::cos(theta);
  t.s(one, two) = -std::sin(theta);
  t.s(two, one) = std::sin(theta);
  return t;
}

}  // namespace toy

}  // namespace gravfock
