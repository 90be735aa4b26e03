#include "xxtsi/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace xxtsi {

namespace {

void check_correlators(const PairCorrelators& c) {
  const double trace = c.x_plus + c.y_plus + c.y_minus + c.x_minus;
  if (std::abs(trace - 1.0) > 1e-9)
    throw std::domain_error("correlator trace deviates from 1");
  if (c.x_plus < -1e-9 || c.x_minus < -1e-9)
    throw std::domain_error("negative X correlator beyond tolerance");
  if (std::norm(c.z) > c.y_plus * c.y_minus + 1e-9)
    throw std::domain_error("|Z|^2 exceeds Y+ Y- (positivity violation)");
  if (std::norm(c.z) > c.n_i * c.n_j + 1e-9)
    throw std::domain_error("|Z|^2 exceeds <n_i><n_j> (Cauchy-Schwarz violation)");
}

// sigma_y x sigma_y in the {uu, ud, du, dd} basis.
Eigen::Matrix4cd spin_flip_kernel() {
  Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

TwoSpinDensityMatrix build_density_matrix(const PairCorrelators& c) {
  check_correlators(c);
  TwoSpinDensityMatrix rho = TwoSpinDensityMatrix::Zero();
  rho(0, 0) = c.x_plus;
  rho(1, 1) = c.y_plus;
  rho(2, 2) = c.y_minus;
  rho(3, 3) = c.x_minus;
  rho(1, 2) = std::conj(c.z);
  rho(2, 1) = c.z;
  return rho;
}

double concurrence_raw(const PairCorrelators& c) {
  if (c.x_plus < -1e-9 || c.x_minus < -1e-9)
    throw std::domain_error("negative X correlator beyond tolerance");
  const double xp = std::max(0.0, c.x_plus);
  const double xm = std::max(0.0, c.x_minus);
  return 2.0 * (std::abs(c.z) - std::sqrt(xp * xm));
}

double concurrence_closed_form(const PairCorrelators& c) {
  return std::max(0.0, concurrence_raw(c));
}

namespace {

// For an X-state, R = rho rho~ decouples into the span of {uu, dd} and
// {ud, du}. Each 2x2 block has the form [[p q + |r|^2, 2 p r], [2 q r*,
// |r|^2 + p q]] with p, q the diagonal pair and r the coupling entry, whose
// eigenvalues are (sqrt(p q) +- |r|)^2. Returning sqrt(pq) +- |r| directly
// avoids squaring-then-rooting the near-cancelling difference, keeping the
// tiny lambdas at full absolute accuracy; a dense eigensolver only resolves
// them to sqrt(machine-eps) and would miss the 1e-10 equivalence target.
void block_lambdas(double p, double q, double r_abs, double* lo, double* hi) {
  const double root = std::sqrt(std::max(0.0, p) * std::max(0.0, q));
  *hi = root + r_abs;
  *lo = std::abs(root - r_abs);
}

double wootters_from_lambdas(std::array<double, 4> lambda) {
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

}  // namespace

double concurrence_wootters(const TwoSpinDensityMatrix& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::domain_error("density matrix is not Hermitian");
  {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho,
                                                       Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
      throw std::domain_error("density matrix is not positive semidefinite");
  }

  const double off = std::abs(rho(0, 1)) + std::abs(rho(0, 2)) +
                     std::abs(rho(1, 3)) + std::abs(rho(2, 3));
  if (off <= 1e-14) {
    // X structure: blocks {uu, dd} and {ud, du} evolve independently under
    // the spin flip, so the four lambdas come in stable two-by-two pairs.
    std::array<double, 4> lambda;
    block_lambdas(rho(0, 0).real(), rho(3, 3).real(), std::abs(rho(0, 3)),
                  &lambda[0], &lambda[1]);
    block_lambdas(rho(1, 1).real(), rho(2, 2).real(), std::abs(rho(1, 2)),
                  &lambda[2], &lambda[3]);
    return wootters_from_lambdas(lambda);
  }

  // General 4x4 fallback: eigenvalues of R = rho rho~ via a dense solver.
  const Eigen::Matrix4cd y = spin_flip_kernel();
  const Eigen::Matrix4cd r = rho * (y * rho.conjugate() * y);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> er(r, false);
  std::array<double, 4> lambda;
  for (int i = 0; i < 4; ++i) {
    const double mu = er.eigenvalues()(i).real();
    if (mu < -1e-10)
      throw std::domain_error("R eigenvalue negative beyond tolerance");
    lambda[i] = std::sqrt(std::max(0.0, mu));
  }
  return wootters_from_lambdas(lambda);
}

}  // namespace xxtsi
