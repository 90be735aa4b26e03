#pragma once

#include <vector>

#include "xxtsi/dynamics.hpp"

namespace xxtsi {

// Finite ring with the single-particle hopping matrix whose spectrum is the
// dispersion on the n_sites-point momentum grid: NN entries j_nn/2, NNN
// entries -j_tsi/4, periodic wrap-around.
struct RingHamiltonian {
  int n_sites = 0;
  double hop_nn = 0.0;   // value of the NN matrix element
  double hop_nnn = 0.0;  // value of the NNN matrix element
  std::vector<double> matrix;  // n x n, column-major, real symmetric
};

// Throws std::invalid_argument for odd or < 16 n_sites.
RingHamiltonian build_ring(int n_sites, const ModelParams& p);

// Largest |t| for which wrap-around stays below double-precision noise:
// refuse comparisons when max_group_speed * t > n_sites/2 - 8.
double ring_time_limit(const RingHamiltonian& h, const ModelParams& p);

// Cached dense eigendecomposition of a ring Hamiltonian.
class RingPropagator {
 public:
  explicit RingPropagator(const RingHamiltonian& h);

  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  int n_sites() const { return n_; }

  // psi(t) = V e^{-i L t} V^T psi0. psi0 must be normalized (1e-9), else
  // std::invalid_argument.
  std::vector<cplx> propagate(const std::vector<cplx>& psi0, double t) const;

  // Amplitudes at selected sites only, one vector per time.
  std::vector<std::vector<cplx>> propagate_sites(
      const std::vector<cplx>& psi0, const std::vector<int>& sites,
      const std::vector<double>& times) const;

 private:
  int n_;
  std::vector<double> eigenvalues_;
  std::vector<double> vectors_;  // column-major V
};

// One-shot convenience (decomposes h); intended for small test rings.
std::vector<cplx> ring_propagate(const RingHamiltonian& h,
                                 const std::vector<cplx>& psi0, double t);

// Bell-pair initial amplitudes on the ring: psi0[m] = 1/sqrt(2),
// psi0[m+1] = e^{i phi}/sqrt(2).
std::vector<cplx> ring_bell_state(int n_sites, int m, double phi);

// Bessel J_n by Miller's downward recurrence with sum normalization;
// independent of the quadrature code paths.
double bessel_j(int n, double x);

// Closed-form concurrence of the system pair in the two limits:
// alpha_zero: J0(t)^2 + J1(t)^2; pure_tsi: J0(t/2)^2.
enum class BesselCase { alpha_zero, pure_tsi };
double bessel_reference(BesselCase c, double t);

}  // namespace xxtsi
