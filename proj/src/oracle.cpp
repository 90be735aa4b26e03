#include "xxtsi/oracle.hpp"

#include <lapacke.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace xxtsi {

RingHamiltonian build_ring(int n_sites, const ModelParams& p) {
  if (n_sites < 16 || n_sites % 2 != 0)
    throw std::invalid_argument("ring size must be even and at least 16");
  const ModelParams params = validate_params(p);

  RingHamiltonian h;
  h.n_sites = n_sites;
  h.hop_nn = params.j_nn / 2.0;
  h.hop_nnn = -params.j_tsi / 4.0;
  h.matrix.assign(static_cast<std::size_t>(n_sites) * n_sites, 0.0);

  auto at = [&](int r, int c) -> double& {
    return h.matrix[static_cast<std::size_t>(c) * n_sites + r];
  };
  for (int i = 0; i < n_sites; ++i) {
    const int i1 = (i + 1) % n_sites;
    const int i2 = (i + 2) % n_sites;
    at(i, i1) += h.hop_nn;
    at(i1, i) += h.hop_nn;
    at(i, i2) += h.hop_nnn;
    at(i2, i) += h.hop_nnn;
  }
  return h;
}

double ring_time_limit(const RingHamiltonian& h, const ModelParams& p) {
  const double v = max_group_speed(p);
  if (v <= 0.0) return 1e300;
  return (h.n_sites / 2.0 - 8.0) / v;
}

RingPropagator::RingPropagator(const RingHamiltonian& h)
    : n_(h.n_sites), eigenvalues_(h.n_sites), vectors_(h.matrix) {
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n_,
                                         vectors_.data(), n_,
                                         eigenvalues_.data());
  if (info != 0)
    throw std::domain_error("ring eigendecomposition failed to converge");
}

namespace {

void check_normalized(const std::vector<cplx>& psi0, int n) {
  if (static_cast<int>(psi0.size()) != n)
    throw std::invalid_argument("state length does not match ring size");
  double norm2 = 0.0;
  for (const cplx& a : psi0) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument("initial state must be normalized");
}

}  // namespace

std::vector<cplx> RingPropagator::propagate(const std::vector<cplx>& psi0,
                                            double t) const {
  check_normalized(psi0, n_);

  // g = V^T psi0 (complex input against real columns).
  std::vector<cplx> g(n_, cplx(0.0, 0.0));
  for (int q = 0; q < n_; ++q) {
    const double* col = vectors_.data() + static_cast<std::size_t>(q) * n_;
    cplx acc(0.0, 0.0);
    for (int i = 0; i < n_; ++i) acc += col[i] * psi0[i];
    g[q] = acc;
  }
  for (int q = 0; q < n_; ++q)
    g[q] *= std::polar(1.0, -eigenvalues_[q] * t);

  std::vector<cplx> psi(n_, cplx(0.0, 0.0));
  for (int q = 0; q < n_; ++q) {
    const double* col = vectors_.data() + static_cast<std::size_t>(q) * n_;
    const cplx gq = g[q];
    for (int i = 0; i < n_; ++i) psi[i] += col[i] * gq;
  }
  return psi;
}

std::vector<std::vector<cplx>> RingPropagator::propagate_sites(
    const std::vector<cplx>& psi0, const std::vector<int>& sites,
    const std::vector<double>& times) const {
  check_normalized(psi0, n_);
  for (int s : sites)
    if (s < 0 || s >= n_)
      throw std::invalid_argument("site index outside ring");

  std::vector<cplx> g(n_, cplx(0.0, 0.0));
  for (int q = 0; q < n_; ++q) {
    const double* col = vectors_.data() + static_cast<std::size_t>(q) * n_;
    cplx acc(0.0, 0.0);
    for (int i = 0; i < n_; ++i) acc += col[i] * psi0[i];
    g[q] = acc;
  }

  std::vector<std::vector<cplx>> out(times.size());
  std::vector<cplx> phased(n_);
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    const double t = times[ti];
    for (int q = 0; q < n_; ++q)
      phased[q] = g[q] * std::polar(1.0, -eigenvalues_[q] * t);
    out[ti].resize(sites.size());
    for (std::size_t si = 0; si < sites.size(); ++si) {
      const int row = sites[si];
      cplx acc(0.0, 0.0);
      for (int q = 0; q < n_; ++q)
        acc += vectors_[static_cast<std::size_t>(q) * n_ + row] * phased[q];
      out[ti][si] = acc;
    }
  }
  return out;
}

std::vector<cplx> ring_propagate(const RingHamiltonian& h,
                                 const std::vector<cplx>& psi0, double t) {
  return RingPropagator(h).propagate(psi0, t);
}

std::vector<cplx> ring_bell_state(int n_sites, int m, double phi) {
  if (n_sites < 2) throw std::invalid_argument("ring too small");
  if (m < 0 || m + 1 >= n_sites)
    throw std::invalid_argument("pair site outside ring");
  std::vector<cplx> psi0(n_sites, cplx(0.0, 0.0));
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  psi0[m] = cplx(inv_sqrt2, 0.0);
  psi0[m + 1] = std::polar(inv_sqrt2, phi);
  return psi0;
}

double bessel_j(int n, double x) {
  if (n < 0) {
    const double v = bessel_j(-n, x);
    return (n % 2 == 0) ? v : -v;
  }
  if (x < 0.0) {
    const double v = bessel_j(n, -x);
    return (n % 2 == 0) ? v : -v;
  }
  if (x < 1e-8) {
    // Leading series terms; the dropped corrections are O(x^2) <= 1e-16.
    if (n == 0) return 1.0;
    if (n == 1) return x / 2.0;
    return 0.0;
  }

  // Miller's downward recurrence, normalized by J0 + 2*sum J_{2m} = 1.
  // Entering iteration k, jc holds the (unnormalized) J_{k+1} and jp holds
  // J_{k+2}; the recurrence produces J_k.
  const int start =
      std::max(n, static_cast<int>(x)) +
      static_cast<int>(15.0 * std::cbrt(x)) + 20;
  double jp = 0.0;
  double jc = 1e-30;
  double sum = 0.0;
  double result = 0.0;
  for (int k = start; k >= 0; --k) {
    const double jm = (2.0 * (k + 1) / x) * jc - jp;
    jp = jc;
    jc = jm;
    if (k == n) result = jc;
    if (k > 0 && k % 2 == 0) sum += 2.0 * jc;
    // Rescale to avoid overflow of the unnormalized recurrence.
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      sum *= 1e-250;
      result *= 1e-250;
    }
  }
  sum += jc;  // the k = 0 term
  return result / sum;
}

double bessel_reference(BesselCase c, double t) {
  switch (c) {
    case BesselCase::alpha_zero: {
      const double j0 = bessel_j(0, t);
      const double j1 = bessel_j(1, t);
      return j0 * j0 + j1 * j1;
    }
    case BesselCase::pure_tsi: {
      const double j0 = bessel_j(0, t / 2.0);
      return j0 * j0;
    }
  }
  throw std::invalid_argument("unknown reference case");
}

}  // namespace xxtsi
