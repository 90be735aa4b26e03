#include "xxtsi/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xxtsi {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kPhaseBlock = 256;  // exact-phase refresh interval
}  // namespace

std::vector<double> momentum_grid(int n_k) {
  std::vector<double> k(n_k);
  for (int q = 0; q < n_k; ++q) k[q] = -kPi + 2.0 * kPi * q / n_k;
  return k;
}

cplx momentum_amplitude(double k, double t, const QuenchState& s) {
  const double eps = dispersion_eval(k, s.params);
  return std::polar(1.0, k * s.m - eps * t) *
         (1.0 + std::polar(1.0, k + s.phi));
}

cplx site_amplitude(int j, double t, const QuenchState& s) {
  const int n_k = s.params.n_k;
  cplx acc = 0.0;
  for (int q = 0; q < n_k; ++q) {
    const double k = -kPi + 2.0 * kPi * q / n_k;
    acc += momentum_amplitude(k, t, s) * std::polar(1.0, -k * j);
  }
  return acc / (std::sqrt(2.0) * static_cast<double>(n_k));
}

PairCorrelators correlators_from_amplitudes(cplx a_i, cplx a_j) {
  PairCorrelators c;
  c.z = std::conj(a_i) * a_j;
  c.n_i = std::norm(a_i);
  c.n_j = std::norm(a_j);
  c.x_plus = c.n_i * c.n_j - std::norm(c.z);
  c.x_minus = 1.0 - c.n_i - c.n_j + c.x_plus;
  c.y_plus = c.n_i - c.x_plus;
  c.y_minus = c.n_j - c.x_plus;
  return c;
}

PairCorrelators pair_correlators(int i, double t, const QuenchState& s) {
  return correlators_from_amplitudes(site_amplitude(i, t, s),
                                     site_amplitude(i + 1, t, s));
}

PairCorrelators pair_correlators_integral(int i, double t,
                                          const QuenchState& s) {
  // The defining correlator integrals are double sums over (k, k') of
  // f*(k) f(k') e^{i(k j - k' j')} / (2 n_k^2). The integrand separates, so
  // each is the product of two single quadratures B_j = sum_k f(k) e^{-i k j}.
  const int n_k = s.params.n_k;
  cplx b_i = 0.0, b_j = 0.0;
  for (int q = 0; q < n_k; ++q) {
    const double k = -kPi + 2.0 * kPi * q / n_k;
    const cplx f = momentum_amplitude(k, t, s);
    b_i += f * std::polar(1.0, -k * i);
    b_j += f * std::polar(1.0, -k * (i + 1));
  }
  const double scale = 1.0 / (2.0 * static_cast<double>(n_k) * n_k);
  PairCorrelators c;
  c.z = std::conj(b_i) * b_j * scale;
  c.n_i = std::norm(b_i) * scale;
  c.n_j = std::norm(b_j) * scale;
  c.x_plus = c.n_i * c.n_j - std::norm(c.z);
  c.x_minus = 1.0 - c.n_i - c.n_j + c.x_plus;
  c.y_plus = c.n_i - c.x_plus;
  c.y_minus = c.n_j - c.x_plus;
  return c;
}

AmplitudeSeries amplitude_series(const std::vector<int>& sites, double t0,
                                 double t_max, double dt,
                                 const QuenchState& s) {
  if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
  if (t_max < t0) throw std::invalid_argument("t_max must be >= t0");

  const int n_k = s.params.n_k;
  const int n_t = static_cast<int>(std::floor((t_max - t0) / dt + 0.5)) + 1;
  const int n_s = static_cast<int>(sites.size());

  AmplitudeSeries out;
  out.times.resize(n_t);
  out.amps.assign(n_s, std::vector<cplx>(n_t));

  // Per-momentum data: dispersion, e^{-i eps dt}, and one weight per site
  // w_s(k) = e^{i k (m - site)} (1 + e^{i(k+phi)}) / (sqrt(2) n_k).
  std::vector<double> eps(n_k);
  std::vector<cplx> step(n_k), phase(n_k);
  std::vector<std::vector<cplx>> w(n_s, std::vector<cplx>(n_k));
  const double norm = 1.0 / (std::sqrt(2.0) * static_cast<double>(n_k));
  for (int q = 0; q < n_k; ++q) {
    const double k = -kPi + 2.0 * kPi * q / n_k;
    eps[q] = dispersion_eval(k, s.params);
    step[q] = std::polar(1.0, -eps[q] * dt);
    const cplx base = (1.0 + std::polar(1.0, k + s.phi)) * norm;
    for (int si = 0; si < n_s; ++si)
      w[si][q] = std::polar(1.0, k * (s.m - sites[si])) * base;
  }

  for (int n = 0; n < n_t; ++n) {
    const double t = t0 + n * dt;
    out.times[n] = t;
    if (n % kPhaseBlock == 0) {
      for (int q = 0; q < n_k; ++q) phase[q] = std::polar(1.0, -eps[q] * t);
    } else {
      for (int q = 0; q < n_k; ++q) phase[q] *= step[q];
    }
    for (int si = 0; si < n_s; ++si) {
      const cplx* wq = w[si].data();
      cplx acc = 0.0;
      for (int q = 0; q < n_k; ++q) acc += wq[q] * phase[q];
      out.amps[si][n] = acc;
    }
  }
  return out;
}

}  // namespace xxtsi
