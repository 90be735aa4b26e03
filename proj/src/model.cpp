#include "xxtsi/model.hpp"

#include <cmath>
#include <stdexcept>

namespace xxtsi {

ModelParams make_params(double alpha, int n_k) {
  ModelParams p;
  p.j_nn = 1.0;
  p.j_tsi = alpha;
  p.alpha = alpha;
  p.pure_tsi = false;
  p.energy_unit = EnergyUnit::J_unit;
  p.n_k = n_k;
  return p;
}

ModelParams make_pure_tsi_params(int n_k) {
  ModelParams p;
  p.j_nn = 0.0;
  p.j_tsi = 1.0;
  p.alpha = 0.0;
  p.pure_tsi = true;
  p.energy_unit = EnergyUnit::Jprime_unit;
  p.n_k = n_k;
  return p;
}

ModelParams validate_params(const ModelParams& p) {
  if (p.n_k < 64 || p.n_k % 2 != 0)
    throw std::invalid_argument("n_k must be even and at least 64");

  ModelParams q = p;
  if (q.pure_tsi) {
    if (q.j_nn != 0.0)
      throw std::invalid_argument("pure_tsi requires j_nn = 0");
    q.energy_unit = EnergyUnit::Jprime_unit;  // forced by the flag
    if (std::abs(std::abs(q.j_tsi) - 1.0) > 1e-12)
      throw std::invalid_argument("J'-unit time scale requires |j_tsi| = 1");
    q.alpha = 0.0;  // not meaningful in this limit
    return q;
  }

  if (q.j_nn == 0.0)
    throw std::invalid_argument("j_nn = 0 requires the pure_tsi flag");
  if (q.energy_unit == EnergyUnit::J_unit && std::abs(std::abs(q.j_nn) - 1.0) > 1e-12)
    throw std::invalid_argument("J-unit time scale requires |j_nn| = 1");
  if (q.energy_unit == EnergyUnit::Jprime_unit && std::abs(std::abs(q.j_tsi) - 1.0) > 1e-12)
    throw std::invalid_argument("J'-unit time scale requires |j_tsi| = 1");

  q.alpha = q.j_tsi / q.j_nn;
  return q;
}

double dispersion_eval(double k, const ModelParams& p) {
  return p.j_nn * std::cos(k) - 0.5 * p.j_tsi * std::cos(2.0 * k);
}

double max_group_speed(const ModelParams& p) {
  return std::abs(p.j_nn) + std::abs(p.j_tsi);
}

}  // namespace xxtsi
