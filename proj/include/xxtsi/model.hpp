#pragma once

namespace xxtsi {

// Which coupling is set to one and fixes the time scale.
enum class EnergyUnit { J_unit, Jprime_unit };

// Couplings and quadrature resolution for the XX chain with a three-spin
// interaction (TSI). alpha = j_tsi / j_nn, except in the pure-TSI limit
// where j_nn = 0 and alpha is not meaningful (pure_tsi replaces it).
struct ModelParams {
  double j_nn = 1.0;    // nearest-neighbor XX coupling J
  double j_tsi = 0.0;   // three-spin coupling J'
  double alpha = 0.0;   // J'/J, kept consistent by validate_params
  bool pure_tsi = false;
  EnergyUnit energy_unit = EnergyUnit::J_unit;
  int n_k = 4096;       // momentum quadrature points
};

// J-unit parameter set: j_nn = 1, j_tsi = alpha.
ModelParams make_params(double alpha, int n_k = 4096);

// Pure-TSI limit: j_nn = 0, j_tsi = 1, J'-unit time scale.
ModelParams make_pure_tsi_params(int n_k = 4096);

// Checks invariants and returns params with alpha recomputed from the
// couplings. Throws std::invalid_argument on violation.
ModelParams validate_params(const ModelParams& p);

// Single-fermion dispersion eps(k) = j_nn cos k - (j_tsi/2) cos 2k.
// 2*pi-periodic and even in k by construction.
double dispersion_eval(double k, const ModelParams& p);

// Upper bound on the group speed max|d eps/dk| <= |j_nn| + |j_tsi|.
double max_group_speed(const ModelParams& p);

}  // namespace xxtsi
