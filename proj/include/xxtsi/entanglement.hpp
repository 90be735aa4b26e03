#pragma once

#include <Eigen/Dense>

#include "xxtsi/dynamics.hpp"

namespace xxtsi {

// Two-spin reduced density matrix in the basis {uu, ud, du, dd}:
// diag(X+, Y+, Y-, X-) with Z* at (ud,du) and Z at (du,ud).
using TwoSpinDensityMatrix = Eigen::Matrix4cd;

// Populates the X-state matrix exactly from the correlators (no
// renormalization). Throws std::domain_error if the correlators violate
// trace/positivity invariants beyond tolerance.
TwoSpinDensityMatrix build_density_matrix(const PairCorrelators& c);

// Pre-clamp value 2(|Z| - sqrt(X+ X-)); may be slightly negative. Negative
// X+/X- within -1e-9 are clamped to zero before the square root; beyond that
// throws std::domain_error.
double concurrence_raw(const PairCorrelators& c);

// X-state closed form: max(0, concurrence_raw).
double concurrence_closed_form(const PairCorrelators& c);

// Generic Wootters recipe: lambda_i = sqrt of the eigenvalues of
// R = rho * (sy x sy) rho* (sy x sy); C = max(0, l1 - l2 - l3 - l4).
// For X-structured rho the 2x2 blocks of R are diagonalized in a factored
// form whose lambdas are exact to rounding even when rho is rank-deficient;
// generic rho falls back to a dense eigensolver.
// Throws std::domain_error for non-Hermitian or non-PSD input.
double concurrence_wootters(const TwoSpinDensityMatrix& rho);

}  // namespace xxtsi
