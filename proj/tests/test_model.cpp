#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xxtsi/model.hpp"

using namespace xxtsi;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("make_params fills the J-unit convention") {
  const ModelParams p = make_params(1.5);
  CHECK(p.j_nn == 1.0);
  CHECK(p.j_tsi == 1.5);
  CHECK(p.alpha == 1.5);
  CHECK_FALSE(p.pure_tsi);
  CHECK(p.energy_unit == EnergyUnit::J_unit);
  CHECK(p.n_k == 4096);
  CHECK_NOTHROW(validate_params(p));
}

TEST_CASE("make_pure_tsi_params fills the J'-unit convention") {
  const ModelParams p = make_pure_tsi_params(256);
  CHECK(p.j_nn == 0.0);
  CHECK(p.j_tsi == 1.0);
  CHECK(p.pure_tsi);
  CHECK(p.energy_unit == EnergyUnit::Jprime_unit);
  CHECK(p.n_k == 256);
  CHECK_NOTHROW(validate_params(p));
}

TEST_CASE("validate_params rejects bad quadrature sizes") {
  ModelParams p = make_params(1.0);
  p.n_k = 63;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p.n_k = 32;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p.n_k = 0;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p.n_k = 64;
  CHECK_NOTHROW(validate_params(p));
}

TEST_CASE("validate_params rejects inconsistent coupling combinations") {
  SUBCASE("zero NN coupling without the pure-TSI flag") {
    ModelParams p = make_params(1.0);
    p.j_nn = 0.0;
    CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  }
  SUBCASE("pure-TSI with a nonzero NN coupling") {
    ModelParams p = make_pure_tsi_params();
    p.j_nn = 0.5;
    CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  }
  SUBCASE("alpha is recomputed from the couplings") {
    ModelParams p = make_params(1.0);
    p.j_tsi = 2.0;
    p.alpha = 999.0;  // stale value must be fixed up
    const ModelParams v = validate_params(p);
    CHECK(v.alpha == doctest::Approx(2.0).epsilon(1e-15));
  }
}

TEST_CASE("dispersion takes the expected values at special momenta") {
  const ModelParams a1 = make_params(1.0);
  CHECK(dispersion_eval(0.0, a1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dispersion_eval(kPi / 2.0, a1) ==
        doctest::Approx(0.5).epsilon(1e-14));

  const ModelParams a2 = make_params(2.0);
  CHECK(dispersion_eval(kPi, a2) == doctest::Approx(-2.0).epsilon(1e-14));

  // Pure TSI: eps(k) = -(1/2) cos 2k.
  const ModelParams pt = make_pure_tsi_params();
  CHECK(dispersion_eval(0.0, pt) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(dispersion_eval(kPi / 4.0, pt) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(dispersion_eval(kPi / 2.0, pt) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("dispersion is 2*pi periodic and even in k") {
  const ModelParams p = make_params(1.7);
  for (double k = -3.0; k <= 3.0; k += 0.37) {
    CHECK(dispersion_eval(k + 2.0 * kPi, p) ==
          doctest::Approx(dispersion_eval(k, p)).epsilon(1e-12));
    CHECK(dispersion_eval(-k, p) ==
          doctest::Approx(dispersion_eval(k, p)).epsilon(1e-12));
  }
}

TEST_CASE("dispersion magnitude is bounded by |j_nn| + |j_tsi|/2") {
  for (double alpha : {0.0, 0.5, 1.0, 2.0, 3.5}) {
    const ModelParams p = make_params(alpha);
    const double bound = std::abs(p.j_nn) + std::abs(p.j_tsi) / 2.0;
    for (double k = -kPi; k <= kPi; k += 0.01)
      CHECK(std::abs(dispersion_eval(k, p)) <= bound + 1e-12);
  }
}

TEST_CASE("max_group_speed bounds the numerical derivative") {
  for (double alpha : {0.0, 1.0, 2.0}) {
    const ModelParams p = make_params(alpha);
    const double v = max_group_speed(p);
    CHECK(v == doctest::Approx(1.0 + alpha).epsilon(1e-14));
    constexpr double h = 1e-6;
    for (double k = -kPi; k <= kPi; k += 0.05) {
      const double deriv =
          (dispersion_eval(k + h, p) - dispersion_eval(k - h, p)) / (2.0 * h);
      CHECK(std::abs(deriv) <= v + 1e-6);
    }
  }
}
