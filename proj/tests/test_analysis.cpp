#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "xxtsi/analysis.hpp"

using namespace xxtsi;

namespace {

QuenchState state_for(double alpha, int n_k = 4096) {
  QuenchState s;
  s.params = make_params(alpha, n_k);
  return s;
}

QuenchState pure_tsi_state(int n_k = 4096) {
  QuenchState s;
  s.params = make_pure_tsi_params(n_k);
  return s;
}

// Hand-built series for arithmetic checks that never touch the evaluator.
ConcurrenceSeries synthetic_series(const std::vector<double>& t,
                                   const std::vector<double>& raw) {
  ConcurrenceSeries s;
  s.t_grid = t;
  s.raw_values = raw;
  s.c_values.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    s.c_values[i] = std::max(0.0, raw[i]);
  return s;
}

}  // namespace

TEST_CASE("pair helpers name the three adjacent pairs") {
  CHECK(pair_offset(Pair::system) == 0);
  CHECK(pair_offset(Pair::edge) == 1);
  CHECK(pair_offset(Pair::environment) == 2);
  CHECK(std::string(pair_name(Pair::system)) == "system");
  CHECK(std::string(pair_name(Pair::environment)) == "environment");
}

TEST_CASE("concurrence series starts at 1 for the system pair") {
  const ConcurrenceSeries s =
      concurrence_series(Pair::system, 0.0, 1.0, 0.25, state_for(1.0));
  REQUIRE(s.t_grid.size() == 5);
  CHECK(s.c_values.front() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.t_grid.back() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("witness arithmetic on the documented example") {
  const ConcurrenceSeries s =
      synthetic_series({0.0, 1.0, 2.0, 3.0}, {1.0, 0.5, 0.8, 0.3});
  const WitnessResult w = witness(s);
  CHECK(w.i_value == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(w.delta_c == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("witness vanishes exactly for a monotone series") {
  const ConcurrenceSeries s = synthetic_series(
      {0.0, 1.0, 2.0, 3.0, 4.0}, {1.0, 0.8, 0.5, 0.2, 0.05});
  CHECK(witness(s).i_value == 0.0);
}

TEST_CASE("witness rejects degenerate input") {
  const ConcurrenceSeries s = synthetic_series({0.0}, {1.0});
  CHECK_THROWS_AS(witness(s), std::invalid_argument);
}

TEST_CASE("witness on the Markovian side is exactly zero") {
  const ConcurrenceSeries s =
      concurrence_series(Pair::system, 0.0, 40.0, 0.01, state_for(0.5));
  CHECK(witness(s).i_value == 0.0);
}

TEST_CASE("witness values on the non-Markovian side match frozen references") {
  const ConcurrenceSeries s15 =
      concurrence_series(Pair::system, 0.0, 40.0, 0.01, state_for(1.5));
  CHECK(witness(s15).i_value == doctest::Approx(0.5566).epsilon(5e-4));

  const ConcurrenceSeries s20 =
      concurrence_series(Pair::system, 0.0, 40.0, 0.01, state_for(2.0));
  CHECK(witness(s20).i_value == doctest::Approx(0.7717).epsilon(5e-4));
}

TEST_CASE("witness is stable under halving the time step") {
  const double i_coarse =
      witness(concurrence_series(Pair::system, 0.0, 40.0, 0.02,
                                 state_for(1.5)))
          .i_value;
  const double i_fine =
      witness(concurrence_series(Pair::system, 0.0, 40.0, 0.01,
                                 state_for(1.5)))
          .i_value;
  CHECK(std::abs(i_coarse - i_fine) < 1e-3);
}

TEST_CASE("witness_scan finds the onset alpha on a coarse grid") {
  const WitnessScanResult scan =
      witness_scan({0.25, 0.75, 1.5}, 0.0, 40.0, 0.01);
  REQUIRE(scan.entries.size() == 3);
  CHECK(scan.entries[0].i_value == 0.0);
  CHECK(scan.entries[1].i_value == 0.0);
  CHECK(scan.entries[2].i_value > 1e-2);
  REQUIRE(scan.alpha_c.has_value());
  CHECK(*scan.alpha_c == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("witness_scan reports no onset when all witnesses vanish") {
  const WitnessScanResult scan = witness_scan({0.25, 0.5}, 0.0, 40.0, 0.01);
  CHECK_FALSE(scan.alpha_c.has_value());
}

TEST_CASE("witness_scan rejects an empty grid") {
  CHECK_THROWS_AS(witness_scan({}), std::invalid_argument);
}

TEST_CASE("pure-TSI deaths and revivals sit at the Bessel zeros") {
  const ConcurrenceSeries s =
      concurrence_series(Pair::system, 0.0, 40.0, 0.01, pure_tsi_state());
  const EsdEvents ev = esd_times(s);
  REQUIRE(ev.death_times.size() == 6);
  REQUIRE(ev.revival_times.size() == 6);
  // First three zeros of J0(t/2): twice the Bessel zeros.
  CHECK(ev.death_times[0] == doctest::Approx(4.809651115).epsilon(1e-3));
  CHECK(ev.death_times[1] == doctest::Approx(11.04016450).epsilon(1e-3));
  CHECK(ev.death_times[2] == doctest::Approx(17.30746593).epsilon(1e-3));
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(ev.revival_times[i] == doctest::Approx(ev.death_times[i]).epsilon(1e-12));
  // Deaths strictly increasing.
  for (std::size_t i = 1; i < ev.death_times.size(); ++i)
    CHECK(ev.death_times[i] > ev.death_times[i - 1]);
}

TEST_CASE("refined death time is insensitive to refine_tol and dt") {
  const ConcurrenceSeries fine =
      concurrence_series(Pair::system, 0.0, 8.0, 0.005, pure_tsi_state());
  const ConcurrenceSeries coarse =
      concurrence_series(Pair::system, 0.0, 8.0, 0.02, pure_tsi_state());
  const double t_fine = esd_times(fine, 1e-6).death_times.at(0);
  const double t_coarse = esd_times(coarse, 1e-4).death_times.at(0);
  CHECK(std::abs(t_fine - t_coarse) < 1e-3);
  CHECK(t_fine == doctest::Approx(4.809651115).epsilon(5e-4));
}

TEST_CASE("refined minimum value is a genuine touch") {
  const ConcurrenceSeries s =
      concurrence_series(Pair::system, 0.0, 8.0, 0.01, pure_tsi_state());
  const double td = esd_times(s, 1e-6).death_times.at(0);
  const PairCorrelators c = pair_correlators(0, td, pure_tsi_state());
  CHECK(concurrence_closed_form(c) < 1e-6);
}

TEST_CASE("free chain shows no sudden death") {
  const ConcurrenceSeries s =
      concurrence_series(Pair::system, 0.0, 40.0, 0.01, state_for(0.0));
  const EsdEvents ev = esd_times(s);
  CHECK(ev.death_times.empty());
  CHECK(ev.revival_times.empty());
}

TEST_CASE("system deaths at alpha=2 match the frozen first-death time") {
  const ConcurrenceSeries s =
      concurrence_series(Pair::system, 0.0, 40.0, 0.01, state_for(2.0));
  const EsdEvents ev = esd_times(s);
  REQUIRE_FALSE(ev.death_times.empty());
  CHECK(ev.death_times.front() == doctest::Approx(4.2504).epsilon(1e-3));
  CHECK(ev.death_times.size() == 7);
  CHECK(ev.revival_times.size() == 7);
}

TEST_CASE("first death time decreases with the interaction strength") {
  auto first_death = [](double alpha) {
    const ConcurrenceSeries s =
        concurrence_series(Pair::system, 0.0, 40.0, 0.01, state_for(alpha));
    return esd_times(s).death_times.at(0);
  };
  const double t12 = first_death(1.2);
  const double t16 = first_death(1.6);
  const double t20 = first_death(2.0);
  CHECK(t12 == doctest::Approx(11.7277).epsilon(2e-3));
  CHECK(t16 == doctest::Approx(6.3433).epsilon(2e-3));
  CHECK(t20 == doctest::Approx(4.2504).epsilon(2e-3));
  CHECK(t12 > t16);
  CHECK(t16 > t20);
}

TEST_CASE("a terminal decay to zero counts as a death without revival") {
  const ConcurrenceSeries s = synthetic_series(
      {0.0, 1.0, 2.0, 3.0}, {1.0, 0.5, 0.2, 0.0});
  const EsdEvents ev = esd_times(s);
  REQUIRE(ev.death_times.size() == 1);
  CHECK(ev.death_times[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(ev.revival_times.empty());
}

TEST_CASE("esd_times validates refine_tol") {
  const ConcurrenceSeries s = synthetic_series({0.0, 1.0}, {1.0, 0.9});
  CHECK_THROWS_AS(esd_times(s, 0.0), std::invalid_argument);
}

TEST_CASE("static scan peaks near the coupling-symmetric point") {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(0.02 * i);
  const StaticScanResult scan =
      static_concurrence_scan(grid, {1.0, 2.0, 3.0});
  REQUIRE(scan.argmax_alpha.size() == 3);
  for (std::size_t ti = 0; ti < 3; ++ti) {
    REQUIRE(scan.argmax_alpha[ti].has_value());
    CHECK(std::abs(*scan.argmax_alpha[ti] - 1.0) <= 0.05);
  }
  // Frozen grid argmax values.
  CHECK(*scan.argmax_alpha[0] == doctest::Approx(1.02).epsilon(1e-9));
  CHECK(*scan.argmax_alpha[1] == doctest::Approx(1.04).epsilon(1e-9));
  CHECK(*scan.argmax_alpha[2] == doctest::Approx(0.98).epsilon(1e-9));
  for (std::size_t ti = 0; ti < 3; ++ti) CHECK_FALSE(scan.beyond_first_death[ti]);
}

TEST_CASE("static scan reports a flat profile at t=0") {
  const StaticScanResult scan =
      static_concurrence_scan({0.0, 0.5, 1.0}, {0.0});
  REQUIRE(scan.argmax_alpha.size() == 1);
  CHECK_FALSE(scan.argmax_alpha[0].has_value());
  for (double c : scan.c[0]) CHECK(c == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("static scan flags times beyond the first death") {
  const StaticScanResult scan = static_concurrence_scan({2.0}, {1.0, 5.0});
  CHECK_FALSE(scan.beyond_first_death[0]);
  CHECK(scan.beyond_first_death[1]);
  REQUIRE(scan.first_death[0].has_value());
  CHECK(*scan.first_death[0] == doctest::Approx(4.2504).epsilon(1e-3));
}

TEST_CASE("static scan validates its inputs") {
  CHECK_THROWS_AS(static_concurrence_scan({}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(static_concurrence_scan({1.0}, {}), std::invalid_argument);
}

TEST_CASE("environment comparison at alpha=2 shows distinct death times") {
  const EnvironmentComparison cmp =
      environment_comparison(state_for(2.0), 0.0, 40.0, 0.01);

  // Initial values: system pair entangled, outer pairs not.
  CHECK(cmp.system.c_values.front() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cmp.edge.c_values.front() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cmp.environment.c_values.front() ==
        doctest::Approx(0.0).epsilon(1e-12));

  REQUIRE_FALSE(cmp.system_events.death_times.empty());
  REQUIRE_FALSE(cmp.environment_events.death_times.empty());
  const double t_r = cmp.system_events.death_times.front();
  REQUIRE(cmp.environment_first_death.has_value());
  const double t_r_env = *cmp.environment_first_death;
  CHECK(t_r == doctest::Approx(4.2504).epsilon(1e-3));
  CHECK(t_r_env == doctest::Approx(6.8296).epsilon(1e-3));
  CHECK(std::abs(t_r - t_r_env) > 0.1);

  // The system's first revival peak nearly coincides with the environment's
  // first death (reported, not asserted tightly).
  REQUIRE(cmp.system_first_revival_peak.has_value());
  CHECK(*cmp.system_first_revival_peak ==
        doctest::Approx(6.809).epsilon(5e-3));
  CHECK(std::abs(*cmp.system_first_revival_peak - t_r_env) < 0.1);
}

TEST_CASE("environment pair stays death-free on the Markovian side") {
  const EnvironmentComparison cmp =
      environment_comparison(state_for(0.5), 0.0, 40.0, 0.01);
  CHECK(cmp.environment_events.death_times.empty());
  CHECK(cmp.system_events.death_times.empty());
  CHECK_FALSE(cmp.environment_first_death.has_value());
}
