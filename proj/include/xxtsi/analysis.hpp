#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xxtsi/entanglement.hpp"

namespace xxtsi {

// The three nearest-neighbor pairs studied: (m, m+1), (m+1, m+2), (m+2, m+3).
enum class Pair { system = 0, edge = 1, environment = 2 };

const char* pair_name(Pair p);
int pair_offset(Pair p);  // left-site offset from m

struct ConcurrenceSeries {
  Pair pair = Pair::system;
  QuenchState state;
  std::vector<double> t_grid;      // uniform, strictly increasing
  std::vector<double> raw_values;  // 2(|Z| - sqrt(X+ X-)), pre-clamp
  std::vector<double> c_values;    // max(0, raw)
};

// Concurrence of `pair` on the grid t0 + n*dt covering [t0, t_max].
ConcurrenceSeries concurrence_series(Pair pair, double t0, double t_max,
                                     double dt, const QuenchState& state);

// Entanglement deaths here are touches: the raw concurrence of an evolved
// single-excitation pair is 2|Z| >= 0, so it reaches zero without a sign
// change. The detector walks the grid with an alive/dead state machine:
//   - the pair is alive once raw exceeds alive_tol;
//   - while alive, an interior local minimum with raw < death_tol is a death,
//     refined by golden-section minimization of the continuous-time raw
//     concurrence to within refine_tol;
//   - the same refined time is a revival iff raw exceeds alive_tol again
//     afterwards (the touch is left immediately);
//   - a terminal value raw(t_max) <= terminal_zero with raw decreasing into
//     it is a death with no revival.
struct EsdOptions {
  double refine_tol = 1e-4;
  double death_tol = 1e-2;
  double alive_tol = 2e-2;
  double terminal_zero = 1e-8;
};

struct EsdEvents {
  std::vector<double> death_times;
  std::vector<double> revival_times;
};

EsdEvents esd_times(const ConcurrenceSeries& series, double refine_tol = 1e-4);
EsdEvents esd_times(const ConcurrenceSeries& series, const EsdOptions& opts);

// Non-Markovianity witness I = integral |dC/dt| dt - (C(t0) - C(t_max)),
// evaluated as total variation on the grid minus the net decrease, i.e.
// 2 * sum_i max(0, C(t_{i+1}) - C(t_i)). Zero exactly iff the sampled series
// never increases.
struct WitnessResult {
  double i_value = 0.0;
  double delta_c = 0.0;
  double t0 = 0.0;
  double t_max = 0.0;
  double alpha = 0.0;
};

WitnessResult witness(const ConcurrenceSeries& series);

struct WitnessScanResult {
  std::vector<WitnessResult> entries;   // one per alpha, grid order
  double onset_threshold = 1e-3;
  std::optional<double> alpha_c;        // smallest alpha with I > threshold
};

WitnessScanResult witness_scan(const std::vector<double>& alpha_grid,
                               double t0 = 0.0, double t_max = 40.0,
                               double dt = 0.01, double onset_threshold = 1e-3,
                               int n_k = 4096, double phi = 0.0);

// C_{m,m+1}(t) as a function of alpha at fixed early times.
struct StaticScanResult {
  std::vector<double> alpha_grid;
  std::vector<double> times;
  std::vector<std::vector<double>> c;                // c[ti][ai]
  std::vector<std::optional<double>> argmax_alpha;   // nullopt when flat
  std::vector<bool> beyond_first_death;              // warning flag per time
  std::vector<std::optional<double>> first_death;    // per alpha, if any
};

StaticScanResult static_concurrence_scan(const std::vector<double>& alpha_grid,
                                         const std::vector<double>& times,
                                         int n_k = 4096, double phi = 0.0);

// Aligned series for the three pairs with their events, plus the time of the
// system's first revival peak and the environment pair's first death.
struct EnvironmentComparison {
  ConcurrenceSeries system;
  ConcurrenceSeries edge;
  ConcurrenceSeries environment;
  EsdEvents system_events;
  EsdEvents edge_events;
  EsdEvents environment_events;
  std::optional<double> system_first_revival_peak;
  std::optional<double> environment_first_death;
};

EnvironmentComparison environment_comparison(const QuenchState& state,
                                             double t0 = 0.0,
                                             double t_max = 40.0,
                                             double dt = 0.01);

}  // namespace xxtsi
