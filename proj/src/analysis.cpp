#include "xxtsi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace xxtsi {

const char* pair_name(Pair p) {
  switch (p) {
    case Pair::system: return "system";
    case Pair::edge: return "edge";
    case Pair::environment: return "environment";
  }
  return "?";
}

int pair_offset(Pair p) { return static_cast<int>(p); }

ConcurrenceSeries concurrence_series(Pair pair, double t0, double t_max,
                                     double dt, const QuenchState& state) {
  if (t0 < 0.0) throw std::invalid_argument("t0 must be non-negative");
  QuenchState s = state;
  s.params = validate_params(state.params);

  const int left = s.m + pair_offset(pair);
  AmplitudeSeries amp = amplitude_series({left, left + 1}, t0, t_max, dt, s);

  ConcurrenceSeries out;
  out.pair = pair;
  out.state = s;
  out.t_grid = std::move(amp.times);
  const std::size_t n = out.t_grid.size();
  out.raw_values.resize(n);
  out.c_values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PairCorrelators c =
        correlators_from_amplitudes(amp.amps[0][i], amp.amps[1][i]);
    out.raw_values[i] = concurrence_raw(c);
    out.c_values[i] = std::max(0.0, out.raw_values[i]);
  }
  return out;
}

namespace {

// Golden-section search for the minimum of f on [a, b]; returns the midpoint
// of the final bracket once it is narrower than tol.
double golden_minimize(const std::function<double(double)>& f, double a,
                       double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

// Continuous-time raw concurrence of the series' pair, for refinement.
std::function<double(double)> raw_evaluator(const ConcurrenceSeries& series) {
  const int left = series.state.m + pair_offset(series.pair);
  const QuenchState state = series.state;
  return [left, state](double t) {
    return concurrence_raw(pair_correlators(left, t, state));
  };
}

}  // namespace

EsdEvents esd_times(const ConcurrenceSeries& series, double refine_tol) {
  EsdOptions opts;
  opts.refine_tol = refine_tol;
  return esd_times(series, opts);
}

EsdEvents esd_times(const ConcurrenceSeries& series, const EsdOptions& opts) {
  if (opts.refine_tol <= 0.0)
    throw std::invalid_argument("refine_tol must be positive");
  const auto& raw = series.raw_values;
  const auto& t = series.t_grid;
  const std::size_t n = raw.size();

  EsdEvents ev;
  if (n < 2) return ev;

  const auto raw_at = raw_evaluator(series);

  bool alive = raw[0] > opts.alive_tol;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!alive) {
      if (raw[i] > opts.alive_tol) alive = true;
      continue;
    }
    const bool death_min =
        raw[i] <= raw[i - 1] && raw[i] <= raw[i + 1] && raw[i] < opts.death_tol;
    if (!death_min) continue;
    ev.death_times.push_back(
        golden_minimize(raw_at, t[i - 1], t[i + 1], opts.refine_tol));
    alive = false;  // dead until raw exceeds alive_tol again
  }

  // Touch semantics: a death revives at the same instant provided the pair
  // actually climbs back above alive_tol afterwards.
  for (double td : ev.death_times) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] > td && raw[i] > opts.alive_tol) {
        ev.revival_times.push_back(td);
        break;
      }
    }
  }

  // Terminal zero: the series ends on (numerical) zero while decreasing.
  if (raw[n - 1] <= opts.terminal_zero && raw[n - 1] <= raw[n - 2]) {
    bool was_alive = false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (raw[i] > opts.alive_tol) { was_alive = true; break; }
    if (was_alive) ev.death_times.push_back(t[n - 1]);
  }
  return ev;
}

WitnessResult witness(const ConcurrenceSeries& series) {
  const auto& c = series.c_values;
  if (c.size() < 2) throw std::invalid_argument("series too short for witness");
  double gain = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const double d = c[i + 1] - c[i];
    if (d > 0.0) gain += d;
  }
  WitnessResult w;
  w.i_value = 2.0 * gain;
  w.delta_c = c.front() - c.back();
  w.t0 = series.t_grid.front();
  w.t_max = series.t_grid.back();
  w.alpha = series.state.params.alpha;
  return w;
}

WitnessScanResult witness_scan(const std::vector<double>& alpha_grid,
                               double t0, double t_max, double dt,
                               double onset_threshold, int n_k, double phi) {
  if (alpha_grid.empty())
    throw std::invalid_argument("alpha grid must not be empty");
  WitnessScanResult out;
  out.onset_threshold = onset_threshold;
  out.entries.reserve(alpha_grid.size());
  for (double a : alpha_grid) {
    QuenchState s;
    s.phi = phi;
    s.params = make_params(a, n_k);
    const ConcurrenceSeries series =
        concurrence_series(Pair::system, t0, t_max, dt, s);
    out.entries.push_back(witness(series));
  }
  for (const WitnessResult& w : out.entries) {
    if (w.i_value > onset_threshold) {
      out.alpha_c = w.alpha;
      break;
    }
  }
  return out;
}

StaticScanResult static_concurrence_scan(const std::vector<double>& alpha_grid,
                                         const std::vector<double>& times,
                                         int n_k, double phi) {
  if (alpha_grid.empty())
    throw std::invalid_argument("alpha grid must not be empty");
  if (times.empty())
    throw std::invalid_argument("times list must not be empty");

  StaticScanResult out;
  out.alpha_grid = alpha_grid;
  out.times = times;
  out.c.assign(times.size(), std::vector<double>(alpha_grid.size()));
  out.argmax_alpha.assign(times.size(), std::nullopt);
  out.beyond_first_death.assign(times.size(), false);
  out.first_death.assign(alpha_grid.size(), std::nullopt);

  const double t_hi = *std::max_element(times.begin(), times.end());
  for (std::size_t ai = 0; ai < alpha_grid.size(); ++ai) {
    QuenchState s;
    s.phi = phi;
    s.params = make_params(alpha_grid[ai], n_k);
    s.params = validate_params(s.params);
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      const PairCorrelators c = pair_correlators(s.m, times[ti], s);
      out.c[ti][ai] = concurrence_closed_form(c);
    }
    // Flag requested times at or past this alpha's first entanglement death.
    if (t_hi > 0.0) {
      const ConcurrenceSeries series =
          concurrence_series(Pair::system, 0.0, t_hi, 0.01, s);
      const EsdEvents ev = esd_times(series);
      if (!ev.death_times.empty()) {
        out.first_death[ai] = ev.death_times.front();
        for (std::size_t ti = 0; ti < times.size(); ++ti)
          if (times[ti] >= ev.death_times.front())
            out.beyond_first_death[ti] = true;
      }
    }
  }
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    const auto& row = out.c[ti];
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    if (*hi - *lo > 1e-12)
      out.argmax_alpha[ti] =
          alpha_grid[static_cast<std::size_t>(hi - row.begin())];
  }
  return out;
}

EnvironmentComparison environment_comparison(const QuenchState& state,
                                             double t0, double t_max,
                                             double dt) {
  QuenchState s = state;
  s.params = validate_params(state.params);

  // One amplitude stream covers the four sites spanning the three pairs.
  AmplitudeSeries amp =
      amplitude_series({s.m, s.m + 1, s.m + 2, s.m + 3}, t0, t_max, dt, s);

  EnvironmentComparison out;
  auto fill = [&](Pair pair, ConcurrenceSeries* series) {
    const int a = pair_offset(pair);
    series->pair = pair;
    series->state = s;
    series->t_grid = amp.times;
    const std::size_t n = amp.times.size();
    series->raw_values.resize(n);
    series->c_values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const PairCorrelators c =
          correlators_from_amplitudes(amp.amps[a][i], amp.amps[a + 1][i]);
      series->raw_values[i] = concurrence_raw(c);
      series->c_values[i] = std::max(0.0, series->raw_values[i]);
    }
  };
  fill(Pair::system, &out.system);
  fill(Pair::edge, &out.edge);
  fill(Pair::environment, &out.environment);

  out.system_events = esd_times(out.system);
  out.edge_events = esd_times(out.edge);
  out.environment_events = esd_times(out.environment);

  if (!out.environment_events.death_times.empty())
    out.environment_first_death = out.environment_events.death_times.front();

  // First interior maximum of the system concurrence after its first death,
  // polished by minimizing the negated continuous-time raw value.
  if (!out.system_events.death_times.empty()) {
    const double td = out.system_events.death_times.front();
    const auto raw_at = raw_evaluator(out.system);
    const auto& raw = out.system.raw_values;
    const auto& t = out.system.t_grid;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
      if (t[i] <= td) continue;
      if (raw[i] >= raw[i - 1] && raw[i] >= raw[i + 1]) {
        out.system_first_revival_peak = golden_minimize(
            [&](double tt) { return -raw_at(tt); }, t[i - 1], t[i + 1], 1e-4);
        break;
      }
    }
  }
  return out;
}

}  // namespace xxtsi
