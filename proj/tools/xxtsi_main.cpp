// Command-line surface for the XX-chain + three-spin-interaction entanglement
// toolkit: time series, parameter sweeps, environment comparison, and
// self-verification against independent references.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xxtsi/analysis.hpp"
#include "xxtsi/oracle.hpp"
#include "xxtsi/output.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidParams = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerifyFailure = 3;

constexpr const char* kDispersionNote =
    "eps(k) = j_nn*cos(k) - (j_tsi/2)*cos(2k)";

struct RunConfig {
  double alpha = 0.0;
  bool pure_tsi = false;
  double phi = 0.0;
  double t0 = 0.0;
  double t_max = 40.0;
  double dt = 0.01;
  std::string pair = "system";
  int n_k = 4096;
  double alpha_min = 0.0;
  double alpha_max = 2.5;
  double alpha_step = 0.02;
  std::vector<double> times;
  std::string out_path;       // empty = stdout
  std::string format = "csv";
  std::string verify_case = "all";
};

xxtsi::QuenchState make_state(const RunConfig& cfg) {
  xxtsi::QuenchState s;
  s.phi = cfg.phi;
  s.params = cfg.pure_tsi ? xxtsi::make_pure_tsi_params(cfg.n_k)
                          : xxtsi::make_params(cfg.alpha, cfg.n_k);
  return s;
}

xxtsi::Pair parse_pair(const std::string& name) {
  if (name == "system") return xxtsi::Pair::system;
  if (name == "edge") return xxtsi::Pair::edge;
  if (name == "environment") return xxtsi::Pair::environment;
  throw std::invalid_argument("unknown pair: " + name);
}

std::vector<double> alpha_grid(const RunConfig& cfg) {
  if (cfg.alpha_step <= 0.0)
    throw std::invalid_argument("--alpha-step must be positive");
  if (cfg.alpha_max < cfg.alpha_min)
    throw std::invalid_argument("empty alpha range: max below min");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double a = cfg.alpha_min + i * cfg.alpha_step;
    if (a > cfg.alpha_max + 1e-12) break;
    grid.push_back(a);
  }
  return grid;
}

void add_model_metadata(xxtsi::OutputTable* t, const RunConfig& cfg) {
  const xxtsi::ModelParams p = make_state(cfg).params;
  t->metadata.emplace_back("pure_tsi", cfg.pure_tsi ? "true" : "false");
  t->metadata.emplace_back("alpha", xxtsi::format_sig(p.alpha));
  t->metadata.emplace_back("j_nn", xxtsi::format_sig(p.j_nn));
  t->metadata.emplace_back("j_tsi", xxtsi::format_sig(p.j_tsi));
  t->metadata.emplace_back(
      "energy_unit",
      p.energy_unit == xxtsi::EnergyUnit::J_unit ? "J_unit" : "Jprime_unit");
  t->metadata.emplace_back("phi", xxtsi::format_sig(cfg.phi));
  t->metadata.emplace_back("n_k", std::to_string(cfg.n_k));
  t->metadata.emplace_back("dispersion", kDispersionNote);
}

void add_grid_metadata(xxtsi::OutputTable* t, const RunConfig& cfg) {
  t->metadata.emplace_back("t0", xxtsi::format_sig(cfg.t0));
  t->metadata.emplace_back("t_max", xxtsi::format_sig(cfg.t_max));
  t->metadata.emplace_back("dt", xxtsi::format_sig(cfg.dt));
}

std::string join_times(const std::vector<double>& ts) {
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) s += ";";
    s += xxtsi::format_sig(ts[i]);
  }
  return s;
}

// Single writer: renders the table to --out (or stdout) in the chosen format.
int emit(const xxtsi::OutputTable& table, const RunConfig& cfg) {
  std::ostringstream body;
  if (cfg.format == "json")
    xxtsi::write_json(body, table);
  else
    xxtsi::write_csv(body, table);

  if (cfg.out_path.empty()) {
    std::cout << body.str();
    return kExitOk;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << cfg.out_path << "\n";
    return kExitIo;
  }
  f << body.str();
  f.flush();
  if (f.fail()) {
    std::cerr << "error: write failed: " << cfg.out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_series(const RunConfig& cfg) {
  const xxtsi::Pair pair = parse_pair(cfg.pair);
  const xxtsi::ConcurrenceSeries series = xxtsi::concurrence_series(
      pair, cfg.t0, cfg.t_max, cfg.dt, make_state(cfg));
  const xxtsi::EsdEvents events = xxtsi::esd_times(series);

  xxtsi::OutputTable table;
  table.metadata.emplace_back("subcommand", "series");
  add_model_metadata(&table, cfg);
  add_grid_metadata(&table, cfg);
  table.metadata.emplace_back("pair", cfg.pair);

  table.columns = {"t", "C_raw", "C"};
  table.rows.reserve(series.t_grid.size());
  for (std::size_t i = 0; i < series.t_grid.size(); ++i)
    table.rows.push_back(
        {series.t_grid[i], series.raw_values[i], series.c_values[i]});

  table.summary.push_back("death_times = " + join_times(events.death_times));
  table.summary.push_back("revival_times = " +
                          join_times(events.revival_times));
  return emit(table, cfg);
}

int cmd_witness_scan(const RunConfig& cfg) {
  const std::vector<double> grid = alpha_grid(cfg);
  const xxtsi::WitnessScanResult scan = xxtsi::witness_scan(
      grid, cfg.t0, cfg.t_max, cfg.dt, /*onset_threshold=*/1e-3, cfg.n_k,
      cfg.phi);

  xxtsi::OutputTable table;
  table.metadata.emplace_back("subcommand", "witness-scan");
  table.metadata.emplace_back("alpha_min", xxtsi::format_sig(cfg.alpha_min));
  table.metadata.emplace_back("alpha_max", xxtsi::format_sig(cfg.alpha_max));
  table.metadata.emplace_back("alpha_step", xxtsi::format_sig(cfg.alpha_step));
  table.metadata.emplace_back("onset_threshold",
                              xxtsi::format_sig(scan.onset_threshold));
  table.metadata.emplace_back("phi", xxtsi::format_sig(cfg.phi));
  table.metadata.emplace_back("n_k", std::to_string(cfg.n_k));
  table.metadata.emplace_back("dispersion", kDispersionNote);
  add_grid_metadata(&table, cfg);

  table.columns = {"alpha", "I", "delta_c"};
  for (const xxtsi::WitnessResult& w : scan.entries)
    table.rows.push_back({w.alpha, w.i_value, w.delta_c});

  if (scan.alpha_c)
    table.summary.push_back("alpha_c = " + xxtsi::format_sig(*scan.alpha_c));
  else
    table.summary.push_back("alpha_c = not found");
  return emit(table, cfg);
}

int cmd_static_scan(const RunConfig& cfg) {
  const std::vector<double> grid = alpha_grid(cfg);
  const xxtsi::StaticScanResult scan =
      xxtsi::static_concurrence_scan(grid, cfg.times, cfg.n_k, cfg.phi);

  xxtsi::OutputTable table;
  table.metadata.emplace_back("subcommand", "static-scan");
  table.metadata.emplace_back("alpha_min", xxtsi::format_sig(cfg.alpha_min));
  table.metadata.emplace_back("alpha_max", xxtsi::format_sig(cfg.alpha_max));
  table.metadata.emplace_back("alpha_step", xxtsi::format_sig(cfg.alpha_step));
  table.metadata.emplace_back("times", join_times(cfg.times));
  table.metadata.emplace_back("phi", xxtsi::format_sig(cfg.phi));
  table.metadata.emplace_back("n_k", std::to_string(cfg.n_k));
  table.metadata.emplace_back("dispersion", kDispersionNote);

  table.columns.push_back("alpha");
  for (double t : cfg.times)
    table.columns.push_back("C_t=" + xxtsi::format_sig(t));
  table.columns.push_back("first_death");

  for (std::size_t ai = 0; ai < grid.size(); ++ai) {
    std::vector<xxtsi::Cell> row;
    row.emplace_back(grid[ai]);
    for (std::size_t ti = 0; ti < cfg.times.size(); ++ti)
      row.emplace_back(scan.c[ti][ai]);
    if (scan.first_death[ai])
      row.emplace_back(*scan.first_death[ai]);
    else
      row.emplace_back(std::string(""));
    table.rows.push_back(std::move(row));
  }

  for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
    const std::string label = "argmax(t=" + xxtsi::format_sig(cfg.times[ti]);
    if (scan.argmax_alpha[ti])
      table.summary.push_back(label + ") = " +
                              xxtsi::format_sig(*scan.argmax_alpha[ti]));
    else
      table.summary.push_back(label + ") = flat");
    if (scan.beyond_first_death[ti])
      table.summary.push_back(
          "warning: t=" + xxtsi::format_sig(cfg.times[ti]) +
          " lies beyond the first death time of some alpha values");
  }
  return emit(table, cfg);
}

int cmd_environment_compare(const RunConfig& cfg) {
  const xxtsi::EnvironmentComparison cmp = xxtsi::environment_comparison(
      make_state(cfg), cfg.t0, cfg.t_max, cfg.dt);

  xxtsi::OutputTable table;
  table.metadata.emplace_back("subcommand", "environment-compare");
  add_model_metadata(&table, cfg);
  add_grid_metadata(&table, cfg);

  table.columns = {"t", "C_system", "C_edge", "C_environment"};
  const std::size_t n = cmp.system.t_grid.size();
  table.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    table.rows.push_back({cmp.system.t_grid[i], cmp.system.c_values[i],
                          cmp.edge.c_values[i], cmp.environment.c_values[i]});

  table.summary.push_back("system_death_times = " +
                          join_times(cmp.system_events.death_times));
  table.summary.push_back("system_revival_times = " +
                          join_times(cmp.system_events.revival_times));
  table.summary.push_back("edge_death_times = " +
                          join_times(cmp.edge_events.death_times));
  table.summary.push_back("edge_revival_times = " +
                          join_times(cmp.edge_events.revival_times));
  table.summary.push_back("environment_death_times = " +
                          join_times(cmp.environment_events.death_times));
  table.summary.push_back("environment_revival_times = " +
                          join_times(cmp.environment_events.revival_times));
  if (cmp.system_first_revival_peak)
    table.summary.push_back(
        "system_first_revival_peak = " +
        xxtsi::format_sig(*cmp.system_first_revival_peak));
  else
    table.summary.push_back("system_first_revival_peak = none");
  if (cmp.environment_first_death)
    table.summary.push_back("environment_first_death = " +
                            xxtsi::format_sig(*cmp.environment_first_death));
  else
    table.summary.push_back("environment_first_death = none");
  if (cmp.system_first_revival_peak && cmp.environment_first_death)
    table.summary.push_back(
        "revival_peak_minus_environment_death = " +
        xxtsi::format_sig(*cmp.system_first_revival_peak -
                          *cmp.environment_first_death));
  return emit(table, cfg);
}

// ---- verify -----------------------------------------------------------

struct CheckResult {
  std::string name;
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

CheckResult check_bessel(const RunConfig& cfg, xxtsi::BesselCase which) {
  CheckResult r;
  r.name = which == xxtsi::BesselCase::alpha_zero ? "alpha_zero" : "pure_tsi";
  r.tolerance = 1e-6;

  RunConfig c = cfg;
  c.pure_tsi = which == xxtsi::BesselCase::pure_tsi;
  c.alpha = 0.0;
  const xxtsi::ConcurrenceSeries series = xxtsi::concurrence_series(
      xxtsi::Pair::system, 0.0, cfg.t_max, cfg.dt, make_state(c));
  for (std::size_t i = 0; i < series.t_grid.size(); ++i) {
    const double ref = xxtsi::bessel_reference(which, series.t_grid[i]);
    r.max_dev = std::max(r.max_dev, std::abs(series.c_values[i] - ref));
  }
  r.passed = r.max_dev <= r.tolerance;
  return r;
}

CheckResult check_ring(const RunConfig& cfg) {
  CheckResult r;
  r.name = "ring";
  r.tolerance = 1e-8;

  for (double a : {0.0, 1.0, 2.0}) {
    RunConfig c = cfg;
    c.alpha = a;
    c.pure_tsi = false;
    const xxtsi::QuenchState state = make_state(c);

    const xxtsi::RingHamiltonian ring =
        xxtsi::build_ring(cfg.n_k, state.params);
    const double t_limit = xxtsi::ring_time_limit(ring, state.params);
    const double t_hi = std::min(30.0, 0.95 * t_limit);

    const int m = cfg.n_k / 2;  // center the pair to keep wrap symmetric
    const xxtsi::RingPropagator prop(ring);
    const std::vector<xxtsi::cplx> psi0 =
        xxtsi::ring_bell_state(cfg.n_k, m, cfg.phi);

    std::vector<double> ts;
    for (double t = 0.0; t <= t_hi + 1e-9; t += 0.25) ts.push_back(t);
    const auto site_amps = prop.propagate_sites(psi0, {m, m + 1}, ts);

    for (std::size_t i = 0; i < ts.size(); ++i) {
      const xxtsi::PairCorrelators ring_corr =
          xxtsi::correlators_from_amplitudes(site_amps[i][0], site_amps[i][1]);
      const double c_ring = xxtsi::concurrence_closed_form(ring_corr);
      const xxtsi::PairCorrelators quad_corr =
          xxtsi::pair_correlators(state.m, ts[i], state);
      const double c_quad = xxtsi::concurrence_closed_form(quad_corr);
      r.max_dev = std::max(r.max_dev, std::abs(c_ring - c_quad));
    }
  }
  r.passed = r.max_dev <= r.tolerance;
  return r;
}

CheckResult check_convergence(const RunConfig& cfg) {
  CheckResult r;
  r.name = "convergence";
  r.tolerance = 1e-10;

  for (double a : {0.0, 1.0, 2.0}) {
    RunConfig coarse = cfg;
    coarse.alpha = a;
    coarse.pure_tsi = false;
    RunConfig fine = coarse;
    fine.n_k = 2 * cfg.n_k;

    const xxtsi::QuenchState sc = make_state(coarse);
    const xxtsi::QuenchState sf = make_state(fine);
    for (double t = 0.0; t <= cfg.t_max + 1e-9; t += 0.5) {
      const xxtsi::PairCorrelators cc = xxtsi::pair_correlators(sc.m, t, sc);
      const xxtsi::PairCorrelators cf = xxtsi::pair_correlators(sf.m, t, sf);
      const double dev =
          std::max({std::abs(cc.z - cf.z), std::abs(cc.n_i - cf.n_i),
                    std::abs(cc.n_j - cf.n_j)});
      r.max_dev = std::max(r.max_dev, dev);
    }
  }
  r.passed = r.max_dev <= r.tolerance;
  return r;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<CheckResult> results;
  const std::string& which = cfg.verify_case;
  if (which == "all" || which == "alpha_zero")
    results.push_back(check_bessel(cfg, xxtsi::BesselCase::alpha_zero));
  if (which == "all" || which == "pure_tsi")
    results.push_back(check_bessel(cfg, xxtsi::BesselCase::pure_tsi));
  if (which == "all" || which == "ring")
    results.push_back(check_ring(cfg));
  if (which == "all" || which == "convergence")
    results.push_back(check_convergence(cfg));

  bool all_passed = true;
  for (const CheckResult& r : results) {
    std::printf("%-12s max deviation %.3e (tolerance %.0e) ... %s\n",
                r.name.c_str(), r.max_dev, r.tolerance,
                r.passed ? "pass" : "FAIL");
    all_passed = all_passed && r.passed;
  }
  std::printf("verify: %s\n", all_passed ? "all checks passed" : "FAILED");
  return all_passed ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Entanglement dynamics of a spin-1/2 XX chain with three-spin "
      "interaction: concurrence series, sudden-death detection, and a "
      "non-Markovianity witness"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_model_flags = [&](CLI::App* s) {
    CLI::Option* alpha =
        s->add_option("--alpha", cfg.alpha,
                      "Three-spin coupling relative to the NN coupling");
    s->add_flag("--pure-tsi", cfg.pure_tsi,
                "Pure three-spin interaction (no NN hopping)")
        ->excludes(alpha);
    s->add_option("--phi", cfg.phi, "Relative phase of the initial pair");
    s->add_option("--nk", cfg.n_k, "Momentum grid size (even, >= 64)");
  };
  auto add_grid_flags = [&](CLI::App* s) {
    s->add_option("--t0", cfg.t0, "Start time");
    s->add_option("--tmax", cfg.t_max, "End time");
    s->add_option("--dt", cfg.dt, "Time step");
  };
  auto add_output_flags = [&](CLI::App* s) {
    s->add_option("--out", cfg.out_path, "Output file (default: stdout)");
    s->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_alpha_range_flags = [&](CLI::App* s) {
    s->add_option("--alpha-min", cfg.alpha_min, "Scan start");
    s->add_option("--alpha-max", cfg.alpha_max, "Scan end");
    s->add_option("--alpha-step", cfg.alpha_step, "Scan step");
  };

  CLI::App* series =
      app.add_subcommand("series", "Concurrence time series of one pair");
  add_model_flags(series);
  add_grid_flags(series);
  add_output_flags(series);
  series->add_option("--pair", cfg.pair, "Which nearest-neighbor pair")
      ->check(CLI::IsMember({"system", "edge", "environment"}));

  CLI::App* wscan = app.add_subcommand(
      "witness-scan", "Non-Markovianity witness over an alpha range");
  add_alpha_range_flags(wscan);
  add_grid_flags(wscan);
  add_output_flags(wscan);
  wscan->add_option("--phi", cfg.phi, "Relative phase of the initial pair");
  wscan->add_option("--nk", cfg.n_k, "Momentum grid size (even, >= 64)");

  CLI::App* sscan = app.add_subcommand(
      "static-scan", "Concurrence vs alpha at fixed times");
  add_alpha_range_flags(sscan);
  add_output_flags(sscan);
  sscan->add_option("--phi", cfg.phi, "Relative phase of the initial pair");
  sscan->add_option("--nk", cfg.n_k, "Momentum grid size (even, >= 64)");
  sscan->add_option("--times", cfg.times, "Evaluation times (comma separated)")
      ->required()
      ->delimiter(',');

  CLI::App* envcmp = app.add_subcommand(
      "environment-compare",
      "Aligned concurrence of system, edge, and environment pairs");
  add_model_flags(envcmp);
  add_grid_flags(envcmp);
  add_output_flags(envcmp);

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the quadrature against independent references");
  verify->add_option("--nk", cfg.n_k, "Momentum grid size (even, >= 64)");
  verify->add_option("--tmax", cfg.t_max, "End time for the check grids");
  verify->add_option("--dt", cfg.dt, "Series step for the Bessel checks");
  verify->add_option("--phi", cfg.phi, "Relative phase of the initial pair");
  verify->add_option("--case", cfg.verify_case, "Which check to run")
      ->check(CLI::IsMember(
          {"all", "alpha_zero", "pure_tsi", "ring", "convergence"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidParams;
  }

  try {
    if (series->parsed()) return cmd_series(cfg);
    if (wscan->parsed()) return cmd_witness_scan(cfg);
    if (sscan->parsed()) return cmd_static_scan(cfg);
    if (envcmp->parsed()) return cmd_environment_compare(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid parameters: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::domain_error& e) {
    std::cerr << "error: inconsistent state: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
