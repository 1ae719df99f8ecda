#include "avgdiff/cli/commands.hpp"

#include "avgdiff/analysis.hpp"
#include "avgdiff/cli/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace avgdiff::cli {
namespace {

namespace fs = std::filesystem;

// Shortest representation that reads back to the same double.
std::string num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  return os;
}

GridFunction reference_solution(const InitSpec& init, const RunPlan& plan, double t,
                                long truncation) {
  // u_tx = 2 c_2 u is u_tx = u in the rescaled time 2 c_2 t.
  const double scaled_t = 2.0 * plan.scheme.density().coefficient(2) * t;
  if (init.kind == InitKind::Step) return step_exact_solution(scaled_t, plan.grid, truncation);
  FourierData data;
  data.set(init.mode, complex(0.0, -0.5));
  data.set(-init.mode, complex(0.0, 0.5));
  return exact_linear_solution(data, scaled_t, plan.grid);
}

void write_gnuplot(const fs::path& dir, const RunConfig& config,
                   const std::vector<double>& times) {
  std::ofstream gp = open_output(dir / "plot_snapshots.gp");
  gp << "# " << describe(config) << "\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel 'x'\nset ylabel 'u'\n"
     << "plot \\\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    gp << "  'snapshots.csv' using 2:($1==" << num(times[i]) << " ? $3 : 1/0) with lines title 't="
       << num(times[i]) << "'" << (i + 1 < times.size() ? ", \\\n" : "\n");
  }
}

} // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<RunPlan> planned;
  try {
    planned.emplace(plan_run(config));
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  const RunPlan& plan = *planned;

  const double dt = plan.scheme.dt();
  const HamiltonianDensity& density = plan.scheme.density();

  Trajectory traj;
  if (plan.steps == 0) {
    traj.snapshots.emplace_back(0L, plan.initial);
    traj.energies.push_back(discrete_energy(plan.initial, density, 0));
  } else {
    try {
      traj = run(plan.scheme, plan.initial, plan.steps, plan.snapshot_indices);
    } catch (const NonConvergence& e) {
      err << "solver error at step " << e.step_index() << ": " << e.what() << "\n";
      return kSolverError;
    } catch (const SolverError& e) {
      err << "solver error: " << e.what() << "\n";
      return kSolverError;
    }
  }

  const fs::path dir(config.output_dir);
  try {
    fs::create_directories(dir);
  } catch (const fs::filesystem_error& e) {
    err << "cannot create output directory: " << e.what() << "\n";
    return kConfigError;
  }
  const std::string header = "# " + describe(config) + "\n";
  const PeriodicGrid& grid = plan.grid;

  std::vector<double> snapshot_times;
  {
    std::ofstream csv = open_output(dir / "snapshots.csv");
    csv << header << "t,x,u\n";
    for (const auto& [m, u] : traj.snapshots) {
      const double t = static_cast<double>(m) * dt;
      snapshot_times.push_back(t);
      for (int k = 1; k <= grid.points(); ++k) {
        csv << num(t) << ',' << num(grid.x(k)) << ',' << num(u(k)) << '\n';
      }
    }
  }

  double max_drift = 0.0;
  {
    std::ofstream csv = open_output(dir / "energy.csv");
    csv << header << "t,H_d,drift\n";
    const double h0 = traj.energies.front().value;
    for (const DiscreteEnergy& e : traj.energies) {
      const double drift = h0 != 0.0 ? (e.value - h0) / std::abs(h0) : e.value - h0;
      max_drift = std::max(max_drift, std::abs(drift));
      csv << num(static_cast<double>(e.time_index) * dt) << ',' << num(e.value) << ','
          << num(drift) << '\n';
    }
  }

  double final_error = std::nan("");
  if (plan.exact_reference) {
    std::ofstream csv = open_output(dir / "error.csv");
    csv << header << "t,l2_error\n";
    for (const auto& [m, u] : traj.snapshots) {
      const double t = static_cast<double>(m) * dt;
      final_error = l2_error(u, reference_solution(*plan.exact_reference, plan, t,
                                                   config.exact_truncation));
      csv << num(t) << ',' << num(final_error) << '\n';
    }
  }

  write_gnuplot(dir, config, snapshot_times);

  long total_iterations = 0;
  int max_iterations = 0;
  for (int it : traj.iterations) {
    total_iterations += it;
    max_iterations = std::max(max_iterations, it);
  }
  out << "scheme=" << to_string(plan.scheme.kind()) << " K=" << grid.points()
      << " steps=" << plan.steps << " final_error="
      << (plan.exact_reference ? num(final_error) : std::string("n/a"))
      << " max_energy_drift=" << num(max_drift) << " solver_iterations=" << total_iterations
      << " max_iterations_per_step=" << max_iterations << "\n";
  return kSuccess;
}

int cmd_phase_speeds(const PhaseSpeedsConfig& config, std::ostream& out, std::ostream& err) {
  PhaseSpeedTable table;
  try {
    table = phase_speed_table(PeriodicGrid(config.K), config.n_max);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  fs::path path = config.output.empty() ? fs::path(config.output_dir) / "phase_speeds.csv"
                                        : fs::path(config.output);
  try {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream csv = open_output(path);
    csv << "# K=" << config.K << " n_max=" << config.n_max << "\n"
        << "n,c_cd,c_ps,c_ad,c_exact\n";
    for (const PhaseSpeedRow& row : table) {
      csv << row.n << ',' << num(row.c_cd) << ',' << num(row.c_ps) << ',' << num(row.c_ad) << ','
          << num(row.c_exact) << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  out << "wrote " << table.size() << " rows to " << path.string() << "\n";
  return kSuccess;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out) {
  const auto results = run_property_suite(config.seed, config.corrupt_average_diff);
  bool all = true;
  for (const PropertyResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
    all = all && r.passed;
  }
  out << (all ? "all properties passed" : "some properties FAILED") << " (seed " << config.seed
      << ")\n";
  return all ? kSuccess : kVerifyFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conservative schemes for u_tx = G'(u) on a periodic domain"};
  app.require_subcommand(1);
  // Config files use one [run] / [phase-speeds] section per subcommand. The
  // option lives on the top-level app; fallthrough lets it follow the
  // subcommand name on the command line.
  app.set_config("--config", "", "INI/TOML file of option values; flags take precedence");
  app.fallthrough();

  RunConfig run_config;
  auto* run_cmd = app.add_subcommand("run", "Integrate one scheme and write CSV output");
  run_cmd->add_option("--scheme", run_config.scheme, "cd, ps or ad")->capture_default_str();
  run_cmd->add_option("--K", run_config.K, "Number of grid points (odd)")->capture_default_str();
  run_cmd->add_option("--dt", run_config.dt, "Time step")->capture_default_str();
  run_cmd->add_option("--t-end", run_config.t_end, "Final time (multiple of dt)")->capture_default_str();
  run_cmd->add_option("--density", run_config.density, "poly:c0,c1,...,cP")->capture_default_str();
  run_cmd->add_option("--init", run_config.init, "step, sine:<n> or file:<path>")->capture_default_str();
  run_cmd->add_option("--snapshot-times", run_config.snapshot_times, "Comma-separated output times")
      ->delimiter(',');
  run_cmd->add_option("--output-dir", run_config.output_dir, "Output directory")
      ->envname("AVGDIFF_OUTPUT_DIR")
      ->capture_default_str();
  run_cmd->add_option("--exact-truncation", run_config.exact_truncation,
                      "Largest mode of the exact series")->capture_default_str();
  run_cmd->add_option("--mean-mode-policy", run_config.mean_mode_policy, "project-zero or reject")
      ->capture_default_str();
  run_cmd->add_option("--fp-tol", run_config.fp_tol, "Fixed-point tolerance")->capture_default_str();
  run_cmd->add_option("--fp-max-iter", run_config.fp_max_iter, "Fixed-point iteration cap")
      ->capture_default_str();
  run_cmd->add_option("--seed", run_config.seed, "Random seed")->capture_default_str();

  PhaseSpeedsConfig phase_config;
  auto* phase_cmd = app.add_subcommand("phase-speeds", "Tabulate semi-discrete phase speeds");
  phase_cmd->add_option("--K", phase_config.K, "Number of grid points (odd)")->capture_default_str();
  phase_cmd->add_option("--n-max", phase_config.n_max, "Largest mode")->capture_default_str();
  phase_cmd->add_option("--output", phase_config.output, "CSV path");
  phase_cmd->add_option("--output-dir", phase_config.output_dir, "Output directory")
      ->envname("AVGDIFF_OUTPUT_DIR")
      ->capture_default_str();

  VerifyConfig verify_config;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized invariant suite");
  verify_cmd->add_option("--seed", verify_config.seed, "Random seed")->capture_default_str();
  verify_cmd->add_flag("--debug-corrupt-ad", verify_config.corrupt_average_diff,
                       "Replace the average-difference right operator by the identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    if (*run_cmd) return cmd_run(run_config, out, err);
    if (*phase_cmd) return cmd_phase_speeds(phase_config, out, err);
    return cmd_verify(verify_config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

} // namespace avgdiff::cli
