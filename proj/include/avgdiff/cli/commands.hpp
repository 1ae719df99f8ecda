#pragma once

#include "avgdiff/cli/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace avgdiff::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 1,
  kSolverError = 2,
  kVerifyFailed = 3,
};

/// Integrates one scheme and writes snapshots.csv (t,x,u), energy.csv
/// (t,H_d,drift), error.csv (t,l2_error) when an exact reference exists, and
/// a gnuplot script plot_snapshots.gp into config.output_dir.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct PhaseSpeedsConfig {
  int K = 65;
  int n_max = 32;
  /// Defaults to <output_dir>/phase_speeds.csv when empty.
  std::string output;
  std::string output_dir = ".";
};

/// Writes phase_speeds.csv with columns n,c_cd,c_ps,c_ad,c_exact.
int cmd_phase_speeds(const PhaseSpeedsConfig& config, std::ostream& out, std::ostream& err);

struct VerifyConfig {
  std::uint64_t seed = 0;
  bool corrupt_average_diff = false;
};

/// Runs the invariant suite, one PASS/FAIL line per property.
int cmd_verify(const VerifyConfig& config, std::ostream& out);

/// Entry point of the `avgdiff` tool: subcommands run, phase-speeds, verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace avgdiff::cli
