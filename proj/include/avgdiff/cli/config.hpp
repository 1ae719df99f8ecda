#pragma once

#include "avgdiff/analysis.hpp"
#include "avgdiff/grid.hpp"
#include "avgdiff/schemes.hpp"
#include "avgdiff/variational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace avgdiff::cli {

/// Invalid command-line or config-file input. Maps to exit code 1.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string scheme = "ad";
  int K = 129;
  double dt = 0.01;
  double t_end = 1.0;
  std::string density = "poly:0,0,0.5";
  /// "step", "sine:<n>" or "file:<path>".
  std::string init = "step";
  std::vector<double> snapshot_times;
  std::string output_dir = ".";
  long exact_truncation = 100000;
  std::string mean_mode_policy = "project-zero";
  double fp_tol = 1e-13;
  int fp_max_iter = 200;
  std::uint64_t seed = 0;
};

/// Single-line "key=value ..." rendering of every setting except the output
/// directory, so files from identical runs are byte-identical.
std::string describe(const RunConfig& config);

enum class InitKind { Step, Sine, File };

struct InitSpec {
  InitKind kind = InitKind::Step;
  int mode = 0;       // Sine
  std::string path;   // File
};

InitSpec parse_init(const std::string& text);
MeanModePolicy parse_mean_mode_policy(const std::string& text);
std::string to_string(MeanModePolicy policy);

/// Number of steps T/dt, provided it is an integer up to a few ulps.
/// Throws ConfigError otherwise.
long step_count(double t, double dt, const char* what);

/// Everything `run` needs, checked and resolved.
struct RunPlan {
  PeriodicGrid grid;
  SchemeInstance scheme;
  GridFunction initial;
  long steps = 0;
  /// Sorted, unique time indices m to write, always including 0 and steps.
  std::vector<long> snapshot_indices;
  /// Reference solution for error.csv, when one exists (quadratic density
  /// with step or sine initial data).
  std::optional<InitSpec> exact_reference;
};

/// Validates the config and reads any initial-data file. Throws ConfigError.
RunPlan plan_run(const RunConfig& config);

/// Reads K whitespace- or comma-separated values; '#' starts a comment.
GridFunction read_initial_file(const std::string& path, const PeriodicGrid& grid);

} // namespace avgdiff::cli
