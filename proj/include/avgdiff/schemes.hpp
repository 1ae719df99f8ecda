#pragma once

#include "avgdiff/fourier.hpp"
#include "avgdiff/grid.hpp"
#include "avgdiff/operators.hpp"
#include "avgdiff/variational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace avgdiff {

/// Spatial discretization of u_tx = G'(u), each paired with the implicit
/// midpoint rule in time:
///   CentralDiff  central_diff((u' - u)/dt) = dvd(u', u)
///   Spectral     spectral_diff((u' - u)/dt) = dvd(u', u)
///   AverageDiff  forward_diff((u' - u)/dt) = forward_average(dvd(u', u))
enum class SchemeKind { CentralDiff, Spectral, AverageDiff };

std::string_view to_string(SchemeKind kind) noexcept;

/// Accepts "cd", "ps", "ad" and the full names. Throws std::invalid_argument.
SchemeKind parse_scheme_kind(std::string_view text);

/// How the constant Fourier mode is treated. Every difference operator
/// annihilates it, so the scheme cannot evolve the mean.
///   ProjectZero  the mean is held fixed and only modes j != 0 are solved
///   Reject       as above, but inputs with |mean| > fp_tol are refused
enum class MeanModePolicy { ProjectZero, Reject };

struct SolverConfig {
  double fp_tol = 1e-13;
  int fp_max_iter = 200;
  MeanModePolicy mean_mode_policy = MeanModePolicy::ProjectZero;
};

class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public SolverError {
public:
  NonConvergence(double residual, int iterations, long step_index = -1);

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }
  /// Index m of the failing step u^m -> u^{m+1}, or -1 if unknown.
  long step_index() const noexcept { return step_index_; }

private:
  double residual_;
  int iterations_;
  long step_index_;
};

class MeanModeViolation : public SolverError {
public:
  explicit MeanModeViolation(double mean);
  double mean() const noexcept { return mean_; }

private:
  double mean_;
};

/// A scheme bound to its grid, density, time step and solver settings.
/// Immutable; the per-mode symbols are computed once at construction.
class SchemeInstance {
public:
  SchemeInstance(SchemeKind kind, const PeriodicGrid& grid, HamiltonianDensity density, double dt,
                 SolverConfig solver = {});

  SchemeKind kind() const noexcept { return kind_; }
  const PeriodicGrid& grid() const noexcept { return grid_; }
  const HamiltonianDensity& density() const noexcept { return density_; }
  double dt() const noexcept { return dt_; }
  const SolverConfig& solver() const noexcept { return solver_; }

  /// Operator applied to (u' - u)/dt.
  OperatorKind left_operator() const noexcept;

  /// Symbol of the operator applied to the variational derivative
  /// (1 except for AverageDiff).
  complex right_symbol(int j) const;
  complex left_symbol(int j) const;

  /// Test hook: the same scheme with its right operator replaced by the
  /// identity. For AverageDiff this breaks discrete conservation.
  SchemeInstance with_identity_right_operator() const;
  bool right_operator_is_identity() const noexcept { return identity_right_; }

  /// s_R(j) / s_D(j) for every mode, ordered from -(K-1)/2 to (K-1)/2;
  /// the mode-0 entry is 0.
  const std::vector<complex>& mode_ratios() const noexcept { return ratios_; }

private:
  void compute_ratios();

  SchemeKind kind_;
  PeriodicGrid grid_;
  HamiltonianDensity density_;
  double dt_;
  SolverConfig solver_;
  bool identity_right_ = false;
  std::vector<complex> ratios_;
};

struct StepOutcome {
  GridFunction state;
  int iterations = 0;
  /// Final fixed-point residual max|u'_{n+1} - u'_n| (0 on the linear path).
  double residual = 0.0;
};

/// Advances u by one time step. Quadratic densities take the exact per-mode
/// path; others run fixed-point sweeps starting from u' = u, each sweep
/// solving the circulant system mode by mode.
/// Throws NonConvergence or MeanModeViolation.
StepOutcome step_with_stats(const SchemeInstance& scheme, const GridFunction& u);

GridFunction step(const SchemeInstance& scheme, const GridFunction& u);

/// Inverse of step: finds the earlier state w with step(w) == u.
GridFunction step_backward(const SchemeInstance& scheme, const GridFunction& u);

/// Max-norm of D(u_next - u) - dt R(dvd(u_next, u)) with the mean mode
/// removed, where D and R are the scheme's left and right operators.
double scheme_residual(const SchemeInstance& scheme, const GridFunction& u,
                       const GridFunction& u_next);

/// Growth factor of mode j for a quadratic density:
///   g_j = (s_D/dt + c_2 s_R) / (s_D/dt - c_2 s_R).
/// Throws std::invalid_argument for j == 0 or a density of degree > 2.
complex amplification_factor(const SchemeInstance& scheme, int j);

struct Trajectory {
  std::vector<std::pair<long, GridFunction>> snapshots;
  /// H_d at every time level 0..M.
  std::vector<DiscreteEnergy> energies;
  /// Solver iterations of each step.
  std::vector<int> iterations;
};

/// Runs `steps` time steps, recording snapshots at every multiple of
/// `snapshot_stride` (including m = 0) and at the final level.
/// A failing step rethrows NonConvergence with its step index set.
Trajectory run(const SchemeInstance& scheme, const GridFunction& u0, long steps,
               long snapshot_stride);

/// As above but with snapshots at the given time indices (plus the final level).
Trajectory run(const SchemeInstance& scheme, const GridFunction& u0, long steps,
               const std::vector<long>& snapshot_indices);

} // namespace avgdiff
