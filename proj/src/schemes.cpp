#include "avgdiff/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace avgdiff {

std::string_view to_string(SchemeKind kind) noexcept {
  switch (kind) {
  case SchemeKind::CentralDiff: return "cd";
  case SchemeKind::Spectral: return "ps";
  case SchemeKind::AverageDiff: return "ad";
  }
  return "?";
}

SchemeKind parse_scheme_kind(std::string_view text) {
  if (text == "cd" || text == "central" || text == "central-diff") return SchemeKind::CentralDiff;
  if (text == "ps" || text == "spectral") return SchemeKind::Spectral;
  if (text == "ad" || text == "average" || text == "average-diff") return SchemeKind::AverageDiff;
  throw std::invalid_argument("unknown scheme '" + std::string(text) + "' (expected cd, ps or ad)");
}

namespace {

std::string describe_nonconvergence(double residual, int iterations, long step_index) {
  std::ostringstream os;
  os << "fixed-point iteration did not converge after " << iterations
     << " sweeps (residual " << residual << ")";
  if (step_index >= 0) os << " at step " << step_index;
  return os.str();
}

std::string describe_mean(double mean) {
  std::ostringstream os;
  os << "input mean " << mean << " is not zero and the mean-mode policy is Reject";
  return os.str();
}

} // namespace

NonConvergence::NonConvergence(double residual, int iterations, long step_index)
    : SolverError(describe_nonconvergence(residual, iterations, step_index)),
      residual_(residual), iterations_(iterations), step_index_(step_index) {}

MeanModeViolation::MeanModeViolation(double mean) : SolverError(describe_mean(mean)), mean_(mean) {}

SchemeInstance::SchemeInstance(SchemeKind kind, const PeriodicGrid& grid,
                               HamiltonianDensity density, double dt, SolverConfig solver)
    : kind_(kind), grid_(grid), density_(std::move(density)), dt_(dt), solver_(solver) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("SchemeInstance: time step must be positive and finite");
  }
  if (!(solver.fp_tol > 0.0)) throw std::invalid_argument("SchemeInstance: fp_tol must be positive");
  if (solver.fp_max_iter < 1) throw std::invalid_argument("SchemeInstance: fp_max_iter must be >= 1");
  compute_ratios();
}

OperatorKind SchemeInstance::left_operator() const noexcept {
  switch (kind_) {
  case SchemeKind::CentralDiff: return OperatorKind::CentralDiff;
  case SchemeKind::Spectral: return OperatorKind::Spectral;
  case SchemeKind::AverageDiff: return OperatorKind::ForwardDiff;
  }
  return OperatorKind::CentralDiff;
}

complex SchemeInstance::left_symbol(int j) const {
  return operator_symbol(left_operator(), j, grid_);
}

complex SchemeInstance::right_symbol(int j) const {
  if (kind_ == SchemeKind::AverageDiff && !identity_right_) {
    return operator_symbol(OperatorKind::ForwardAvg, j, grid_);
  }
  return 1.0;
}

SchemeInstance SchemeInstance::with_identity_right_operator() const {
  SchemeInstance copy = *this;
  copy.identity_right_ = true;
  copy.compute_ratios();
  return copy;
}

void SchemeInstance::compute_ratios() {
  const int J = grid_.max_mode();
  ratios_.assign(static_cast<std::size_t>(grid_.points()), 0.0);
  for (int j = -J; j <= J; ++j) {
    if (j == 0) continue;
    ratios_[static_cast<std::size_t>(j + J)] = right_symbol(j) / left_symbol(j);
  }
}

namespace {

void check_mean(const SchemeInstance& scheme, const GridFunction& u) {
  if (scheme.solver().mean_mode_policy == MeanModePolicy::Reject &&
      std::abs(u.mean()) > scheme.solver().fp_tol) {
    throw MeanModeViolation(u.mean());
  }
}

// One implicit-midpoint step with a signed time step. Mode 0 is never touched.
StepOutcome advance(const SchemeInstance& scheme, const GridFunction& u, double dt) {
  if (!(u.grid() == scheme.grid())) {
    throw std::invalid_argument("step: state does not live on the scheme's grid");
  }
  check_mean(scheme, u);
  const PeriodicGrid& grid = scheme.grid();
  const int J = grid.max_mode();
  const std::vector<complex>& ratios = scheme.mode_ratios();
  const HamiltonianDensity& density = scheme.density();

  if (density.is_quadratic()) {
    // s_D (v - u)/dt = c_2 s_R (v + u) per mode, with s_R/s_D = ratio.
    const double c2 = density.coefficient(2);
    SpectralVector s = dft(u);
    for (int j = -J; j <= J; ++j) {
      if (j == 0) continue;
      const complex r = dt * c2 * ratios[static_cast<std::size_t>(j + J)];
      s[j] *= (1.0 + r) / (1.0 - r);
    }
    return {idft(s), 1, 0.0};
  }

  GridFunction current = u;
  double residual = 0.0;
  for (int iter = 1; iter <= scheme.solver().fp_max_iter; ++iter) {
    SpectralVector s = dft(discrete_variational_derivative(current, u, density));
    for (int j = -J; j <= J; ++j) s[j] *= dt * ratios[static_cast<std::size_t>(j + J)];
    GridFunction next = u + idft(s);
    residual = (next - current).max_norm();
    current = std::move(next);
    if (residual <= scheme.solver().fp_tol) return {std::move(current), iter, residual};
  }
  throw NonConvergence(residual, scheme.solver().fp_max_iter);
}

} // namespace

StepOutcome step_with_stats(const SchemeInstance& scheme, const GridFunction& u) {
  return advance(scheme, u, scheme.dt());
}

GridFunction step(const SchemeInstance& scheme, const GridFunction& u) {
  return advance(scheme, u, scheme.dt()).state;
}

GridFunction step_backward(const SchemeInstance& scheme, const GridFunction& u) {
  return advance(scheme, u, -scheme.dt()).state;
}

double scheme_residual(const SchemeInstance& scheme, const GridFunction& u,
                       const GridFunction& u_next) {
  GridFunction lhs = apply(scheme.left_operator(), u_next - u);
  GridFunction dvd = discrete_variational_derivative(u_next, u, scheme.density());
  if (scheme.kind() == SchemeKind::AverageDiff && !scheme.right_operator_is_identity()) {
    dvd = forward_average(dvd);
  }
  GridFunction r = lhs - scheme.dt() * dvd;
  const double mean = r.mean();
  for (double& v : r.values()) v -= mean;
  return r.max_norm();
}

complex amplification_factor(const SchemeInstance& scheme, int j) {
  if (j == 0) throw std::invalid_argument("amplification_factor: mode 0 is held fixed");
  if (!scheme.density().is_quadratic()) {
    throw std::invalid_argument("amplification_factor: density must be quadratic");
  }
  const complex s_d = scheme.left_symbol(j) / scheme.dt();
  const complex s_r = scheme.density().coefficient(2) * scheme.right_symbol(j);
  return (s_d + s_r) / (s_d - s_r);
}

namespace {

template <typename Predicate>
Trajectory run_impl(const SchemeInstance& scheme, const GridFunction& u0, long steps,
                    Predicate&& snapshot_at) {
  if (steps < 1) throw std::invalid_argument("run: need at least one step");
  Trajectory traj;
  traj.energies.reserve(static_cast<std::size_t>(steps + 1));
  traj.iterations.reserve(static_cast<std::size_t>(steps));

  GridFunction u = u0;
  traj.energies.push_back(discrete_energy(u, scheme.density(), 0));
  if (snapshot_at(0L)) traj.snapshots.emplace_back(0L, u);
  for (long m = 0; m < steps; ++m) {
    try {
      StepOutcome out = step_with_stats(scheme, u);
      u = std::move(out.state);
      traj.iterations.push_back(out.iterations);
    } catch (const NonConvergence& e) {
      throw NonConvergence(e.residual(), e.iterations(), m);
    }
    traj.energies.push_back(discrete_energy(u, scheme.density(), m + 1));
    if (m + 1 == steps || snapshot_at(m + 1)) traj.snapshots.emplace_back(m + 1, u);
  }
  return traj;
}

} // namespace

Trajectory run(const SchemeInstance& scheme, const GridFunction& u0, long steps,
               long snapshot_stride) {
  if (snapshot_stride < 1) throw std::invalid_argument("run: snapshot stride must be >= 1");
  return run_impl(scheme, u0, steps, [&](long m) { return m % snapshot_stride == 0; });
}

Trajectory run(const SchemeInstance& scheme, const GridFunction& u0, long steps,
               const std::vector<long>& snapshot_indices) {
  const std::set<long> wanted(snapshot_indices.begin(), snapshot_indices.end());
  return run_impl(scheme, u0, steps, [&](long m) { return wanted.contains(m); });
}

} // namespace avgdiff
