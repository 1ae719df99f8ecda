#pragma once

#include "avgdiff/fourier.hpp"
#include "avgdiff/grid.hpp"
#include "avgdiff/schemes.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace avgdiff {

// Linear Klein-Gordon u_tx = u. A plane wave exp(i c t) exp(i kappa x) with
// kappa = 2 pi n / L solves it for c = -1/kappa; the semi-discretizations move
// resolved modes with the speeds below.

/// Phase speed of mode n under the semi-discretization of `kind`
/// (theta = 2 pi n / K):
///   CentralDiff  -dx / sin(theta)
///   Spectral     -1 / kappa             (= -1/n for L = 2 pi)
///   AverageDiff  -dx / (2 tan(theta/2))
/// Requires 1 <= |n| <= (K-1)/2; throws std::out_of_range otherwise.
double phase_speed(SchemeKind kind, int n, const PeriodicGrid& grid);

/// -1 / kappa.
double exact_phase_speed(int n, const PeriodicGrid& grid);

struct PhaseSpeedRow {
  int n = 0;
  double c_cd = 0.0;
  double c_ps = 0.0;
  double c_ad = 0.0;
  double c_exact = 0.0;
};

using PhaseSpeedTable = std::vector<PhaseSpeedRow>;

/// Rows n = 1..n_max. Throws std::out_of_range unless 1 <= n_max <= (K-1)/2.
PhaseSpeedTable phase_speed_table(const PeriodicGrid& grid, int n_max);

/// Complex Fourier coefficients a_n of periodic data, n != 0.
class FourierData {
public:
  FourierData() = default;

  /// Coefficients generator(n) for 0 < |n| <= truncation.
  static FourierData from_generator(const std::function<complex(int)>& generator, int truncation);

  /// Throws std::invalid_argument for n == 0 (the mean mode is excluded).
  void set(int n, complex a);
  complex coefficient(int n) const noexcept;

  /// Nonzero terms sorted by mode.
  const std::vector<std::pair<int, complex>>& terms() const noexcept { return terms_; }

private:
  std::vector<std::pair<int, complex>> terms_;
};

/// Samples u(t, x_k) = sum_n a_n exp(-i t / kappa_n) exp(i kappa_n x_k).
std::vector<complex> exact_linear_solution_values(const FourierData& data, double t,
                                                  const PeriodicGrid& grid);

/// Real part of exact_linear_solution_values.
GridFunction exact_linear_solution(const FourierData& data, double t, const PeriodicGrid& grid);

/// a_n = (1/2pi) int_0^{2pi} u0(x) exp(-i n x) dx for 0 < |n| <= max_mode, by
/// the periodic midpoint rule on `quadrature_points` cells.
FourierData fourier_coefficients(const std::function<double(double)>& u0, int max_mode,
                                 int quadrature_points = 1 << 16);

/// The square wave u0 = 1 on (pi/2, 3pi/2) and -1 on the rest of [0, 2pi).
double step_profile(double x) noexcept;

/// Closed-form coefficients of step_profile: a_{+-n} = -(2 / (n pi)) sin(n pi / 2)
/// for odd n <= truncation, zero for even n.
FourierData step_fourier_data(int truncation);

/// step_profile sampled on the grid. Points exactly on a jump take the value
/// -1; grid point K is evaluated at x = 0. Requires L = 2 pi.
GridFunction step_initial(const PeriodicGrid& grid);

/// Partial sum over odd n <= truncation of
///   -(4 / (n pi)) sin(n pi / 2) cos(n x - t / n).
/// Requires L = 2 pi and truncation >= 1.
GridFunction step_exact_solution(double t, const PeriodicGrid& grid, long truncation);

/// sum_k (a_k - b_k)^2 dx. This is the squared discrete L2 distance; no
/// square root is taken.
double l2_error(const GridFunction& numerical, const GridFunction& exact);

/// sum_k |u_{k+1} - u_k| over one period.
double total_variation(const GridFunction& u);

} // namespace avgdiff
