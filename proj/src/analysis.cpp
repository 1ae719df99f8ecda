#include "avgdiff/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace avgdiff {
namespace {

constexpr double pi = std::numbers::pi;

void require_two_pi(const PeriodicGrid& grid, const char* what) {
  if (std::abs(grid.period() - 2.0 * pi) > 1e-14) {
    throw std::invalid_argument(std::string(what) + ": requires period 2*pi");
  }
}

} // namespace

double phase_speed(SchemeKind kind, int n, const PeriodicGrid& grid) {
  if (n == 0 || std::abs(n) > grid.max_mode()) {
    throw std::out_of_range("phase_speed: mode " + std::to_string(n) + " not in 1..(K-1)/2");
  }
  const double theta = grid.mode_angle(n);
  const double dx = grid.spacing();
  switch (kind) {
  case SchemeKind::CentralDiff: return -dx / std::sin(theta);
  case SchemeKind::Spectral: return exact_phase_speed(n, grid);
  case SchemeKind::AverageDiff: return -dx / (2.0 * std::tan(0.5 * theta));
  }
  throw std::invalid_argument("unknown scheme kind");
}

double exact_phase_speed(int n, const PeriodicGrid& grid) {
  // Written as -(L / 2pi) / n so that L = 2pi gives exactly -1/n.
  return -(grid.period() / (2.0 * pi)) / static_cast<double>(n);
}

PhaseSpeedTable phase_speed_table(const PeriodicGrid& grid, int n_max) {
  if (n_max < 1 || n_max > grid.max_mode()) {
    throw std::out_of_range("phase_speed_table: n_max must be in 1.." +
                            std::to_string(grid.max_mode()));
  }
  PhaseSpeedTable table;
  table.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    table.push_back({n, phase_speed(SchemeKind::CentralDiff, n, grid),
                     phase_speed(SchemeKind::Spectral, n, grid),
                     phase_speed(SchemeKind::AverageDiff, n, grid), exact_phase_speed(n, grid)});
  }
  return table;
}

FourierData FourierData::from_generator(const std::function<complex(int)>& generator,
                                        int truncation) {
  FourierData data;
  for (int n = -truncation; n <= truncation; ++n) {
    if (n == 0) continue;
    const complex a = generator(n);
    if (a != 0.0) data.terms_.emplace_back(n, a);
  }
  return data;
}

void FourierData::set(int n, complex a) {
  if (n == 0) throw std::invalid_argument("FourierData: mode 0 is excluded");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                             [](const auto& term, int mode) { return term.first < mode; });
  if (it != terms_.end() && it->first == n) {
    it->second = a;
  } else {
    terms_.emplace(it, n, a);
  }
}

complex FourierData::coefficient(int n) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                             [](const auto& term, int mode) { return term.first < mode; });
  return (it != terms_.end() && it->first == n) ? it->second : complex{};
}

std::vector<complex> exact_linear_solution_values(const FourierData& data, double t,
                                                  const PeriodicGrid& grid) {
  std::vector<complex> out(static_cast<std::size_t>(grid.points()));
  for (int k = 1; k <= grid.points(); ++k) {
    complex sum = 0.0;
    for (const auto& [n, a] : data.terms()) {
      const double kappa = grid.wavenumber(n);
      sum += a * std::polar(1.0, kappa * grid.x(k) - t / kappa);
    }
    out[static_cast<std::size_t>(k - 1)] = sum;
  }
  return out;
}

GridFunction exact_linear_solution(const FourierData& data, double t, const PeriodicGrid& grid) {
  const std::vector<complex> values = exact_linear_solution_values(data, t, grid);
  GridFunction u(grid);
  for (std::size_t i = 0; i < values.size(); ++i) u[i] = values[i].real();
  return u;
}

FourierData fourier_coefficients(const std::function<double(double)>& u0, int max_mode,
                                 int quadrature_points) {
  if (quadrature_points < 1) throw std::invalid_argument("fourier_coefficients: need >= 1 point");
  const double h = 2.0 * pi / quadrature_points;
  std::vector<double> samples(static_cast<std::size_t>(quadrature_points));
  for (int q = 0; q < quadrature_points; ++q) {
    samples[static_cast<std::size_t>(q)] = u0((q + 0.5) * h);
  }
  FourierData data;
  for (int n = -max_mode; n <= max_mode; ++n) {
    if (n == 0) continue;
    complex sum = 0.0;
    for (int q = 0; q < quadrature_points; ++q) {
      sum += samples[static_cast<std::size_t>(q)] * std::polar(1.0, -n * (q + 0.5) * h);
    }
    data.set(n, sum / static_cast<double>(quadrature_points));
  }
  return data;
}

double step_profile(double x) noexcept {
  return (x > 0.5 * pi && x < 1.5 * pi) ? 1.0 : -1.0;
}

FourierData step_fourier_data(int truncation) {
  return FourierData::from_generator(
      [](int n) -> complex {
        const int m = std::abs(n);
        if (m % 2 == 0) return 0.0;
        const double sign = ((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;  // sin(m pi / 2)
        return -2.0 * sign / (m * pi);
      },
      truncation);
}

GridFunction step_initial(const PeriodicGrid& grid) {
  require_two_pi(grid, "step_initial");
  GridFunction u(grid);
  for (int k = 1; k <= grid.points(); ++k) {
    const double x = (k == grid.points()) ? 0.0 : grid.x(k);
    u[static_cast<std::size_t>(k - 1)] = step_profile(x);
  }
  return u;
}

GridFunction step_exact_solution(double t, const PeriodicGrid& grid, long truncation) {
  require_two_pi(grid, "step_exact_solution");
  if (truncation < 1) throw std::invalid_argument("step_exact_solution: truncation must be >= 1");
  const long K = grid.points();
  const long n_top = truncation % 2 == 1 ? truncation : truncation - 1;
  GridFunction u(grid);
  for (long k = 1; k <= K; ++k) {
    double sum = 0.0;
    // Smallest terms first; n x_k is reduced exactly as 2 pi ((n k) mod K) / K.
    for (long n = n_top; n >= 1; n -= 2) {
      const double sign = ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      const double b = -4.0 * sign / (static_cast<double>(n) * pi);
      const double phase = 2.0 * pi * static_cast<double>((n * k) % K) / static_cast<double>(K);
      sum += b * std::cos(phase - t / static_cast<double>(n));
    }
    u[static_cast<std::size_t>(k - 1)] = sum;
  }
  return u;
}

double l2_error(const GridFunction& numerical, const GridFunction& exact) {
  require_same_grid(numerical, exact);
  double s = 0.0;
  for (std::size_t i = 0; i < numerical.size(); ++i) {
    const double d = numerical[i] - exact[i];
    s += d * d;
  }
  return s * numerical.grid().spacing();
}

double total_variation(const GridFunction& u) {
  double tv = 0.0;
  const long K = static_cast<long>(u.size());
  for (long k = 1; k <= K; ++k) tv += std::abs(u(k + 1) - u(k));
  return tv;
}

} // namespace avgdiff
