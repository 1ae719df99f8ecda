#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace avgdiff {

/// Uniform periodic mesh on [0, L) with K points.
///
/// Grid point k (k = 1, ..., K) sits at x_k = k * dx. Point K coincides with
/// x = L, which is identified with x = 0 by periodicity. K must be odd and at
/// least 3: odd K removes the Nyquist mode, so every difference operator is
/// invertible on the nonzero modes.
class PeriodicGrid {
public:
  explicit PeriodicGrid(int points, double period = 2.0 * std::numbers::pi);

  int points() const noexcept { return points_; }
  double period() const noexcept { return period_; }
  double spacing() const noexcept { return spacing_; }

  /// Largest resolved mode index (K - 1) / 2.
  int max_mode() const noexcept { return (points_ - 1) / 2; }

  /// Coordinate of the 1-based grid point k.
  double x(long k) const noexcept { return static_cast<double>(k) * spacing_; }

  /// Angle 2*pi*j/K of mode j on this grid (equals j*dx when L = 2*pi).
  double mode_angle(int j) const noexcept;

  /// Wavenumber 2*pi*j/L of mode j.
  double wavenumber(int j) const noexcept;

  friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

private:
  int points_;
  double period_;
  double spacing_;
};

/// Real grid vector u = (u_1, ..., u_K) on a periodic grid.
///
/// Storage is 0-based: values()[i] holds u_{i+1}. The call operator takes the
/// 1-based index and wraps periodically, so u(k + K) == u(k) for every k.
class GridFunction {
public:
  explicit GridFunction(const PeriodicGrid& grid);
  GridFunction(const PeriodicGrid& grid, std::vector<double> values);

  template <typename F>
  static GridFunction sample(const PeriodicGrid& grid, F&& f) {
    GridFunction u(grid);
    for (int k = 1; k <= grid.points(); ++k) {
      u.values_[static_cast<std::size_t>(k - 1)] = f(grid.x(k));
    }
    return u;
  }

  const PeriodicGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double& operator[](std::size_t i) noexcept { return values_[i]; }

  double operator()(long k) const noexcept { return values_[wrap(k)]; }

  double mean() const noexcept;
  double max_norm() const noexcept;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(double scale) noexcept;

  friend GridFunction operator+(GridFunction lhs, const GridFunction& rhs) { return lhs += rhs; }
  friend GridFunction operator-(GridFunction lhs, const GridFunction& rhs) { return lhs -= rhs; }
  friend GridFunction operator*(double scale, GridFunction u) { return u *= scale; }

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

private:
  std::size_t wrap(long k) const noexcept;

  PeriodicGrid grid_;
  std::vector<double> values_;
};

/// Throws std::invalid_argument unless both functions live on the same grid.
void require_same_grid(const GridFunction& a, const GridFunction& b);

/// Sum_k a_k * b_k * dx.
double inner_product(const GridFunction& a, const GridFunction& b);

} // namespace avgdiff
