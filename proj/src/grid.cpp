#include "avgdiff/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace avgdiff {

PeriodicGrid::PeriodicGrid(int points, double period)
    : points_(points), period_(period), spacing_(period / points) {
  if (points < 3 || points % 2 == 0) {
    throw std::invalid_argument("PeriodicGrid: number of points must be odd and >= 3, got " +
                                std::to_string(points));
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument("PeriodicGrid: period must be positive and finite");
  }
}

double PeriodicGrid::mode_angle(int j) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points_);
}

double PeriodicGrid::wavenumber(int j) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / period_;
}

GridFunction::GridFunction(const PeriodicGrid& grid)
    : grid_(grid), values_(static_cast<std::size_t>(grid.points()), 0.0) {}

GridFunction::GridFunction(const PeriodicGrid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(grid.points())) {
    throw std::invalid_argument("GridFunction: expected " + std::to_string(grid.points()) +
                                " values, got " + std::to_string(values_.size()));
  }
}

std::size_t GridFunction::wrap(long k) const noexcept {
  const long n = static_cast<long>(values_.size());
  long i = (k - 1) % n;
  if (i < 0) i += n;
  return static_cast<std::size_t>(i);
}

double GridFunction::mean() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

double GridFunction::max_norm() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(double scale) noexcept {
  for (double& v : values_) v *= scale;
  return *this;
}

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) {
    throw std::invalid_argument("grid functions live on different grids");
  }
}

double inner_product(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s * a.grid().spacing();
}

} // namespace avgdiff
