#include "avgdiff/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace avgdiff {
namespace {

template <typename Stencil>
GridFunction apply_stencil(const GridFunction& u, Stencil&& stencil) {
  GridFunction out(u.grid());
  const long K = u.grid().points();
  for (long k = 1; k <= K; ++k) {
    out[static_cast<std::size_t>(k - 1)] = stencil(u(k - 1), u(k), u(k + 1));
  }
  return out;
}

} // namespace

GridFunction central_diff(const GridFunction& u) {
  const double inv = 1.0 / (2.0 * u.grid().spacing());
  return apply_stencil(u, [inv](double left, double, double right) { return (right - left) * inv; });
}

GridFunction forward_diff(const GridFunction& u) {
  const double inv = 1.0 / u.grid().spacing();
  return apply_stencil(u, [inv](double, double mid, double right) { return (right - mid) * inv; });
}

GridFunction forward_average(const GridFunction& u) {
  return apply_stencil(u, [](double, double mid, double right) { return 0.5 * (right + mid); });
}

GridFunction spectral_diff(const GridFunction& u) {
  // Odd K is a grid invariant, so there is no Nyquist mode to special-case.
  SpectralVector s = dft(u);
  const PeriodicGrid& grid = u.grid();
  for (int j = -grid.max_mode(); j <= grid.max_mode(); ++j) {
    s[j] *= complex(0.0, grid.wavenumber(j));
  }
  return idft(s);
}

GridFunction apply(OperatorKind op, const GridFunction& u) {
  switch (op) {
  case OperatorKind::CentralDiff: return central_diff(u);
  case OperatorKind::ForwardDiff: return forward_diff(u);
  case OperatorKind::ForwardAvg: return forward_average(u);
  case OperatorKind::Spectral: return spectral_diff(u);
  }
  throw std::invalid_argument("unknown operator kind");
}

complex operator_symbol(OperatorKind op, int j, const PeriodicGrid& grid) {
  if (j < -grid.max_mode() || j > grid.max_mode()) {
    throw std::out_of_range("operator_symbol: mode " + std::to_string(j) +
                            " outside the resolved range");
  }
  const double theta = grid.mode_angle(j);
  const double dx = grid.spacing();
  switch (op) {
  case OperatorKind::CentralDiff: return {0.0, std::sin(theta) / dx};
  case OperatorKind::ForwardDiff: return (std::polar(1.0, theta) - 1.0) / dx;
  case OperatorKind::ForwardAvg: return 0.5 * (std::polar(1.0, theta) + 1.0);
  case OperatorKind::Spectral: return {0.0, grid.wavenumber(j)};
  }
  throw std::invalid_argument("unknown operator kind");
}

} // namespace avgdiff
