#pragma once

#include "avgdiff/grid.hpp"

#include <complex>
#include <span>
#include <vector>

namespace avgdiff {

using complex = std::complex<double>;

/// Discrete Fourier coefficients of a grid vector, indexed by signed mode
/// j in [-(K-1)/2, (K-1)/2].
class SpectralVector {
public:
  explicit SpectralVector(const PeriodicGrid& grid);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  int max_mode() const noexcept { return grid_.max_mode(); }

  complex operator[](int mode) const { return coeffs_[slot(mode)]; }
  complex& operator[](int mode) { return coeffs_[slot(mode)]; }

  /// Coefficients ordered from mode -(K-1)/2 up to (K-1)/2.
  std::span<const complex> coefficients() const noexcept { return coeffs_; }
  std::span<complex> coefficients() noexcept { return coeffs_; }

  /// Sum of |c_j|^2.
  double squared_norm() const noexcept;

private:
  std::size_t slot(int mode) const;

  PeriodicGrid grid_;
  std::vector<complex> coeffs_;
};

/// Unitary transform  c_j = K^{-1/2} sum_{k=1}^{K} exp(-2 pi i j k / K) u_k.
SpectralVector dft(const GridFunction& u);

/// Inverse of dft; returns the complex grid values u_k, k = 1..K (0-based).
std::vector<complex> idft_complex(const SpectralVector& s);

/// Inverse of dft, keeping the real part.
GridFunction idft(const SpectralVector& s);

} // namespace avgdiff
