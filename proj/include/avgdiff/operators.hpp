#pragma once

#include "avgdiff/fourier.hpp"
#include "avgdiff/grid.hpp"

namespace avgdiff {

/// Shift-invariant periodic operators. Each one is a circulant matrix and is
/// diagonalized by the discrete Fourier modes exp(2 pi i j k / K).
enum class OperatorKind { CentralDiff, ForwardDiff, ForwardAvg, Spectral };

/// (u_{k+1} - u_{k-1}) / (2 dx)
GridFunction central_diff(const GridFunction& u);

/// (u_{k+1} - u_k) / dx
GridFunction forward_diff(const GridFunction& u);

/// (u_{k+1} + u_k) / 2
GridFunction forward_average(const GridFunction& u);

/// Fourier-spectral derivative: multiply mode j by i * 2 pi j / L and
/// transform back. Exact on every resolved mode |j| <= (K-1)/2.
GridFunction spectral_diff(const GridFunction& u);

GridFunction apply(OperatorKind op, const GridFunction& u);

/// Eigenvalue of `op` on mode j, with theta = 2 pi j / K:
///   CentralDiff  i sin(theta) / dx
///   ForwardDiff  (exp(i theta) - 1) / dx
///   ForwardAvg   (exp(i theta) + 1) / 2
///   Spectral     i 2 pi j / L
/// Throws std::out_of_range for |j| > (K-1)/2.
complex operator_symbol(OperatorKind op, int j, const PeriodicGrid& grid);

} // namespace avgdiff
