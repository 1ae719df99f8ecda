#pragma once

#include "avgdiff/grid.hpp"
#include "avgdiff/operators.hpp"
#include "avgdiff/schemes.hpp"

#include <Eigen/Dense>

namespace avgdiff::oracle {

// Brute-force K x K reference matrices, assembled entry by entry from the
// operator definitions. Nothing here goes through the FFT or per-mode solves,
// so these can check the fast paths.

/// Circulant matrix of `op`. The spectral matrix is assembled from the
/// explicit sum  (1/K) sum_j i kappa_j exp(2 pi i j (k - l) / K).
Eigen::MatrixXd operator_matrix(OperatorKind op, const PeriodicGrid& grid);

/// Unitary DFT matrix F_{jk} = K^{-1/2} exp(-2 pi i j k / K), rows ordered
/// from mode -(K-1)/2 to (K-1)/2, columns k = 1..K.
Eigen::MatrixXcd dft_matrix(const PeriodicGrid& grid);

Eigen::VectorXd to_vector(const GridFunction& u);
GridFunction from_vector(const PeriodicGrid& grid, const Eigen::VectorXd& v);

/// One midpoint step of a scheme with quadratic density, by dense LU on
///   (D/dt - c_2 R) u' = (D/dt + c_2 R) u.
/// Matches step() for zero-mean u; c_1 is ignored. The raw system sends the
/// mean to its negative, whereas step() holds it fixed.
GridFunction dense_linear_step(const SchemeInstance& scheme, const GridFunction& u);

} // namespace avgdiff::oracle
