#include "avgdiff/dense_oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace avgdiff::oracle {
namespace {

using cplx = std::complex<double>;

long wrap(long i, long n) { return ((i % n) + n) % n; }

} // namespace

Eigen::MatrixXd operator_matrix(OperatorKind op, const PeriodicGrid& grid) {
  const long K = grid.points();
  const double dx = grid.spacing();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(K, K);
  switch (op) {
  case OperatorKind::CentralDiff:
    for (long k = 0; k < K; ++k) {
      m(k, wrap(k + 1, K)) += 1.0 / (2.0 * dx);
      m(k, wrap(k - 1, K)) -= 1.0 / (2.0 * dx);
    }
    break;
  case OperatorKind::ForwardDiff:
    for (long k = 0; k < K; ++k) {
      m(k, wrap(k + 1, K)) += 1.0 / dx;
      m(k, k) -= 1.0 / dx;
    }
    break;
  case OperatorKind::ForwardAvg:
    for (long k = 0; k < K; ++k) {
      m(k, wrap(k + 1, K)) += 0.5;
      m(k, k) += 0.5;
    }
    break;
  case OperatorKind::Spectral: {
    const long J = grid.max_mode();
    for (long k = 0; k < K; ++k) {
      for (long l = 0; l < K; ++l) {
        cplx sum = 0.0;
        for (long j = -J; j <= J; ++j) {
          const double kappa = 2.0 * std::numbers::pi * static_cast<double>(j) / grid.period();
          const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * (k - l)) /
                               static_cast<double>(K);
          sum += cplx(0.0, kappa) * std::polar(1.0, angle);
        }
        m(k, l) = sum.real() / static_cast<double>(K);
      }
    }
    break;
  }
  }
  return m;
}

Eigen::MatrixXcd dft_matrix(const PeriodicGrid& grid) {
  const long K = grid.points();
  const long J = grid.max_mode();
  Eigen::MatrixXcd f(K, K);
  const double scale = 1.0 / std::sqrt(static_cast<double>(K));
  for (long j = -J; j <= J; ++j) {
    for (long k = 1; k <= K; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(wrap(j * k, K)) /
                           static_cast<double>(K);
      f(j + J, k - 1) = scale * std::polar(1.0, angle);
    }
  }
  return f;
}

Eigen::VectorXd to_vector(const GridFunction& u) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) v(static_cast<Eigen::Index>(i)) = u[i];
  return v;
}

GridFunction from_vector(const PeriodicGrid& grid, const Eigen::VectorXd& v) {
  GridFunction u(grid);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = v(static_cast<Eigen::Index>(i));
  return u;
}

GridFunction dense_linear_step(const SchemeInstance& scheme, const GridFunction& u) {
  if (!scheme.density().is_quadratic()) {
    throw std::invalid_argument("dense_linear_step: density must be quadratic");
  }
  const PeriodicGrid& grid = scheme.grid();
  const long K = grid.points();
  const Eigen::MatrixXd left = operator_matrix(scheme.left_operator(), grid) / scheme.dt();
  Eigen::MatrixXd right = Eigen::MatrixXd::Identity(K, K);
  if (scheme.kind() == SchemeKind::AverageDiff && !scheme.right_operator_is_identity()) {
    right = operator_matrix(OperatorKind::ForwardAvg, grid);
  }
  const double c2 = scheme.density().coefficient(2);
  const Eigen::MatrixXd lhs = left - c2 * right;
  const Eigen::VectorXd rhs = (left + c2 * right) * to_vector(u);
  return from_vector(grid, lhs.fullPivLu().solve(rhs));
}

} // namespace avgdiff::oracle
