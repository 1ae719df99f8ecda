#pragma once

#include "avgdiff/grid.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avgdiff {

/// Polynomial Hamiltonian density G(u) = sum_p c_p u^p.
///
/// The equation being integrated is u_tx = G'(u). At least one coefficient of
/// degree >= 1 must be nonzero; a constant density makes the right-hand side
/// vanish identically.
class HamiltonianDensity {
public:
  explicit HamiltonianDensity(std::vector<double> coefficients);

  /// G(u) = u^2 / 2, the linear Klein-Gordon equation u_tx = u.
  static HamiltonianDensity linear_klein_gordon();

  /// Parses "poly:c0,c1,...,cP". Throws std::invalid_argument on bad input.
  static HamiltonianDensity parse(std::string_view text);

  /// Inverse of parse, with round-trippable coefficient formatting.
  std::string to_string() const;

  std::span<const double> coefficients() const noexcept { return coeffs_; }

  /// Index of the highest nonzero coefficient.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Degree <= 2: the variational derivative is affine in u and every scheme
  /// reduces to one linear solve per Fourier mode.
  bool is_quadratic() const noexcept { return degree() <= 2; }

  /// Coefficient c_p, zero past the degree.
  double coefficient(int p) const noexcept;

  double operator()(double u) const noexcept;
  double derivative(double u) const noexcept;

  /// (G(a) - G(b)) / (a - b), evaluated as
  ///   sum_p c_p (a^{p-1} + a^{p-2} b + ... + b^{p-1})
  /// so there is no division and no cancellation. Equals G'(a) when a == b.
  double divided_difference(double a, double b) const noexcept;

private:
  std::vector<double> coeffs_;
};

struct DiscreteEnergy {
  double value = 0.0;
  long time_index = 0;
};

/// H_d(u) = sum_k G(u_k) dx.
DiscreteEnergy discrete_energy(const GridFunction& u, const HamiltonianDensity& density,
                               long time_index = 0);

/// Pointwise divided difference of G between two time levels. Satisfies the
/// discrete chain rule
///   H_d(u_next) - H_d(u_prev) = sum_k dvd_k (u_next_k - u_prev_k) dx
/// exactly in exact arithmetic.
GridFunction discrete_variational_derivative(const GridFunction& u_next,
                                             const GridFunction& u_prev,
                                             const HamiltonianDensity& density);

} // namespace avgdiff
