#include "avgdiff/variational.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace avgdiff {

HamiltonianDensity::HamiltonianDensity(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("HamiltonianDensity: non-finite coefficient");
  }
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.size() < 2) {
    throw std::invalid_argument(
        "HamiltonianDensity: need a nonzero coefficient of degree >= 1");
  }
}

HamiltonianDensity HamiltonianDensity::linear_klein_gordon() {
  return HamiltonianDensity({0.0, 0.0, 0.5});
}

HamiltonianDensity HamiltonianDensity::parse(std::string_view text) {
  constexpr std::string_view prefix = "poly:";
  if (!text.starts_with(prefix)) {
    throw std::invalid_argument("density must look like poly:c0,c1,...; got '" +
                                std::string(text) + "'");
  }
  text.remove_prefix(prefix.size());
  std::vector<double> coeffs;
  while (true) {
    const auto comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw std::invalid_argument("density: cannot parse coefficient '" + std::string(field) + "'");
    }
    coeffs.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return HamiltonianDensity(std::move(coeffs));
}

std::string HamiltonianDensity::to_string() const {
  std::string out = "poly:";
  char buf[32];
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    if (p > 0) out += ',';
    std::snprintf(buf, sizeof buf, "%.17g", coeffs_[p]);
    out += buf;
  }
  return out;
}

double HamiltonianDensity::coefficient(int p) const noexcept {
  if (p < 0 || p >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(p)];
}

double HamiltonianDensity::operator()(double u) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double HamiltonianDensity::derivative(double u) const noexcept {
  double acc = 0.0;
  for (std::size_t p = coeffs_.size() - 1; p >= 1; --p) {
    acc = acc * u + static_cast<double>(p) * coeffs_[p];
  }
  return acc;
}

double HamiltonianDensity::divided_difference(double a, double b) const noexcept {
  // h_m = sum_{i=0}^{m} a^{m-i} b^i obeys h_m = a h_{m-1} + b^m.
  double h = 1.0;
  double b_pow = 1.0;
  double acc = coeffs_[1];
  for (std::size_t p = 2; p < coeffs_.size(); ++p) {
    b_pow *= b;
    h = a * h + b_pow;
    acc += coeffs_[p] * h;
  }
  return acc;
}

DiscreteEnergy discrete_energy(const GridFunction& u, const HamiltonianDensity& density,
                               long time_index) {
  double sum = 0.0;
  for (double v : u.values()) sum += density(v);
  return {sum * u.grid().spacing(), time_index};
}

GridFunction discrete_variational_derivative(const GridFunction& u_next,
                                             const GridFunction& u_prev,
                                             const HamiltonianDensity& density) {
  require_same_grid(u_next, u_prev);
  GridFunction out(u_next.grid());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = density.divided_difference(u_next[i], u_prev[i]);
  }
  return out;
}

} // namespace avgdiff
