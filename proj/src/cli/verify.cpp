#include "avgdiff/cli/verify.hpp"

#include "avgdiff/analysis.hpp"
#include "avgdiff/dense_oracle.hpp"
#include "avgdiff/operators.hpp"
#include "avgdiff/schemes.hpp"
#include "avgdiff/variational.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace avgdiff::cli {
namespace {

using Rng = std::mt19937_64;

GridFunction random_function(const PeriodicGrid& grid, Rng& rng, double amplitude = 1.0) {
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  GridFunction u(grid);
  for (double& v : u.values()) v = dist(rng);
  return u;
}

GridFunction zero_mean(GridFunction u) {
  const double m = u.mean();
  for (double& v : u.values()) v -= m;
  return u;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

PropertyResult verdict(std::string name, double worst, double tol) {
  return {std::move(name), worst <= tol, "worst=" + sci(worst) + " tol=" + sci(tol)};
}

constexpr int kGridSizes[] = {5, 9, 65};

PropertyResult skew_symmetry(OperatorKind op, const char* name, Rng& rng) {
  double worst = 0.0;
  for (int K : kGridSizes) {
    const PeriodicGrid grid(K);
    for (int trial = 0; trial < 100; ++trial) {
      const GridFunction u = random_function(grid, rng);
      const GridFunction v = random_function(grid, rng);
      const GridFunction du = apply(op, u);
      const GridFunction dv = apply(op, v);
      double lhs = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        lhs += u[i] * dv[i] + du[i] * v[i];
        scale += std::abs(u[i] * dv[i]) + std::abs(du[i] * v[i]);
      }
      worst = std::max(worst, std::abs(lhs) / scale);
    }
  }
  return verdict(name, worst, 1e-12);
}

PropertyResult summation_by_parts(Rng& rng) {
  double worst = 0.0;
  for (int K : kGridSizes) {
    const PeriodicGrid grid(K);
    for (int trial = 0; trial < 100; ++trial) {
      const GridFunction u = random_function(grid, rng);
      const GridFunction d = forward_diff(u);
      const GridFunction a = forward_average(u);
      double sum = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        sum += d[i] * a[i];
        scale += std::abs(d[i] * a[i]);
      }
      worst = std::max(worst, std::abs(sum) / scale);
    }
  }
  return verdict("summation_by_parts_pair", worst, 1e-12);
}

PropertyResult product_identity(Rng& rng) {
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = dist(rng), ap = dist(rng), b = dist(rng), bp = dist(rng);
    const double lhs = 0.5 * (ap * bp + a * b);
    const double rhs = 0.5 * (ap + a) * 0.5 * (bp + b) + 0.25 * (ap - a) * (bp - b);
    const double scale = std::abs(ap * bp) + std::abs(a * b);
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return verdict("product_identity", worst, 1e-12);
}

HamiltonianDensity random_density(Rng& rng, int degree) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(degree + 1));
  for (double& v : c) v = dist(rng);
  c.back() = c.back() >= 0 ? c.back() + 0.1 : c.back() - 0.1;
  return HamiltonianDensity(std::move(c));
}

PropertyResult chain_rule(Rng& rng) {
  const PeriodicGrid grid(33);
  std::uniform_int_distribution<int> degree(1, 6);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const HamiltonianDensity g = random_density(rng, degree(rng));
    const GridFunction a = random_function(grid, rng);
    const GridFunction b = random_function(grid, rng);
    const GridFunction dvd = discrete_variational_derivative(a, b, g);
    const double lhs = discrete_energy(a, g).value - discrete_energy(b, g).value;
    double rhs = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      rhs += dvd[i] * (a[i] - b[i]);
      scale += std::abs(g(a[i])) + std::abs(g(b[i]));
    }
    rhs *= grid.spacing();
    scale *= grid.spacing();
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return verdict("discrete_chain_rule", worst, 1e-12);
}

PropertyResult circulant_oracle(Rng& rng) {
  double worst = 0.0;
  for (int K : {5, 9, 17}) {
    const PeriodicGrid grid(K);
    for (OperatorKind op : {OperatorKind::CentralDiff, OperatorKind::ForwardDiff,
                            OperatorKind::ForwardAvg, OperatorKind::Spectral}) {
      const Eigen::MatrixXd m = oracle::operator_matrix(op, grid);
      for (int trial = 0; trial < 10; ++trial) {
        const GridFunction u = random_function(grid, rng);
        const Eigen::VectorXd expected = m * oracle::to_vector(u);
        const Eigen::VectorXd got = oracle::to_vector(apply(op, u));
        worst = std::max(worst, (expected - got).lpNorm<Eigen::Infinity>());
      }
    }
  }
  return verdict("circulant_oracle", worst, 1e-10);
}

SchemeInstance make_scheme(SchemeKind kind, const PeriodicGrid& grid, HamiltonianDensity g,
                           double dt, bool corrupt) {
  SchemeInstance s(kind, grid, std::move(g), dt);
  return (corrupt && kind == SchemeKind::AverageDiff) ? s.with_identity_right_operator() : s;
}

constexpr SchemeKind kSchemes[] = {SchemeKind::CentralDiff, SchemeKind::Spectral,
                                   SchemeKind::AverageDiff};

PropertyResult dense_step_oracle(Rng& rng, bool corrupt) {
  double worst = 0.0;
  for (int K : {5, 9, 17}) {
    const PeriodicGrid grid(K);
    for (SchemeKind kind : kSchemes) {
      const SchemeInstance s =
          make_scheme(kind, grid, HamiltonianDensity::linear_klein_gordon(), 0.01, corrupt);
      const GridFunction u = zero_mean(random_function(grid, rng));
      worst = std::max(worst, (step(s, u) - oracle::dense_linear_step(s, u)).max_norm());
    }
  }
  return verdict("dense_step_oracle", worst, 1e-10);
}

PropertyResult energy_conservation(Rng& rng, bool corrupt) {
  const PeriodicGrid grid(33);
  const HamiltonianDensity densities[] = {HamiltonianDensity::linear_klein_gordon(),
                                          HamiltonianDensity({0.0, 0.0, 0.5, 0.0, 0.25})};
  double worst = 0.0;
  for (const HamiltonianDensity& g : densities) {
    for (SchemeKind kind : kSchemes) {
      const SchemeInstance s = make_scheme(kind, grid, g, 0.01, corrupt);
      const GridFunction u0 = zero_mean(random_function(grid, rng, 0.5));
      const Trajectory traj = run(s, u0, 1000, 1000);
      const double h0 = traj.energies.front().value;
      for (const DiscreteEnergy& e : traj.energies) {
        worst = std::max(worst, std::abs(e.value - h0) / std::abs(h0));
      }
    }
  }
  return verdict("energy_conservation", worst, 1e-9);
}

PropertyResult unimodularity(bool corrupt) {
  const PeriodicGrid grid(65);
  double worst = 0.0;
  for (double dt : {1e-2, 1e-1}) {
    for (SchemeKind kind : kSchemes) {
      const SchemeInstance s =
          make_scheme(kind, grid, HamiltonianDensity::linear_klein_gordon(), dt, corrupt);
      for (int j = -grid.max_mode(); j <= grid.max_mode(); ++j) {
        if (j == 0) continue;
        worst = std::max(worst, std::abs(std::abs(amplification_factor(s, j)) - 1.0));
      }
    }
  }
  return verdict("unimodularity", worst, 1e-12);
}

} // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, bool corrupt_average_diff) {
  Rng rng(seed);
  std::vector<PropertyResult> results;
  results.push_back(skew_symmetry(OperatorKind::CentralDiff, "skew_symmetry_central", rng));
  results.push_back(skew_symmetry(OperatorKind::Spectral, "skew_symmetry_spectral", rng));
  results.push_back(summation_by_parts(rng));
  results.push_back(product_identity(rng));
  results.push_back(chain_rule(rng));
  results.push_back(circulant_oracle(rng));
  results.push_back(dense_step_oracle(rng, corrupt_average_diff));
  results.push_back(energy_conservation(rng, corrupt_average_diff));
  results.push_back(unimodularity(corrupt_average_diff));
  return results;
}

} // namespace avgdiff::cli
