#include "avgdiff/dense_oracle.hpp"
#include "avgdiff/operators.hpp"
#include "support/random.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace avgdiff;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("PeriodicGrid validates its size", "[grid]") {
  CHECK_THROWS_AS(PeriodicGrid(4), std::invalid_argument);
  CHECK_THROWS_AS(PeriodicGrid(1), std::invalid_argument);
  CHECK_THROWS_AS(PeriodicGrid(5, -1.0), std::invalid_argument);
  CHECK_NOTHROW(PeriodicGrid(3));

  for (int K : {3, 5, 65, 129, 1001}) {
    const PeriodicGrid g(K);
    CHECK(std::abs(g.spacing() * K - g.period()) <= std::nextafter(g.period(), 10.0) - g.period());
    CHECK(g.max_mode() == (K - 1) / 2);
  }
}

TEST_CASE("GridFunction indexing wraps periodically", "[grid]") {
  const PeriodicGrid g(5);
  const GridFunction u(g, {1, 2, 3, 4, 5});
  CHECK(u(1) == 1);
  CHECK(u(5) == 5);
  CHECK(u(6) == u(1));
  CHECK(u(0) == u(5));
  CHECK(u(-4) == u(1));
  CHECK(u(1 + 3 * 5) == u(1));
  CHECK_THROWS_AS(GridFunction(g, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction(g) + GridFunction(PeriodicGrid(7)), std::invalid_argument);
}

TEST_CASE("constant vectors", "[operators]") {
  const PeriodicGrid g(9);
  const GridFunction c(g, std::vector<double>(9, 2.5));
  CHECK(central_diff(c).max_norm() == 0.0);
  CHECK(forward_diff(c).max_norm() == 0.0);
  CHECK(forward_average(c) == c);
  CHECK(spectral_diff(c).max_norm() < 1e-14);
}

TEST_CASE("central_diff on a unit vector, K = 5", "[operators]") {
  const PeriodicGrid g(5);
  const double h = 1.0 / (2.0 * g.spacing());
  // u_1 = 1: result_2 = (u_3 - u_1)/(2dx), result_5 = (u_6 - u_4)/(2dx) = u_1/(2dx).
  const GridFunction d = central_diff(GridFunction(g, {1, 0, 0, 0, 0}));
  CHECK(d[0] == 0.0);
  CHECK_THAT(d[1], WithinRel(-h, 1e-15));
  CHECK(d[2] == 0.0);
  CHECK(d[3] == 0.0);
  CHECK_THAT(d[4], WithinRel(h, 1e-15));
}

TEST_CASE("central_diff on a sampled sine", "[operators]") {
  const PeriodicGrid g(65);
  const GridFunction u = GridFunction::sample(g, [](double x) { return std::sin(x); });
  const GridFunction d = central_diff(u);
  const double factor = std::sin(g.spacing()) / g.spacing();
  for (int k = 1; k <= 65; ++k) {
    CHECK_THAT(d(k), WithinAbs(std::cos(2 * pi * k / 65) * factor, 1e-13));
  }
}

TEST_CASE("forward_diff of a sawtooth", "[operators]") {
  const PeriodicGrid g(9);
  const GridFunction u = GridFunction::sample(g, [](double x) { return x; });
  const GridFunction d = forward_diff(u);
  for (int k = 1; k < 9; ++k) CHECK_THAT(d(k), WithinAbs(1.0, 1e-13));
  CHECK_THAT(d(9), WithinAbs(1.0 - 9.0, 1e-13));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const GridFunction r = forward_diff(testing::random_function(g, rng));
    double s = 0.0;
    for (double v : r.values()) s += v;
    CHECK(std::abs(s) < 1e-12);
  }
}

TEST_CASE("forward_average", "[operators]") {
  const PeriodicGrid g(65);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const GridFunction u = testing::random_function(g, rng);
    CHECK_THAT(forward_average(u).mean(), WithinAbs(u.mean(), 1e-15));
  }
  // cos sampled at the midpoints x_k + dx/2, scaled by cos(dx/2).
  const GridFunction u = GridFunction::sample(g, [](double x) { return std::cos(x); });
  const GridFunction a = forward_average(u);
  const double dx = g.spacing();
  for (int k = 1; k <= 65; ++k) {
    CHECK_THAT(a(k), WithinAbs(std::cos(k * dx + dx / 2) * std::cos(dx / 2), 1e-14));
  }
}

TEST_CASE("spectral_diff is exact on resolved modes", "[operators]") {
  const PeriodicGrid g(17);
  for (int n = 1; n <= g.max_mode(); ++n) {
    const GridFunction u = GridFunction::sample(g, [n](double x) { return std::sin(n * x); });
    const GridFunction d = spectral_diff(u);
    for (int k = 1; k <= 17; ++k) {
      CHECK_THAT(d(k), WithinAbs(n * std::cos(n * g.x(k)), 1e-12));
    }
  }
  // Period other than 2 pi: d/dx sin(2 pi x / L) = (2 pi / L) cos(2 pi x / L).
  const PeriodicGrid h(21, 3.0);
  const double kappa = 2 * pi / 3.0;
  const GridFunction d =
      spectral_diff(GridFunction::sample(h, [kappa](double x) { return std::sin(kappa * x); }));
  for (int k = 1; k <= 21; ++k) CHECK_THAT(d(k), WithinAbs(kappa * std::cos(kappa * h.x(k)), 1e-12));
}

TEST_CASE("spectral_diff output of a real vector is real", "[operators]") {
  const PeriodicGrid g(65);
  std::mt19937_64 rng(3);
  SpectralVector s = dft(testing::random_function(g, rng));
  for (int j = -g.max_mode(); j <= g.max_mode(); ++j) s[j] *= complex(0.0, j);
  double residue = 0.0;
  for (const complex& v : idft_complex(s)) residue = std::max(residue, std::abs(v.imag()));
  CHECK(residue < 1e-12);
}

TEST_CASE("operator symbols", "[operators]") {
  const PeriodicGrid g65(65);
  CHECK(operator_symbol(OperatorKind::CentralDiff, 0, g65) == complex(0.0));
  CHECK(operator_symbol(OperatorKind::ForwardDiff, 0, g65) == complex(0.0));
  CHECK(operator_symbol(OperatorKind::Spectral, 0, g65) == complex(0.0));
  CHECK(operator_symbol(OperatorKind::ForwardAvg, 0, g65) == complex(1.0));
  CHECK_THROWS_AS(operator_symbol(OperatorKind::CentralDiff, 33, g65), std::out_of_range);
  CHECK_THROWS_AS(operator_symbol(OperatorKind::Spectral, -33, g65), std::out_of_range);

  for (int j = 1; j <= 32; ++j) {
    const complex s = operator_symbol(OperatorKind::CentralDiff, j, g65);
    CHECK(s.real() == 0.0);
    CHECK_THAT(s.imag(), WithinRel(std::sin(2 * pi * j / 65) / (2 * pi / 65), 1e-14));
  }

  // Applying the operator to exp(2 pi i j k / K) multiplies it by the symbol;
  // checked with the brute-force matrices on real and imaginary parts.
  const PeriodicGrid g(9);
  for (OperatorKind op : {OperatorKind::CentralDiff, OperatorKind::ForwardDiff,
                          OperatorKind::ForwardAvg, OperatorKind::Spectral}) {
    const Eigen::MatrixXd m = oracle::operator_matrix(op, g);
    for (int j = -4; j <= 4; ++j) {
      Eigen::VectorXcd e(9);
      for (int k = 1; k <= 9; ++k) e(k - 1) = std::polar(1.0, 2 * pi * j * k / 9);
      const Eigen::VectorXcd lhs = m.cast<complex>() * e;
      const Eigen::VectorXcd rhs = operator_symbol(op, j, g) * e;
      CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() < 1e-12);
    }
  }
}

TEST_CASE("operators match explicit circulant matrices", "[operators][oracle]") {
  std::mt19937_64 rng(4);
  for (int K : {5, 9, 17}) {
    const PeriodicGrid g(K);
    for (OperatorKind op : {OperatorKind::CentralDiff, OperatorKind::ForwardDiff,
                            OperatorKind::ForwardAvg, OperatorKind::Spectral}) {
      const Eigen::MatrixXd m = oracle::operator_matrix(op, g);
      for (int trial = 0; trial < 10; ++trial) {
        const GridFunction u = testing::random_function(g, rng);
        const Eigen::VectorXd diff = m * oracle::to_vector(u) - oracle::to_vector(apply(op, u));
        CHECK(diff.lpNorm<Eigen::Infinity>() < 1e-10);
      }
    }
  }
}

TEST_CASE("skew-symmetry and summation by parts", "[operators][property]") {
  std::mt19937_64 rng(5);
  for (int K : {5, 9, 65}) {
    const PeriodicGrid g(K);
    for (int trial = 0; trial < 100; ++trial) {
      const GridFunction u = testing::random_function(g, rng);
      const GridFunction v = testing::random_function(g, rng);
      for (OperatorKind op : {OperatorKind::CentralDiff, OperatorKind::Spectral}) {
        const double a = inner_product(u, apply(op, v));
        const double b = inner_product(apply(op, u), v);
        CHECK(std::abs(a + b) <= 1e-12 * (std::abs(a) + std::abs(b) + 1e-300));
      }
      const double sbp = inner_product(forward_diff(u), forward_average(u));
      double telescoped = 0.0;
      for (int k = 1; k <= K; ++k) telescoped += u(k + 1) * u(k + 1) - u(k) * u(k);
      CHECK(std::abs(sbp) < 1e-12 * K);
      CHECK(std::abs(telescoped) < 1e-12 * K);
    }
  }
}

TEST_CASE("four-term product identity", "[property]") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = dist(rng), ap = dist(rng), b = dist(rng), bp = dist(rng);
    const double lhs = (ap * bp + a * b) / 2;
    const double rhs = ((ap + a) / 2) * ((bp + b) / 2) + (ap - a) * (bp - b) / 4;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(ap * bp) + std::abs(a * b)));
  }
}
