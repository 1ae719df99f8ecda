// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here and not tuned.

#include "avgdiff/analysis.hpp"
#include "avgdiff/dense_oracle.hpp"
#include "avgdiff/operators.hpp"
#include "avgdiff/schemes.hpp"
#include "avgdiff/variational.hpp"
#include "support/random.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace avgdiff;

namespace {

constexpr SchemeKind kSchemes[] = {SchemeKind::CentralDiff, SchemeKind::Spectral,
                                   SchemeKind::AverageDiff};

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [violated: " << what << "]";
    }
  }
};

struct Experiment {
  std::map<SchemeKind, GridFunction> at_t1;
  std::map<SchemeKind, GridFunction> at_t50;
  GridFunction exact_t50{PeriodicGrid(129)};
};

// K = 129, dt = 0.01, M = 5000, step initial data, exact series truncated at N = 1e5.
const Experiment& step_experiment() {
  static const Experiment experiment = [] {
    Experiment e;
    const PeriodicGrid grid(129);
    const GridFunction u0 = step_initial(grid);
    for (SchemeKind kind : kSchemes) {
      const SchemeInstance s(kind, grid, HamiltonianDensity::linear_klein_gordon(), 0.01);
      const Trajectory traj = run(s, u0, 5000, std::vector<long>{100});
      for (const auto& [m, u] : traj.snapshots) {
        if (m == 100) e.at_t1.emplace(kind, u);
        if (m == 5000) e.at_t50.emplace(kind, u);
      }
    }
    e.exact_t50 = step_exact_solution(50.0, grid, 100000);
    return e;
  }();
  return experiment;
}

void error_reproduction(Verdict& v) {
  const Experiment& e = step_experiment();
  const std::map<SchemeKind, double> reported = {{SchemeKind::CentralDiff, 0.1940},
                                                 {SchemeKind::Spectral, 0.0611},
                                                 {SchemeKind::AverageDiff, 0.0575}};
  for (SchemeKind kind : kSchemes) {
    const double err = l2_error(e.at_t50.at(kind), e.exact_t50);
    v.detail << ' ' << to_string(kind) << '=' << err;
    v.require(std::abs(err - reported.at(kind)) <= 0.01,
              std::string(to_string(kind)) + " error within 0.01 of reported value");
  }
}

void scheme_ordering(Verdict& v) {
  const Experiment& e = step_experiment();
  const double cd = l2_error(e.at_t50.at(SchemeKind::CentralDiff), e.exact_t50);
  const double ps = l2_error(e.at_t50.at(SchemeKind::Spectral), e.exact_t50);
  const double ad = l2_error(e.at_t50.at(SchemeKind::AverageDiff), e.exact_t50);
  v.detail << " ad=" << ad << " ps=" << ps << " cd=" << cd;
  v.require(ad < ps && ps < cd, "error(AD) < error(PS) < error(CD)");
}

void phase_speed_table_check(Verdict& v) {
  const PeriodicGrid grid(65);
  const PhaseSpeedTable table = phase_speed_table(grid, 32);
  for (const PhaseSpeedRow& row : table) {
    const double expected = -1.0 / row.n;
    v.require(std::abs(row.c_ps - expected) <= std::numeric_limits<double>::epsilon() * std::abs(expected),
              "c_ps = -1/n at n=" + std::to_string(row.n));
    const double e_ad = std::abs(row.c_ad + 1.0 / row.n);
    const double e_cd = std::abs(row.c_cd + 1.0 / row.n);
    v.require(e_ad <= e_cd, "|c_ad + 1/n| <= |c_cd + 1/n| at n=" + std::to_string(row.n));
    if (row.n >= 2) v.require(e_ad < e_cd, "strict ordering at n=" + std::to_string(row.n));
  }
  const PhaseSpeedRow& last = table.back();
  v.detail << " c_cd(32)=" << last.c_cd << " c_ad(32)=" << last.c_ad << " 1/32=" << 1.0 / 32;
  v.require(std::abs(last.c_cd) > std::abs(last.c_ad), "|c_cd(32)| > |c_ad(32)|");
  v.require(std::abs(last.c_ad) > 1.0 / 32, "|c_ad(32)| > 1/32");
}

void energy_conservation(Verdict& v) {
  const PeriodicGrid grid(33);
  const HamiltonianDensity densities[] = {HamiltonianDensity::linear_klein_gordon(),
                                          HamiltonianDensity({0.0, 0.0, 0.5, 0.0, 0.25})};
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    GridFunction u0 = testing::zero_mean(testing::random_function(grid, rng));
    u0 *= 1.0 / std::max(1.0, u0.max_norm());
    for (const HamiltonianDensity& g : densities) {
      for (SchemeKind kind : kSchemes) {
        const SchemeInstance s(kind, grid, g, 0.01);
        const Trajectory traj = run(s, u0, 1000, 1000);
        const double h0 = traj.energies.front().value;
        for (const DiscreteEnergy& e : traj.energies) {
          worst = std::max(worst, std::abs(e.value - h0) / std::abs(h0));
        }
      }
    }
  }
  v.detail << " max_relative_drift=" << worst;
  v.require(worst <= 1e-9, "relative drift <= 1e-9");
}

void chain_rule(Verdict& v) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> degree(1, 6);
  const PeriodicGrid grid(33);
  const double dt = 0.01;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c(static_cast<std::size_t>(degree(rng) + 1));
    for (double& x : c) x = coeff(rng);
    c.back() += c.back() >= 0 ? 0.1 : -0.1;
    const HamiltonianDensity g(c);
    const GridFunction a = testing::random_function(grid, rng);
    const GridFunction b = testing::random_function(grid, rng);
    const double lhs = (discrete_energy(a, g).value - discrete_energy(b, g).value) / dt;
    const GridFunction dvd = discrete_variational_derivative(a, b, g);
    double rhs = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      rhs += dvd[i] * (a[i] - b[i]) / dt * grid.spacing();
      scale += (std::abs(g(a[i])) + std::abs(g(b[i]))) / dt * grid.spacing();
    }
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  v.detail << " worst_relative=" << worst;
  v.require(worst <= 1e-12, "chain rule to 1e-12 relative");
}

void skew_symmetry_and_sbp(Verdict& v) {
  std::mt19937_64 rng(99);
  double worst_skew = 0.0, worst_sbp = 0.0, worst_identity = 0.0;
  for (int K : {5, 9, 65}) {
    const PeriodicGrid grid(K);
    for (int trial = 0; trial < 100; ++trial) {
      const GridFunction u = testing::random_function(grid, rng);
      const GridFunction w = testing::random_function(grid, rng);
      for (OperatorKind op : {OperatorKind::CentralDiff, OperatorKind::Spectral}) {
        const GridFunction du = apply(op, u);
        const GridFunction dw = apply(op, w);
        double sum = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
          sum += u[i] * dw[i] + du[i] * w[i];
          scale += std::abs(u[i] * dw[i]) + std::abs(du[i] * w[i]);
        }
        worst_skew = std::max(worst_skew, std::abs(sum) / scale);
      }
      const GridFunction d = forward_diff(u);
      const GridFunction m = forward_average(u);
      double sum = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        sum += d[i] * m[i];
        scale += std::abs(d[i] * m[i]);
      }
      worst_sbp = std::max(worst_sbp, std::abs(sum) / scale);

      // Four-term identity on neighbouring entries of the two vectors.
      for (long k = 1; k <= K; ++k) {
        const double a = u(k), ap = u(k + 1), b = w(k), bp = w(k + 1);
        const double lhs = (ap * bp + a * b) / 2;
        const double rhs = ((ap + a) / 2) * ((bp + b) / 2) + (ap - a) * (bp - b) / 4;
        worst_identity = std::max(worst_identity,
                                  std::abs(lhs - rhs) / (std::abs(ap * bp) + std::abs(a * b)));
      }
    }
  }
  v.detail << " skew=" << worst_skew << " sbp=" << worst_sbp << " identity=" << worst_identity;
  v.require(worst_skew <= 1e-12, "skew-symmetry to 1e-12 relative");
  v.require(worst_sbp <= 1e-12, "summation by parts to 1e-12 relative");
  v.require(worst_identity <= 1e-12, "product identity to 1e-12 relative");
}

void brute_force_oracle(Verdict& v) {
  std::mt19937_64 rng(7);
  double worst_op = 0.0, worst_step = 0.0;
  for (int K : {5, 9, 17}) {
    const PeriodicGrid grid(K);
    for (OperatorKind op : {OperatorKind::CentralDiff, OperatorKind::ForwardDiff,
                            OperatorKind::ForwardAvg, OperatorKind::Spectral}) {
      const Eigen::MatrixXd m = oracle::operator_matrix(op, grid);
      for (int trial = 0; trial < 20; ++trial) {
        const GridFunction u = testing::random_function(grid, rng);
        worst_op = std::max(worst_op, (m * oracle::to_vector(u) - oracle::to_vector(apply(op, u)))
                                          .lpNorm<Eigen::Infinity>());
      }
    }
    for (SchemeKind kind : kSchemes) {
      const SchemeInstance s(kind, grid, HamiltonianDensity::linear_klein_gordon(), 0.01);
      for (int trial = 0; trial < 20; ++trial) {
        const GridFunction u = testing::zero_mean(testing::random_function(grid, rng));
        worst_step = std::max(worst_step, (step(s, u) - oracle::dense_linear_step(s, u)).max_norm());
      }
    }
  }
  v.detail << " operators=" << worst_op << " step=" << worst_step;
  v.require(worst_op <= 1e-10, "operators match circulant matrices to 1e-10");
  v.require(worst_step <= 1e-10, "per-mode step matches dense solve to 1e-10");
}

void oscillation(Verdict& v) {
  const Experiment& e = step_experiment();
  const double cd1 = total_variation(e.at_t1.at(SchemeKind::CentralDiff));
  const double ad1 = total_variation(e.at_t1.at(SchemeKind::AverageDiff));
  const double ps50 = total_variation(e.at_t50.at(SchemeKind::Spectral));
  const double ad50 = total_variation(e.at_t50.at(SchemeKind::AverageDiff));
  v.detail << " TV(t=1): cd=" << cd1 << " ad=" << ad1 << "; TV(t=50): ps=" << ps50
           << " ad=" << ad50;
  v.require(cd1 > ad1, "TV(CD) > TV(AD) at t=1");
  v.require(ps50 > ad50, "TV(PS) > TV(AD) at t=50");
}

void unimodularity(Verdict& v) {
  const PeriodicGrid grid(65);
  double worst = 0.0;
  for (double dt : {1e-2, 1e-1}) {
    for (SchemeKind kind : kSchemes) {
      const SchemeInstance s(kind, grid, HamiltonianDensity::linear_klein_gordon(), dt);
      for (int j = -grid.max_mode(); j <= grid.max_mode(); ++j) {
        if (j != 0) worst = std::max(worst, std::abs(std::abs(amplification_factor(s, j)) - 1.0));
      }
    }
  }
  v.detail << " max||g|-1|=" << worst;
  v.require(worst <= 1e-12, "|g| = 1 to 1e-12");
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria = {
      {"error_reproduction", error_reproduction},
      {"scheme_ordering", scheme_ordering},
      {"phase_speed_table", phase_speed_table_check},
      {"energy_conservation", energy_conservation},
      {"discrete_chain_rule", chain_rule},
      {"skew_symmetry_and_summation_by_parts", skew_symmetry_and_sbp},
      {"brute_force_oracle", brute_force_oracle},
      {"oscillation", oscillation},
      {"unimodularity", unimodularity},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    v.detail.precision(6);
    try {
      check(v);
    } catch (const std::exception& e) {
      v.passed = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s %s:%s\n", v.passed ? "PASS" : "FAIL", name, v.detail.str().c_str());
    failures += v.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
