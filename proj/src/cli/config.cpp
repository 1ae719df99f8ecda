#include "avgdiff/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace avgdiff::cli {
namespace {

std::string format(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

} // namespace

std::string describe(const RunConfig& c) {
  std::ostringstream os;
  os << "scheme=" << c.scheme << " K=" << c.K << " dt=" << format(c.dt)
     << " t_end=" << format(c.t_end) << " density=" << c.density << " init=" << c.init
     << " snapshot_times=";
  for (std::size_t i = 0; i < c.snapshot_times.size(); ++i) {
    if (i > 0) os << ',';
    os << format(c.snapshot_times[i]);
  }
  os << " exact_truncation=" << c.exact_truncation << " mean_mode_policy=" << c.mean_mode_policy
     << " fp_tol=" << format(c.fp_tol) << " fp_max_iter=" << c.fp_max_iter << " seed=" << c.seed;
  return os.str();
}

InitSpec parse_init(const std::string& text) {
  if (text == "step") return {InitKind::Step, 0, {}};
  if (text.starts_with("sine:")) {
    const std::string digits = text.substr(5);
    int n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() || n < 1) {
      throw ConfigError("init: expected sine:<positive integer>, got '" + text + "'");
    }
    return {InitKind::Sine, n, {}};
  }
  if (text.starts_with("file:") && text.size() > 5) return {InitKind::File, 0, text.substr(5)};
  throw ConfigError("init: expected step, sine:<n> or file:<path>, got '" + text + "'");
}

MeanModePolicy parse_mean_mode_policy(const std::string& text) {
  if (text == "project-zero") return MeanModePolicy::ProjectZero;
  if (text == "reject") return MeanModePolicy::Reject;
  throw ConfigError("mean-mode-policy: expected project-zero or reject, got '" + text + "'");
}

std::string to_string(MeanModePolicy policy) {
  return policy == MeanModePolicy::Reject ? "reject" : "project-zero";
}

long step_count(double t, double dt, const char* what) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ConfigError(std::string(what) + " must be a non-negative finite time");
  }
  const double ratio = t / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) > 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, nearest)) {
    throw ConfigError(std::string(what) + "=" + format(t) + " is not an integer multiple of dt=" +
                      format(dt));
  }
  return static_cast<long>(nearest);
}

GridFunction read_initial_file(const std::string& path, const PeriodicGrid& grid) {
  std::ifstream in(path);
  if (!in) throw ConfigError("init: cannot open '" + path + "'");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string field;
    while (fields >> field) {
      double v = 0.0;
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || end != field.data() + field.size()) {
        throw ConfigError("init: bad number '" + field + "' in '" + path + "'");
      }
      values.push_back(v);
    }
  }
  if (values.size() != static_cast<std::size_t>(grid.points())) {
    throw ConfigError("init: '" + path + "' holds " + std::to_string(values.size()) +
                      " values, expected K=" + std::to_string(grid.points()));
  }
  return GridFunction(grid, std::move(values));
}

RunPlan plan_run(const RunConfig& c) {
  try {
    const PeriodicGrid grid(c.K);
    const SchemeKind kind = parse_scheme_kind(c.scheme);
    HamiltonianDensity density = HamiltonianDensity::parse(c.density);
    const SolverConfig solver{c.fp_tol, c.fp_max_iter, parse_mean_mode_policy(c.mean_mode_policy)};
    SchemeInstance scheme(kind, grid, density, c.dt, solver);
    const long steps = step_count(c.t_end, c.dt, "t-end");

    std::vector<long> indices{0, steps};
    for (double t : c.snapshot_times) {
      const long m = step_count(t, c.dt, "snapshot time");
      if (m > steps) throw ConfigError("snapshot time " + format(t) + " is past t-end");
      indices.push_back(m);
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

    if (c.exact_truncation < 1) throw ConfigError("exact-truncation must be >= 1");

    const InitSpec init = parse_init(c.init);
    GridFunction u0(grid);
    switch (init.kind) {
    case InitKind::Step: u0 = step_initial(grid); break;
    case InitKind::Sine:
      if (init.mode > grid.max_mode()) {
        throw ConfigError("init: sine mode must be <= (K-1)/2 = " + std::to_string(grid.max_mode()));
      }
      u0 = GridFunction::sample(grid, [n = init.mode](double x) { return std::sin(n * x); });
      break;
    case InitKind::File: u0 = read_initial_file(init.path, grid); break;
    }
    if (solver.mean_mode_policy == MeanModePolicy::Reject && std::abs(u0.mean()) > solver.fp_tol) {
      throw ConfigError("initial data has mean " + format(u0.mean()) +
                        " but mean-mode-policy is reject");
    }

    std::optional<InitSpec> reference;
    if (density.is_quadratic() && init.kind != InitKind::File) reference = init;
    return RunPlan{grid, std::move(scheme), std::move(u0), steps, std::move(indices), reference};
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

} // namespace avgdiff::cli
