#include "avgdiff/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace avgdiff {
namespace {

// FFTW planning is not thread safe, execution with the new-array interface is.
// Plans are created once per size and kept for the lifetime of the process.
class PlanCache {
public:
  struct Plans {
    fftw_plan forward;
    fftw_plan backward;
  };

  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  Plans get(int n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<complex> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    auto* in = reinterpret_cast<fftw_complex*>(a.data());
    auto* out = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    Plans p{fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, flags),
            fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, flags)};
    if (p.forward == nullptr || p.backward == nullptr) {
      throw std::runtime_error("FFTW failed to create a plan of size " + std::to_string(n));
    }
    plans_.emplace(n, p);
    return p;
  }

  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.backward);
    }
  }

private:
  PlanCache() = default;

  std::mutex mutex_;
  std::map<int, Plans> plans_;
};

void execute(fftw_plan plan, std::vector<complex>& in, std::vector<complex>& out) {
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

// exp(i * angle of mode j); converts between the k = 1..K sum of the
// transform and FFTW's k = 0..K-1 sum.
complex mode_shift(const PeriodicGrid& grid, int j) {
  return std::polar(1.0, grid.mode_angle(j));
}

} // namespace

SpectralVector::SpectralVector(const PeriodicGrid& grid)
    : grid_(grid), coeffs_(static_cast<std::size_t>(grid.points())) {}

std::size_t SpectralVector::slot(int mode) const {
  const int J = grid_.max_mode();
  if (mode < -J || mode > J) {
    throw std::out_of_range("SpectralVector: mode " + std::to_string(mode) +
                            " outside [-" + std::to_string(J) + ", " + std::to_string(J) + "]");
  }
  return static_cast<std::size_t>(mode + J);
}

double SpectralVector::squared_norm() const noexcept {
  double s = 0.0;
  for (const complex& c : coeffs_) s += std::norm(c);
  return s;
}

SpectralVector dft(const GridFunction& u) {
  const PeriodicGrid& grid = u.grid();
  const int K = grid.points();
  const int J = grid.max_mode();
  std::vector<complex> in(u.values().begin(), u.values().end());
  std::vector<complex> out(in.size());
  execute(PlanCache::instance().get(K).forward, in, out);

  const double scale = 1.0 / std::sqrt(static_cast<double>(K));
  SpectralVector s(grid);
  for (int j = -J; j <= J; ++j) {
    const auto m = static_cast<std::size_t>(j >= 0 ? j : j + K);
    s[j] = scale * std::conj(mode_shift(grid, j)) * out[m];
  }
  return s;
}

std::vector<complex> idft_complex(const SpectralVector& s) {
  const PeriodicGrid& grid = s.grid();
  const int K = grid.points();
  const int J = grid.max_mode();
  std::vector<complex> in(static_cast<std::size_t>(K));
  for (int j = -J; j <= J; ++j) {
    const auto m = static_cast<std::size_t>(j >= 0 ? j : j + K);
    in[m] = mode_shift(grid, j) * s[j];
  }
  std::vector<complex> out(in.size());
  execute(PlanCache::instance().get(K).backward, in, out);
  const double scale = 1.0 / std::sqrt(static_cast<double>(K));
  for (complex& v : out) v *= scale;
  return out;
}

GridFunction idft(const SpectralVector& s) {
  const std::vector<complex> values = idft_complex(s);
  GridFunction u(s.grid());
  for (std::size_t i = 0; i < values.size(); ++i) u[i] = values[i].real();
  return u;
}

} // namespace avgdiff
