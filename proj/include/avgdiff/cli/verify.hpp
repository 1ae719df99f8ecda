#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace avgdiff::cli {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Randomized invariant checks: operator skew-symmetry, the summation-by-parts
/// pair, the four-term product identity, the discrete chain rule, circulant and
/// dense-solve oracles, energy conservation and unimodularity.
///
/// `corrupt_average_diff` swaps the average-difference scheme for its variant
/// with an identity right operator; conservation must then fail.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, bool corrupt_average_diff = false);

} // namespace avgdiff::cli
