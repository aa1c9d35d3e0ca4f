#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fuzzyopt/fuzzy_number.hpp"

namespace fuzzyopt::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'f022'2026ULL;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return uniform(0.0, 1.0) < 0.5; }

  TriangularFuzzy triangular(double center_range = 5.0, double max_spread = 3.0) {
    const double p = uniform(-center_range, center_range);
    return {p - uniform(0.0, max_spread), p, p + uniform(0.0, max_spread)};
  }

  // Nonlinear shapes: core interval plus random nonnegative increments
  // walked down from alpha = 1 to alpha = 0. Sometimes crisp.
  FuzzyNumber fuzzy(std::size_t grid = 11, double center_range = 5.0, double max_spread = 3.0) {
    if (uniform(0.0, 1.0) < 0.05) return FuzzyNumber::crisp(uniform(-center_range, center_range), grid);
    const double c = uniform(-center_range, center_range);
    const double half_core = coin() ? 0.0 : uniform(0.0, 0.3 * max_spread);
    std::vector<Interval> levels(grid);
    const double step = max_spread / static_cast<double>(grid - 1);
    double lo = c - half_core;
    double hi = c + half_core;
    for (std::size_t i = grid; i-- > 0;) {
      levels[i] = {lo, hi};
      lo -= uniform(0.0, 2.0 * step);
      hi += uniform(0.0, 2.0 * step);
    }
    return FuzzyNumber::from_levels(std::move(levels));
  }

  // Strictly positive or strictly negative support, for division.
  FuzzyNumber nonzero_fuzzy(std::size_t grid = 11) {
    FuzzyNumber a = fuzzy(grid, 2.0, 1.0);
    const double shift = coin() ? 4.0 - a.support().lo : -4.0 - a.support().hi;
    return add(a, FuzzyNumber::crisp(shift, grid));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fuzzyopt::testing
