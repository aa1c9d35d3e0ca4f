#pragma once

#include "fuzzyopt/fuzzy_number.hpp"

namespace fuzzyopt {

/// Membership-weighted centroid written through alpha-levels:
///
///   c = [ int_0^1 (U_a^2 - L_a^2) / 2 da ] / [ int_0^1 (U_a - L_a) da ]
///
/// Integrated on the number's own grid (Simpson when the grid size is odd,
/// trapezoid otherwise). Crisp numbers (denominator < 1e-14) return the
/// midpoint of the 1-level.
double centroid(const FuzzyNumber& a);

}  // namespace fuzzyopt
