#include "fuzzyopt/defuzzify.hpp"

#include <vector>

#include "fuzzyopt/quadrature.hpp"

namespace fuzzyopt {

double centroid(const FuzzyNumber& a) {
  const std::size_t m = a.grid_size();
  std::vector<double> moment(m);
  std::vector<double> width(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Interval& l = a.levels()[i];
    // (U^2 - L^2) / 2 factored to avoid cancellation for narrow levels.
    moment[i] = 0.5 * (l.hi - l.lo) * (l.hi + l.lo);
    width[i] = l.hi - l.lo;
  }
  const QuadratureRule rule = m >= 3 && m % 2 == 1 ? QuadratureRule::simpson
                                                   : QuadratureRule::trapezoid;
  const double den = integrate_uniform(width, rule);
  if (den < 1e-14) return a.core().midpoint();
  return integrate_uniform(moment, rule) / den;
}

}  // namespace fuzzyopt
