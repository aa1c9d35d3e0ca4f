#include "fuzzyopt/quadrature.hpp"

#include "fuzzyopt/errors.hpp"

namespace fuzzyopt {

std::string_view to_string(QuadratureRule rule) noexcept {
  return rule == QuadratureRule::trapezoid ? "trapezoid" : "simpson";
}

std::optional<QuadratureRule> parse_quadrature_rule(std::string_view name) noexcept {
  if (name == "trapezoid") return QuadratureRule::trapezoid;
  if (name == "simpson") return QuadratureRule::simpson;
  return std::nullopt;
}

double integrate_uniform(std::span<const double> samples, QuadratureRule rule, double a,
                         double b) {
  const std::size_t n = samples.size();
  if (n < 2) throw DomainError("quadrature needs at least two samples");
  const double h = (b - a) / static_cast<double>(n - 1);

  if (rule == QuadratureRule::trapezoid) {
    double inner = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) inner += samples[i];
    return h * (0.5 * (samples.front() + samples.back()) + inner);
  }

  if (n < 3 || n % 2 == 0) {
    throw DomainError("Simpson's rule needs an odd number (>= 3) of samples");
  }
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) (i % 2 == 1 ? odd : even) += samples[i];
  return h / 3.0 * (samples.front() + samples.back() + 4.0 * odd + 2.0 * even);
}

}  // namespace fuzzyopt
