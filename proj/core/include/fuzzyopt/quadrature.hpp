#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace fuzzyopt {

enum class QuadratureRule { trapezoid, simpson };

std::string_view to_string(QuadratureRule rule) noexcept;
std::optional<QuadratureRule> parse_quadrature_rule(std::string_view name) noexcept;

/// Composite rule over equally spaced samples f(a), ..., f(b).
/// Trapezoid needs >= 2 samples; Simpson needs an odd count >= 3.
/// Throws DomainError otherwise.
double integrate_uniform(std::span<const double> samples, QuadratureRule rule,
                         double a = 0.0, double b = 1.0);

}  // namespace fuzzyopt
