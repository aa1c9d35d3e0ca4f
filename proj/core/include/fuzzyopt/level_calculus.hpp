#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>

#include "fuzzyopt/fuzzy_number.hpp"
#include "fuzzyopt/quadrature.hpp"

namespace fuzzyopt {

/// Values (or x-derivatives) of the lower and upper alpha-level functions at
/// one (x, alpha). Unlike Interval, derivative pairs carry no ordering.
struct LevelPair {
  double lo = 0.0;
  double hi = 0.0;
};

/// (x, alpha) -> LevelPair. Must be pure; it may be called concurrently.
using LevelMap = std::function<LevelPair(double x, double alpha)>;

/// Closed real interval of admissible x (unbounded by default).
struct Domain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// A fuzzy-valued function of one real variable, given through its
/// alpha-level functions. The derivative maps are optional; when both are
/// set, scalarized derivatives are integrated from them instead of being
/// estimated by finite differences.
struct FuzzyFunction {
  LevelMap levels;
  LevelMap first_derivative;
  LevelMap second_derivative;
  Domain domain;

  bool has_analytic_derivatives() const noexcept {
    return static_cast<bool>(first_derivative) && static_cast<bool>(second_derivative);
  }
};

/// Real function g lifted to a fuzzy-valued one with degenerate levels
/// lo = hi = g. Derivatives are attached when both g1 and g2 are given.
FuzzyFunction crisp_lift(std::function<double(double)> g,
                         std::function<double(double)> g1 = {},
                         std::function<double(double)> g2 = {}, Domain domain = {});

/// Pointwise fuzzy negation (-1) * f: levels become [-hi, -lo].
FuzzyFunction negate(FuzzyFunction f);

/// a*f + b*g level-wise with nonnegative a and b; the domain is the
/// intersection. Throws DomainError for negative weights.
FuzzyFunction linear_combination(double a, const FuzzyFunction& f, double b,
                                 const FuzzyFunction& g);

struct ScalarizationConfig {
  std::size_t alpha_points = kDefaultGridSize;
  QuadratureRule quadrature = QuadratureRule::simpson;
  /// Relative finite-difference step; h = fd_step * max(1, |x|).
  double fd_step = 1e-5;

  /// Throws DomainError on an invalid combination (e.g. Simpson on an even grid).
  void validate() const;
};

/// f(x) sampled on the uniform alpha grid of the given size.
/// Throws DomainError if x is outside the domain and MalformedFunctionError
/// if the sampled levels cross or are not nested.
FuzzyNumber eval_fuzzy(const FuzzyFunction& f, double x, std::size_t grid_size = kDefaultGridSize);

/// F(x) = integral over alpha in [0,1] of (f_lo + f_hi). Throws NumericError
/// if a level value is not finite.
double scalarize(const FuzzyFunction& f, double x, const ScalarizationConfig& cfg = {});

struct DerivativeEstimate {
  double value = 0.0;
  bool analytic = false;
  /// A one-sided (first-order) stencil was used because x sits at the edge
  /// of the domain.
  bool one_sided = false;
};

/// Scalarized derivative of order 1 or 2.
DerivativeEstimate scalarize_derivative(const FuzzyFunction& f, double x, int order,
                                        const ScalarizationConfig& cfg = {});

double scalarize_d1(const FuzzyFunction& f, double x, const ScalarizationConfig& cfg = {});
double scalarize_d2(const FuzzyFunction& f, double x, const ScalarizationConfig& cfg = {});

/// F, F' and F'' at one point, sharing evaluations where possible.
struct ScalarizedPoint {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  bool analytic = false;
  bool one_sided = false;
};

ScalarizedPoint scalarize_with_derivatives(const FuzzyFunction& f, double x,
                                           const ScalarizationConfig& cfg = {});

enum class Direction : int { backward = -1, forward = 1 };

struct ComparabilityVerdict {
  bool comparable = true;
  std::optional<double> witness_lambda;  ///< first lambda that failed
  std::size_t samples_checked = 0;
};

/// Checks that f(x0 + lambda*d) and f(x0) are comparable for `samples`
/// equally spaced lambda in the open interval (0, delta). Points leaving the
/// domain are skipped.
ComparabilityVerdict comparability_check(const FuzzyFunction& f, double x0, Direction d,
                                         double delta, std::size_t samples,
                                         std::size_t grid_size = kDefaultGridSize);

struct NonDominanceVerdict {
  bool dominated = false;
  std::optional<double> dominator;  ///< x1 with f(x1) < f(xstar)
  std::size_t samples_checked = 0;
};

/// Looks for x1 in [xstar - eps, xstar + eps] with f(x1) strictly below
/// f(xstar) in the fuzzy-max order. Samples are equally spaced on both
/// sides of xstar, nearest first. This is a finite-sample audit, not a proof.
NonDominanceVerdict non_dominance_check(const FuzzyFunction& f, double xstar, double eps,
                                        std::size_t samples,
                                        std::size_t grid_size = kDefaultGridSize);

}  // namespace fuzzyopt
