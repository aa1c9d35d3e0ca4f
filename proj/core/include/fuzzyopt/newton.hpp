#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzyopt/fuzzy_number.hpp"
#include "fuzzyopt/level_calculus.hpp"

namespace fuzzyopt {

struct NewtonConfig {
  double x0 = 0.0;
  /// Stop when |x_{k+1} - x_k| < eps.
  double eps = 1e-5;
  std::size_t max_iter = 100;
  /// |F''| below this is treated as zero and ends the run.
  double d2_floor = 1e-12;
  ScalarizationConfig scal;

  void validate() const;
};

/// One Newton step taken from x_k. `step` and `x_next` are NaN on the
/// record that ended a run because F'' fell under the floor.
struct IterationRecord {
  std::size_t k = 0;
  double x_k = 0.0;
  double x_next = 0.0;
  double F = 0.0;
  double dF = 0.0;
  double d2F = 0.0;
  double step = 0.0;
  FuzzyNumber fuzzy_value = FuzzyNumber::crisp(0.0, 2);
};

enum class SolveStatus { converged, second_derivative_near_zero, max_iter_exceeded, non_finite };
enum class StationarityKind { local_min, local_max, inconclusive };

std::string_view to_string(SolveStatus s) noexcept;
std::string_view to_string(StationarityKind s) noexcept;

struct SolveResult {
  SolveStatus status = SolveStatus::max_iter_exceeded;
  double xstar = 0.0;  ///< last iterate
  std::vector<IterationRecord> trace;
  StationarityKind stationarity_kind = StationarityKind::inconclusive;
  /// F, F', F'' at xstar (NaN when not computable).
  double F = 0.0;
  double dF = 0.0;
  double d2F = 0.0;

  bool converged() const noexcept { return status == SolveStatus::converged; }
};

/// Scalarized Newton iteration x_{k+1} = x_k - F'(x_k)/F''(x_k) with no
/// damping or line search. Failure modes come back as statuses; only an x0
/// outside the domain (DomainError) or an invalid config throws.
SolveResult solve(const FuzzyFunction& f, const NewtonConfig& cfg);

struct ConvergenceOrder {
  double order = 0.0;
  /// C in e_{k+1} ~ C * e_k^order.
  double constant = 0.0;
  std::size_t pairs_used = 0;
};

/// Least-squares slope of log e_{k+1} against log e_k, e_k = |x_k - xstar|,
/// over the iterates of the trace (including the final x_next). Errors at or
/// below the roundoff floor 64 * DBL_EPSILON * max(1, |xstar|) are dropped.
/// Throws InsufficientDataError if fewer than 3 consecutive pairs (4 iterates)
/// remain.
ConvergenceOrder estimate_convergence_order(std::span<const IterationRecord> trace,
                                            double xstar);
/// Same, on a bare iterate sequence.
ConvergenceOrder estimate_convergence_order(std::span<const double> iterates, double xstar);

struct VerifyOptions {
  double nbhd = 1e-2;
  std::size_t samples = 20;
  /// Half-width of the comparability probe on each side of xstar.
  double delta = 1e-2;
};

struct VerificationReport {
  double xstar = 0.0;
  double abs_dF = 0.0;
  double d2F = 0.0;
  /// 10 * eps * max(1, |F''(xstar)|)
  double stationarity_tol = 0.0;
  bool stationary = false;
  /// max over the alpha grid of |d/dx f_lo| and |d/dx f_hi| at xstar
  /// (central differences on each level function).
  double max_level_slope_lo = 0.0;
  double max_level_slope_hi = 0.0;
  NonDominanceVerdict non_dominance;
  ComparabilityVerdict comparable_forward;
  ComparabilityVerdict comparable_backward;

  bool passed() const noexcept { return stationary && !non_dominance.dominated; }
};

/// Post-hoc audit of a candidate point.
VerificationReport verify_point(const FuzzyFunction& f, double xstar, const NewtonConfig& cfg,
                                const VerifyOptions& opts = {});

/// verify_point at result.xstar.
VerificationReport verify_solution(const FuzzyFunction& f, const SolveResult& result,
                                   const NewtonConfig& cfg, const VerifyOptions& opts = {});

}  // namespace fuzzyopt
