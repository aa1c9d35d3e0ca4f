#include "fuzzyopt/newton.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>

#include "fuzzyopt/errors.hpp"

namespace fuzzyopt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Number of trailing (e_k, e_{k+1}) pairs entering the order fit.
constexpr std::size_t kTailPairs = 3;

bool all_finite(const ScalarizedPoint& p) {
  return std::isfinite(p.value) && std::isfinite(p.d1) && std::isfinite(p.d2);
}

StationarityKind classify(double d2F, double floor) {
  if (!std::isfinite(d2F)) return StationarityKind::inconclusive;
  if (d2F > floor) return StationarityKind::local_min;
  if (d2F < -floor) return StationarityKind::local_max;
  return StationarityKind::inconclusive;
}

void finish(SolveResult& r, const FuzzyFunction& f, const NewtonConfig& cfg) {
  try {
    const ScalarizedPoint p = scalarize_with_derivatives(f, r.xstar, cfg.scal);
    r.F = p.value;
    r.dF = p.d1;
    r.d2F = p.d2;
  } catch (const Error&) {
    r.F = r.dF = r.d2F = kNaN;
  }
  r.stationarity_kind = classify(r.d2F, cfg.d2_floor);
}

}  // namespace

std::string_view to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::second_derivative_near_zero: return "second-derivative-near-zero";
    case SolveStatus::max_iter_exceeded: return "max-iter-exceeded";
    case SolveStatus::non_finite: return "non-finite";
  }
  return "unknown";
}

std::string_view to_string(StationarityKind s) noexcept {
  switch (s) {
    case StationarityKind::local_min: return "local-min";
    case StationarityKind::local_max: return "local-max";
    case StationarityKind::inconclusive: return "inconclusive";
  }
  return "unknown";
}

void NewtonConfig::validate() const {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (max_iter < 1) throw DomainError("max_iter must be at least 1");
  if (!(d2_floor > 0.0)) throw DomainError("d2_floor must be positive");
  if (!std::isfinite(x0)) throw DomainError("x0 must be finite");
  scal.validate();
}

SolveResult solve(const FuzzyFunction& f, const NewtonConfig& cfg) {
  cfg.validate();
  if (!f.domain.contains(cfg.x0)) {
    std::ostringstream os;
    os << "initial point x0 = " << cfg.x0 << " is outside the domain";
    throw DomainError(os.str());
  }

  SolveResult result;
  double x = cfg.x0;
  result.status = SolveStatus::max_iter_exceeded;

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    ScalarizedPoint p;
    try {
      p = scalarize_with_derivatives(f, x, cfg.scal);
    } catch (const NumericError&) {
      result.status = SolveStatus::non_finite;
      break;
    } catch (const DomainError&) {
      // An iterate left the domain (or the FD stencil no longer fits).
      result.status = SolveStatus::non_finite;
      break;
    }
    if (!all_finite(p)) {
      result.status = SolveStatus::non_finite;
      break;
    }

    IterationRecord rec{k, x, kNaN, p.value, p.d1, p.d2, kNaN,
                        eval_fuzzy(f, x, cfg.scal.alpha_points)};
    if (std::abs(p.d2) < cfg.d2_floor) {
      result.trace.push_back(std::move(rec));
      result.status = SolveStatus::second_derivative_near_zero;
      break;
    }

    const double step = -p.d1 / p.d2;
    rec.step = step;
    rec.x_next = x + step;
    result.trace.push_back(std::move(rec));
    if (!std::isfinite(x + step)) {
      result.status = SolveStatus::non_finite;
      break;
    }
    x += step;
    if (std::abs(step) < cfg.eps) {
      result.status = SolveStatus::converged;
      break;
    }
  }

  result.xstar = x;
  finish(result, f, cfg);
  return result;
}

ConvergenceOrder estimate_convergence_order(std::span<const double> iterates, double xstar) {
  const double floor = 64.0 * DBL_EPSILON * std::max(1.0, std::abs(xstar));
  std::vector<double> log_e;
  std::vector<double> log_next;
  for (std::size_t i = 0; i + 1 < iterates.size(); ++i) {
    const double e = std::abs(iterates[i] - xstar);
    const double e_next = std::abs(iterates[i + 1] - xstar);
    if (!(e > floor) || !(e_next > floor) || !std::isfinite(e) || !std::isfinite(e_next)) {
      continue;
    }
    log_e.push_back(std::log(e));
    log_next.push_back(std::log(e_next));
  }
  if (log_e.size() < kTailPairs) {
    std::ostringstream os;
    os << "convergence order needs at least " << kTailPairs + 1
       << " iterates with nonzero error, found " << log_e.size() << " usable pairs";
    throw InsufficientDataError(os.str());
  }

  const std::size_t first = log_e.size() - kTailPairs;
  const auto n = static_cast<double>(kTailPairs);
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = first; i < log_e.size(); ++i) {
    sx += log_e[i];
    sy += log_next[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = first; i < log_e.size(); ++i) {
    sxx += (log_e[i] - mx) * (log_e[i] - mx);
    sxy += (log_e[i] - mx) * (log_next[i] - my);
  }
  if (!(sxx > 0.0)) throw InsufficientDataError("iterate errors are not distinct");
  const double slope = sxy / sxx;
  return {slope, std::exp(my - slope * mx), kTailPairs};
}

ConvergenceOrder estimate_convergence_order(std::span<const IterationRecord> trace,
                                            double xstar) {
  std::vector<double> iterates;
  iterates.reserve(trace.size() + 1);
  for (const auto& r : trace) iterates.push_back(r.x_k);
  if (!trace.empty() && std::isfinite(trace.back().x_next)) {
    iterates.push_back(trace.back().x_next);
  }
  return estimate_convergence_order(std::span<const double>(iterates), xstar);
}

VerificationReport verify_point(const FuzzyFunction& f, double xstar, const NewtonConfig& cfg,
                                const VerifyOptions& opts) {
  VerificationReport rep;
  rep.xstar = xstar;
  const ScalarizedPoint p = scalarize_with_derivatives(f, xstar, cfg.scal);
  rep.abs_dF = std::abs(p.d1);
  rep.d2F = p.d2;
  rep.stationarity_tol = 10.0 * cfg.eps * std::max(1.0, std::abs(p.d2));
  rep.stationary = rep.abs_dF < rep.stationarity_tol;

  const std::size_t m = cfg.scal.alpha_points;
  const double h = cfg.scal.fd_step * std::max(1.0, std::abs(xstar));
  double xa = xstar - h;
  double xb = xstar + h;
  if (!f.domain.contains(xa)) xa = xstar;
  if (!f.domain.contains(xb)) xb = xstar;
  if (xb > xa) {
    for (std::size_t i = 0; i < m; ++i) {
      const double alpha = grid_alpha(i, m);
      const LevelPair a = f.levels(xa, alpha);
      const LevelPair b = f.levels(xb, alpha);
      rep.max_level_slope_lo = std::max(rep.max_level_slope_lo, std::abs(b.lo - a.lo) / (xb - xa));
      rep.max_level_slope_hi = std::max(rep.max_level_slope_hi, std::abs(b.hi - a.hi) / (xb - xa));
    }
  }

  rep.non_dominance = non_dominance_check(f, xstar, opts.nbhd, opts.samples, m);
  rep.comparable_forward =
      comparability_check(f, xstar, Direction::forward, opts.delta, opts.samples, m);
  rep.comparable_backward =
      comparability_check(f, xstar, Direction::backward, opts.delta, opts.samples, m);
  return rep;
}

VerificationReport verify_solution(const FuzzyFunction& f, const SolveResult& result,
                                   const NewtonConfig& cfg, const VerifyOptions& opts) {
  return verify_point(f, result.xstar, cfg, opts);
}

}  // namespace fuzzyopt
