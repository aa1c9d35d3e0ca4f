#include "fuzzyopt/level_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fuzzyopt/errors.hpp"

namespace fuzzyopt {

namespace {

void require_in_domain(const FuzzyFunction& f, double x) {
  if (!std::isfinite(x) || !f.domain.contains(x)) {
    std::ostringstream os;
    os << "x = " << x << " is outside the domain [" << f.domain.lo << ", " << f.domain.hi << "]";
    throw DomainError(os.str());
  }
}

// Integral over alpha of (m(x, alpha).lo + m(x, alpha).hi).
double integrate_level_sum(const LevelMap& m, double x, const ScalarizationConfig& cfg) {
  std::vector<double> sums(cfg.alpha_points);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const double alpha = grid_alpha(i, sums.size());
    const LevelPair p = m(x, alpha);
    const double s = p.lo + p.hi;
    if (!std::isfinite(s)) {
      std::ostringstream os;
      os << "non-finite level value at x = " << x << ", alpha = " << alpha;
      throw NumericError(os.str());
    }
    sums[i] = s;
  }
  return integrate_uniform(sums, cfg.quadrature);
}

double fd_step(double x, const ScalarizationConfig& cfg) {
  return cfg.fd_step * std::max(1.0, std::abs(x));
}

struct Stencil {
  double d1 = 0.0;
  double d2 = 0.0;
  bool one_sided = false;
};

// Finite differences on the scalarized function. f0 = F(x) is passed in so
// callers that already have it don't pay for it twice.
Stencil finite_differences(const FuzzyFunction& f, double x, double f0,
                           const ScalarizationConfig& cfg) {
  const double h = fd_step(x, cfg);
  const Domain& dom = f.domain;
  if (dom.contains(x - h) && dom.contains(x + h)) {
    // Use the steps actually realised in floating point, not h itself.
    const double xp = x + h;
    const double xm = x - h;
    const double hp = xp - x;
    const double hm = x - xm;
    const double fp = scalarize(f, xp, cfg);
    const double fm = scalarize(f, xm, cfg);
    const double sp = (fp - f0) / hp;
    const double sm = (f0 - fm) / hm;
    return {(hm * sp + hp * sm) / (hp + hm), 2.0 * (sp - sm) / (hp + hm), false};
  }
  if (dom.contains(x + 2.0 * h)) {
    const double f1 = scalarize(f, x + h, cfg);
    const double f2 = scalarize(f, x + 2.0 * h, cfg);
    return {(f1 - f0) / h, (f0 - 2.0 * f1 + f2) / (h * h), true};
  }
  if (dom.contains(x - 2.0 * h)) {
    const double f1 = scalarize(f, x - h, cfg);
    const double f2 = scalarize(f, x - 2.0 * h, cfg);
    return {(f0 - f1) / h, (f0 - 2.0 * f1 + f2) / (h * h), true};
  }
  std::ostringstream os;
  os << "domain around x = " << x << " is narrower than the finite-difference stencil";
  throw DomainError(os.str());
}

}  // namespace

FuzzyFunction crisp_lift(std::function<double(double)> g, std::function<double(double)> g1,
                         std::function<double(double)> g2, Domain domain) {
  FuzzyFunction f;
  f.levels = [g](double x, double) {
    const double v = g(x);
    return LevelPair{v, v};
  };
  if (g1 && g2) {
    f.first_derivative = [g1](double x, double) {
      const double v = g1(x);
      return LevelPair{v, v};
    };
    f.second_derivative = [g2](double x, double) {
      const double v = g2(x);
      return LevelPair{v, v};
    };
  }
  f.domain = domain;
  return f;
}

FuzzyFunction negate(FuzzyFunction f) {
  auto flip = [](LevelMap m) -> LevelMap {
    if (!m) return {};
    return [m = std::move(m)](double x, double alpha) {
      const LevelPair p = m(x, alpha);
      return LevelPair{-p.hi, -p.lo};
    };
  };
  f.levels = flip(std::move(f.levels));
  f.first_derivative = flip(std::move(f.first_derivative));
  f.second_derivative = flip(std::move(f.second_derivative));
  return f;
}

FuzzyFunction linear_combination(double a, const FuzzyFunction& f, double b,
                                 const FuzzyFunction& g) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw DomainError("linear_combination requires nonnegative weights");
  }
  auto mix = [a, b](const LevelMap& mf, const LevelMap& mg) -> LevelMap {
    if (!mf || !mg) return {};
    return [a, b, mf, mg](double x, double alpha) {
      const LevelPair p = mf(x, alpha);
      const LevelPair q = mg(x, alpha);
      return LevelPair{a * p.lo + b * q.lo, a * p.hi + b * q.hi};
    };
  };
  FuzzyFunction out;
  out.levels = mix(f.levels, g.levels);
  out.first_derivative = mix(f.first_derivative, g.first_derivative);
  out.second_derivative = mix(f.second_derivative, g.second_derivative);
  out.domain = {std::max(f.domain.lo, g.domain.lo), std::min(f.domain.hi, g.domain.hi)};
  return out;
}

void ScalarizationConfig::validate() const {
  if (alpha_points < 2) throw DomainError("alpha_points must be at least 2");
  if (quadrature == QuadratureRule::simpson && (alpha_points < 3 || alpha_points % 2 == 0)) {
    throw DomainError("Simpson quadrature needs an odd alpha_points >= 3");
  }
  if (!(fd_step > 0.0) || !std::isfinite(fd_step)) {
    throw DomainError("fd_step must be a positive finite number");
  }
}

FuzzyNumber eval_fuzzy(const FuzzyFunction& f, double x, std::size_t grid_size) {
  require_in_domain(f, x);
  if (grid_size < 2) throw DomainError("alpha grid needs at least two points");
  std::vector<Interval> levels(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const LevelPair p = f.levels(x, grid_alpha(i, grid_size));
    levels[i] = {p.lo, p.hi};
  }
  if (auto v = find_level_violation(levels)) {
    std::ostringstream os;
    os << "malformed fuzzy-valued function at x = " << x << ": " << v->describe();
    throw MalformedFunctionError(os.str(), x, v->alpha);
  }
  return FuzzyNumber::from_levels(std::move(levels));
}

double scalarize(const FuzzyFunction& f, double x, const ScalarizationConfig& cfg) {
  require_in_domain(f, x);
  return integrate_level_sum(f.levels, x, cfg);
}

DerivativeEstimate scalarize_derivative(const FuzzyFunction& f, double x, int order,
                                        const ScalarizationConfig& cfg) {
  if (order != 1 && order != 2) throw DomainError("derivative order must be 1 or 2");
  require_in_domain(f, x);
  if (f.has_analytic_derivatives()) {
    const LevelMap& m = order == 1 ? f.first_derivative : f.second_derivative;
    return {integrate_level_sum(m, x, cfg), true, false};
  }
  const Stencil s = finite_differences(f, x, scalarize(f, x, cfg), cfg);
  return {order == 1 ? s.d1 : s.d2, false, s.one_sided};
}

double scalarize_d1(const FuzzyFunction& f, double x, const ScalarizationConfig& cfg) {
  return scalarize_derivative(f, x, 1, cfg).value;
}

double scalarize_d2(const FuzzyFunction& f, double x, const ScalarizationConfig& cfg) {
  return scalarize_derivative(f, x, 2, cfg).value;
}

ScalarizedPoint scalarize_with_derivatives(const FuzzyFunction& f, double x,
                                           const ScalarizationConfig& cfg) {
  ScalarizedPoint p;
  p.value = scalarize(f, x, cfg);
  if (f.has_analytic_derivatives()) {
    p.d1 = integrate_level_sum(f.first_derivative, x, cfg);
    p.d2 = integrate_level_sum(f.second_derivative, x, cfg);
    p.analytic = true;
    return p;
  }
  const Stencil s = finite_differences(f, x, p.value, cfg);
  p.d1 = s.d1;
  p.d2 = s.d2;
  p.one_sided = s.one_sided;
  return p;
}

ComparabilityVerdict comparability_check(const FuzzyFunction& f, double x0, Direction d,
                                         double delta, std::size_t samples,
                                         std::size_t grid_size) {
  if (!(delta > 0.0)) throw DomainError("comparability_check needs delta > 0");
  const FuzzyNumber base = eval_fuzzy(f, x0, grid_size);
  const double dir = static_cast<double>(static_cast<int>(d));
  ComparabilityVerdict verdict;
  for (std::size_t j = 1; j <= samples; ++j) {
    const double lambda = delta * static_cast<double>(j) / static_cast<double>(samples + 1);
    const double x = x0 + lambda * dir;
    if (!f.domain.contains(x)) continue;
    ++verdict.samples_checked;
    if (!comparable(eval_fuzzy(f, x, grid_size), base)) {
      verdict.comparable = false;
      verdict.witness_lambda = lambda;
      return verdict;
    }
  }
  return verdict;
}

NonDominanceVerdict non_dominance_check(const FuzzyFunction& f, double xstar, double eps,
                                        std::size_t samples, std::size_t grid_size) {
  if (!(eps > 0.0)) throw DomainError("non_dominance_check needs eps > 0");
  const FuzzyNumber centre = eval_fuzzy(f, xstar, grid_size);
  const std::size_t per_side = (samples + 1) / 2;
  NonDominanceVerdict verdict;
  std::size_t visited = 0;
  for (std::size_t j = 1; j <= per_side && visited < samples; ++j) {
    const double offset = eps * static_cast<double>(j) / static_cast<double>(per_side);
    for (const double x1 : {xstar - offset, xstar + offset}) {
      if (visited == samples) break;
      ++visited;
      if (!f.domain.contains(x1)) continue;
      ++verdict.samples_checked;
      if (lt(eval_fuzzy(f, x1, grid_size), centre)) {
        verdict.dominated = true;
        verdict.dominator = x1;
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace fuzzyopt
