#include "fuzzyopt/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyopt/errors.hpp"

namespace fuzzyopt {

namespace {

// a exceeds b by more than the relative level tolerance.
bool exceeds(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return a - b > kLevelTolerance * scale;
}

void require_same_grid(const FuzzyNumber& a, const FuzzyNumber& b, const char* op) {
  if (a.grid_size() != b.grid_size()) {
    std::ostringstream os;
    os << op << ": alpha grids differ (" << a.grid_size() << " vs " << b.grid_size()
       << " levels)";
    throw ShapeError(os.str());
  }
}

template <typename Op>
FuzzyNumber levelwise(const FuzzyNumber& a, const FuzzyNumber& b, const char* name, Op op) {
  require_same_grid(a, b, name);
  std::vector<Interval> out(a.grid_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.levels()[i], b.levels()[i]);
  return FuzzyNumber::from_levels(std::move(out));
}

template <typename Op>
FuzzyNumber levelwise(const FuzzyNumber& a, Op op) {
  std::vector<Interval> out(a.grid_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.levels()[i]);
  return FuzzyNumber::from_levels(std::move(out));
}

}  // namespace

Interval make_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("interval endpoints must be finite");
  }
  if (lo > hi) {
    std::ostringstream os;
    os << "interval lower endpoint " << lo << " exceeds upper endpoint " << hi;
    throw DomainError(os.str());
  }
  return {lo, hi};
}

Interval operator+(const Interval& a, const Interval& b) noexcept {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval scale(double lambda, const Interval& a) noexcept {
  if (lambda >= 0.0) return {lambda * a.lo, lambda * a.hi};
  return {lambda * a.hi, lambda * a.lo};
}

Interval multiply(const Interval& a, const Interval& b) noexcept {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval divide(const Interval& a, const Interval& b) noexcept {
  const double q1 = a.lo / b.lo;
  const double q2 = a.lo / b.hi;
  const double q3 = a.hi / b.lo;
  const double q4 = a.hi / b.hi;
  return {std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4})};
}

Interval square(const Interval& a) noexcept {
  if (a.lo >= 0.0) return {a.lo * a.lo, a.hi * a.hi};
  if (a.hi <= 0.0) return {a.hi * a.hi, a.lo * a.lo};
  return {0.0, std::max(a.lo * a.lo, a.hi * a.hi)};
}

Interval reciprocal(const Interval& a) noexcept { return {1.0 / a.hi, 1.0 / a.lo}; }

TriangularFuzzy::TriangularFuzzy(double left, double peak, double right)
    : left_(left), peak_(peak), right_(right) {
  if (!std::isfinite(left) || !std::isfinite(peak) || !std::isfinite(right)) {
    throw DomainError("triangular fuzzy number must have finite parameters");
  }
  if (!(left <= peak && peak <= right)) {
    std::ostringstream os;
    os << "triangular fuzzy number requires left <= peak <= right, got (" << left << ", "
       << peak << ", " << right << ")";
    throw DomainError(os.str());
  }
}

Interval alpha_cut(const TriangularFuzzy& t, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "alpha " << alpha << " outside [0, 1]";
    throw DomainError(os.str());
  }
  return {(1.0 - alpha) * t.left() + alpha * t.peak(),
          (1.0 - alpha) * t.right() + alpha * t.peak()};
}

double grid_alpha(std::size_t index, std::size_t grid_size) noexcept {
  if (index + 1 >= grid_size) return 1.0;
  return static_cast<double>(index) / static_cast<double>(grid_size - 1);
}

std::string LevelViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::non_finite: os << "non-finite endpoint"; break;
    case Kind::crossed: os << "lower endpoint exceeds upper endpoint"; break;
    case Kind::not_nested: os << "level not nested inside the previous one"; break;
  }
  os << " at alpha = " << alpha << " (level " << index << ")";
  return os.str();
}

std::optional<LevelViolation> find_level_violation(std::span<const Interval> levels) {
  const std::size_t m = levels.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Interval& l = levels[i];
    const double alpha = grid_alpha(i, m);
    if (!std::isfinite(l.lo) || !std::isfinite(l.hi)) {
      return LevelViolation{LevelViolation::Kind::non_finite, i, alpha};
    }
    if (exceeds(l.lo, l.hi)) return LevelViolation{LevelViolation::Kind::crossed, i, alpha};
    if (i > 0) {
      const Interval& prev = levels[i - 1];
      if (exceeds(prev.lo, l.lo) || exceeds(l.hi, prev.hi)) {
        return LevelViolation{LevelViolation::Kind::not_nested, i, alpha};
      }
    }
  }
  return std::nullopt;
}

FuzzyNumber FuzzyNumber::from_levels(std::vector<Interval> levels) {
  if (levels.size() < 2) throw DomainError("a fuzzy number needs at least two alpha levels");
  if (auto v = find_level_violation(levels)) {
    throw DomainError("invalid fuzzy number: " + v->describe());
  }
  return FuzzyNumber(std::move(levels));
}

FuzzyNumber FuzzyNumber::crisp(double value, std::size_t grid_size) {
  return from_levels(std::vector<Interval>(grid_size, Interval{value, value}));
}

std::vector<double> FuzzyNumber::alphas() const {
  std::vector<double> out(levels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha(i);
  return out;
}

FuzzyNumber discretize(const TriangularFuzzy& t, std::size_t grid_size) {
  if (grid_size < 2) throw DomainError("alpha grid needs at least two points");
  std::vector<Interval> levels(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) levels[i] = alpha_cut(t, grid_alpha(i, grid_size));
  return FuzzyNumber::from_levels(std::move(levels));
}

FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b) {
  return levelwise(a, b, "add", [](const Interval& x, const Interval& y) { return x + y; });
}

FuzzyNumber scalar_mul(double lambda, const FuzzyNumber& a) {
  return levelwise(a, [lambda](const Interval& x) { return scale(lambda, x); });
}

FuzzyNumber mul(const FuzzyNumber& a, const FuzzyNumber& b) {
  return levelwise(a, b, "mul", [](const Interval& x, const Interval& y) { return multiply(x, y); });
}

FuzzyNumber div(const FuzzyNumber& a, const FuzzyNumber& b) {
  require_same_grid(a, b, "div");
  for (std::size_t i = 0; i < b.grid_size(); ++i) {
    if (b.levels()[i].contains_zero()) {
      std::ostringstream os;
      os << "division by a level containing zero at alpha = " << b.alpha(i);
      throw SingularError(os.str(), b.alpha(i));
    }
  }
  return levelwise(a, b, "div", [](const Interval& x, const Interval& y) { return divide(x, y); });
}

FuzzyNumber square(const FuzzyNumber& a) {
  return levelwise(a, [](const Interval& x) { return square(x); });
}

FuzzyNumber reciprocal(const FuzzyNumber& a) {
  for (std::size_t i = 0; i < a.grid_size(); ++i) {
    if (a.levels()[i].contains_zero()) {
      std::ostringstream os;
      os << "reciprocal of a level containing zero at alpha = " << a.alpha(i);
      throw SingularError(os.str(), a.alpha(i));
    }
  }
  return levelwise(a, [](const Interval& x) { return reciprocal(x); });
}

bool leq(const FuzzyNumber& a, const FuzzyNumber& b) {
  require_same_grid(a, b, "leq");
  for (std::size_t i = 0; i < a.grid_size(); ++i) {
    const Interval& x = a.levels()[i];
    const Interval& y = b.levels()[i];
    if (x.lo > y.lo || x.hi > y.hi) return false;
  }
  return true;
}

bool lt(const FuzzyNumber& a, const FuzzyNumber& b) {
  if (!leq(a, b)) return false;
  for (std::size_t i = 0; i < a.grid_size(); ++i) {
    const Interval& x = a.levels()[i];
    const Interval& y = b.levels()[i];
    if (x.lo < y.lo || x.hi < y.hi) return true;
  }
  return false;
}

bool comparable(const FuzzyNumber& a, const FuzzyNumber& b) { return leq(a, b) || leq(b, a); }

double distance(const FuzzyNumber& a, const FuzzyNumber& b) {
  require_same_grid(a, b, "distance");
  double d = 0.0;
  for (std::size_t i = 0; i < a.grid_size(); ++i) {
    const Interval& x = a.levels()[i];
    const Interval& y = b.levels()[i];
    d = std::max({d, std::abs(x.lo - y.lo), std::abs(x.hi - y.hi)});
  }
  return d;
}

bool approx_equal(const FuzzyNumber& a, const FuzzyNumber& b, double tol) {
  return a.grid_size() == b.grid_size() && distance(a, b) <= tol;
}

HukuharaResult hukuhara_diff(const FuzzyNumber& a, const FuzzyNumber& b) {
  require_same_grid(a, b, "hukuhara_diff");
  std::vector<Interval> c(a.grid_size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = {a.levels()[i].lo - b.levels()[i].lo, a.levels()[i].hi - b.levels()[i].hi};
  }
  if (auto v = find_level_violation(c)) return {std::nullopt, v};
  return {FuzzyNumber::from_levels(std::move(c)), std::nullopt};
}

}  // namespace fuzzyopt
