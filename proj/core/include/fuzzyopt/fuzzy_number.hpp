#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuzzyopt {

/// Closed interval [lo, hi]. Plain aggregate; the invariants lo <= hi and
/// finiteness are enforced by make_interval() and by FuzzyNumber.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr double width() const noexcept { return hi - lo; }
  constexpr double midpoint() const noexcept { return 0.5 * (lo + hi); }
  constexpr bool contains(double t) const noexcept { return lo <= t && t <= hi; }
  constexpr bool contains_zero() const noexcept { return contains(0.0); }
  constexpr bool subset_of(const Interval& other) const noexcept {
    return other.lo <= lo && hi <= other.hi;
  }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

/// Checked constructor. Throws DomainError on lo > hi or non-finite input.
Interval make_interval(double lo, double hi);

// Endpoint interval arithmetic. These never validate; callers that need
// the invariants go through FuzzyNumber.
Interval operator+(const Interval& a, const Interval& b) noexcept;
Interval scale(double lambda, const Interval& a) noexcept;
Interval multiply(const Interval& a, const Interval& b) noexcept;
/// Four-quotient rule. Precondition: !b.contains_zero().
Interval divide(const Interval& a, const Interval& b) noexcept;
/// Image of the interval under t -> t*t (dependent square).
Interval square(const Interval& a) noexcept;
/// [1/hi, 1/lo]. Precondition: !a.contains_zero().
Interval reciprocal(const Interval& a) noexcept;

/// Triangular fuzzy number (left, peak, right) with left <= peak <= right.
class TriangularFuzzy {
 public:
  TriangularFuzzy(double left, double peak, double right);

  static TriangularFuzzy crisp(double value) { return {value, value, value}; }

  double left() const noexcept { return left_; }
  double peak() const noexcept { return peak_; }
  double right() const noexcept { return right_; }
  bool is_crisp() const noexcept { return left_ == peak_ && peak_ == right_; }

  friend bool operator==(const TriangularFuzzy&, const TriangularFuzzy&) = default;

 private:
  double left_;
  double peak_;
  double right_;
};

/// [(1-alpha) left + alpha peak, (1-alpha) right + alpha peak].
/// Throws DomainError when alpha is outside [0, 1].
Interval alpha_cut(const TriangularFuzzy& t, double alpha);

/// Relative slack used when checking level ordering and nestedness, and the
/// default tolerance of approx_equal().
inline constexpr double kLevelTolerance = 1e-12;

/// Default number of alpha levels.
inline constexpr std::size_t kDefaultGridSize = 101;

/// Alpha value of level i on the uniform grid of the given size.
double grid_alpha(std::size_t index, std::size_t grid_size) noexcept;

/// First invariant violation found in a level sequence, if any.
struct LevelViolation {
  enum class Kind { non_finite, crossed, not_nested };
  Kind kind;
  std::size_t index;  ///< offending level
  double alpha;
  std::string describe() const;
};

/// Scans levels (ordered by increasing alpha on a uniform grid) for the
/// first violation of finiteness, lo <= hi, or nestedness.
std::optional<LevelViolation> find_level_violation(std::span<const Interval> levels);

/// A fuzzy number sampled on a uniform alpha grid 0 = a_0 < ... < a_{M-1} = 1.
/// levels()[i] is the alpha-cut at grid_alpha(i, M). Immutable once built;
/// every instance satisfies the ordering, nestedness and normality invariants.
class FuzzyNumber {
 public:
  /// Validates and wraps the levels. Throws DomainError on violation or when
  /// fewer than two levels are given.
  static FuzzyNumber from_levels(std::vector<Interval> levels);
  static FuzzyNumber crisp(double value, std::size_t grid_size = kDefaultGridSize);

  std::size_t grid_size() const noexcept { return levels_.size(); }
  double alpha(std::size_t i) const noexcept { return grid_alpha(i, levels_.size()); }
  std::vector<double> alphas() const;

  std::span<const Interval> levels() const noexcept { return levels_; }
  const Interval& level(std::size_t i) const { return levels_.at(i); }
  /// 0-level (closure of the support).
  const Interval& support() const noexcept { return levels_.front(); }
  /// 1-level.
  const Interval& core() const noexcept { return levels_.back(); }

  friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

 private:
  explicit FuzzyNumber(std::vector<Interval> levels) : levels_(std::move(levels)) {}
  std::vector<Interval> levels_;
};

/// Samples the exact cuts of t on a uniform grid. Throws DomainError if
/// grid_size < 2.
FuzzyNumber discretize(const TriangularFuzzy& t, std::size_t grid_size = kDefaultGridSize);

// Level-wise extension-principle arithmetic. Binary operations require a
// shared grid and throw ShapeError otherwise.
FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b);
FuzzyNumber scalar_mul(double lambda, const FuzzyNumber& a);
FuzzyNumber mul(const FuzzyNumber& a, const FuzzyNumber& b);
/// Throws SingularError naming the first alpha whose divisor level holds 0.
FuzzyNumber div(const FuzzyNumber& a, const FuzzyNumber& b);
/// Dependent square: each level maps to {t*t : t in level}.
FuzzyNumber square(const FuzzyNumber& a);
/// Throws SingularError if some level contains 0.
FuzzyNumber reciprocal(const FuzzyNumber& a);

inline FuzzyNumber operator+(const FuzzyNumber& a, const FuzzyNumber& b) { return add(a, b); }
inline FuzzyNumber operator*(const FuzzyNumber& a, const FuzzyNumber& b) { return mul(a, b); }
inline FuzzyNumber operator*(double lambda, const FuzzyNumber& a) { return scalar_mul(lambda, a); }
inline FuzzyNumber operator-(const FuzzyNumber& a) { return scalar_mul(-1.0, a); }

/// Fuzzy-max order on grid points: both endpoints of a are <= those of b
/// at every grid alpha.
bool leq(const FuzzyNumber& a, const FuzzyNumber& b);
/// leq(a, b) and some endpoint is strictly smaller at some grid alpha.
bool lt(const FuzzyNumber& a, const FuzzyNumber& b);
bool comparable(const FuzzyNumber& a, const FuzzyNumber& b);

/// sup over grid alphas of max(|dL|, |dU|).
double distance(const FuzzyNumber& a, const FuzzyNumber& b);

/// Level-wise equality within an absolute tolerance.
bool approx_equal(const FuzzyNumber& a, const FuzzyNumber& b, double tol = kLevelTolerance);

/// Outcome of a Hukuhara difference. Nonexistence is a regular result.
struct HukuharaResult {
  std::optional<FuzzyNumber> difference;
  std::optional<LevelViolation> violation;  ///< set iff difference is empty

  bool exists() const noexcept { return difference.has_value(); }
};

/// c with c + b = a, if it exists: c_alpha = [aL - bL, aU - bU] must itself
/// be a valid fuzzy number.
HukuharaResult hukuhara_diff(const FuzzyNumber& a, const FuzzyNumber& b);

}  // namespace fuzzyopt
