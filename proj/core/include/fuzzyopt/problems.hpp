#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzyopt/fuzzy_number.hpp"
#include "fuzzyopt/level_calculus.hpp"
#include "fuzzyopt/newton.hpp"

namespace fuzzyopt {

/// Coefficients of the single-asset return/risk model
///   g(x) = -R1 x - R0 + (rho / Va^2) (c(x) - Va)^2,
///   c(x) = C2 x^2 - C1 x + C0.
namespace max_return {
inline constexpr double kReturnSlope = 0.06667;
inline constexpr double kReturnOffset = 1.1167;
inline constexpr double kRiskQuadratic = 0.1256;
inline constexpr double kRiskLinear = 0.1589;
inline constexpr double kRiskConstant = 0.05139;

inline constexpr double kDefaultVa = 0.00168;
inline constexpr double kDefaultRho = 1.0;
/// Finite-difference step for the fuzzy model. Its upper levels have a kink
/// in x wherever |c - Va_lo| and |c - Va_hi| trade places; the kinks of the
/// alpha grid are ~1e-5 apart near the optimum, so the stencil must span
/// several of them for F'' to describe the curvature Newton actually sees.
inline constexpr double kFuzzyFdStep = 1e-3;
}  // namespace max_return

/// A parameter that is either an exact real or a triangular fuzzy number.
using Param = std::variant<double, TriangularFuzzy>;

TriangularFuzzy as_triangular(const Param& p);

struct MaxReturnParams {
  Param Va = max_return::kDefaultVa;
  Param rho = max_return::kDefaultRho;

  /// Both parameters are exact (or degenerate triangles).
  bool is_crisp() const;
  /// Va = (0.00167, 0.00168, 0.00172), rho = (0.5, 1.5, 3.5).
  static MaxReturnParams fuzzy_defaults();

  friend bool operator==(const MaxReturnParams&, const MaxReturnParams&) = default;
};

enum class ProblemKind { example_4_1, max_return_crisp, max_return_fuzzy, fuzzy_polynomial };
enum class Sense { minimize, maximize };

std::string_view to_string(ProblemKind k) noexcept;
std::optional<ProblemKind> parse_problem_kind(std::string_view name) noexcept;
std::string_view to_string(Sense s) noexcept;
std::optional<Sense> parse_sense(std::string_view name) noexcept;

/// Declarative problem definition plus the solver settings used on it.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::example_4_1;
  /// fuzzy_polynomial only: coefficients[i] multiplies x^i.
  std::vector<TriangularFuzzy> coefficients;
  /// max_return_* only.
  MaxReturnParams params;
  Domain domain;
  /// Reporting tag; the solver looks for stationary points either way.
  Sense sense = Sense::minimize;

  double x0 = 1.0;
  double eps = 1e-5;
  std::size_t max_iter = 100;
  std::size_t alpha_points = kDefaultGridSize;
  QuadratureRule quadrature = QuadratureRule::simpson;
  double fd_step = 1e-5;

  /// Throws DomainError on inconsistent content.
  void validate() const;
  NewtonConfig newton_config() const;

  friend bool operator==(const ProblemSpec& a, const ProblemSpec& b);
};

/// Ready-to-run spec for a built-in problem with its default parameters.
ProblemSpec builtin_spec(ProblemKind kind);

/// (0,1,2) x^3 + (1,2,3) x^2, defined on the whole real line.
FuzzyFunction build_example_4_1();

/// Crisp lift of g with analytic derivatives. Throws DomainError unless
/// Va > 0 and rho > 0.
FuzzyFunction build_max_return_crisp(double Va, double rho);

/// Level-wise interval composition of g with fuzzy Va and rho:
/// residual [c - Va_hi, c - Va_lo], its dependent square s,
/// weight k = [rho_lo / Va_hi^2, rho_hi / Va_lo^2], level = linear + k*s.
/// The levels are only continuous in x, so no analytic derivatives are
/// attached and the scalarization falls back to finite differences.
/// Throws SingularError if a Va level touches zero, DomainError if rho <= 0.
FuzzyFunction build_max_return_fuzzy(const TriangularFuzzy& Va, const TriangularFuzzy& rho);

/// sum_i coefficients[i] (.) x^i with sign-aware scalar multiplication.
/// Throws DomainError on an empty coefficient list.
FuzzyFunction build_fuzzy_polynomial(std::vector<TriangularFuzzy> coefficients,
                                     Domain domain = {});

FuzzyFunction build_function(const ProblemSpec& spec);

/// Interval known to contain the stationary point the built-in problems are
/// solved for; used by brute-force grid oracles. Empty for user polynomials.
std::optional<Interval> reference_bracket(ProblemKind kind);

}  // namespace fuzzyopt
