#include <gtest/gtest.h>

#include <cmath>

#include "fuzzyopt/errors.hpp"
#include "fuzzyopt/problems.hpp"
#include "oracles.hpp"

using namespace fuzzyopt;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(ProblemKind, Names) {
  for (auto k : {ProblemKind::example_4_1, ProblemKind::max_return_crisp, ProblemKind::max_return_fuzzy,
                 ProblemKind::fuzzy_polynomial}) {
    EXPECT_EQ(parse_problem_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_problem_kind("example"));
  EXPECT_EQ(parse_sense("maximize"), Sense::maximize);
  EXPECT_FALSE(parse_sense("max"));
}

TEST(BuiltinSpec, Defaults) {
  const ProblemSpec e = builtin_spec(ProblemKind::example_4_1);
  EXPECT_EQ(e.sense, Sense::maximize);
  EXPECT_DOUBLE_EQ(e.x0, 1.0);
  EXPECT_DOUBLE_EQ(e.eps, 1e-5);
  EXPECT_EQ(e.alpha_points, 101u);

  const ProblemSpec c = builtin_spec(ProblemKind::max_return_crisp);
  EXPECT_TRUE(c.params.is_crisp());
  EXPECT_DOUBLE_EQ(as_triangular(c.params.Va).peak(), 0.00168);
  EXPECT_DOUBLE_EQ(as_triangular(c.params.rho).peak(), 1.0);

  const ProblemSpec f = builtin_spec(ProblemKind::max_return_fuzzy);
  EXPECT_FALSE(f.params.is_crisp());
  EXPECT_EQ(as_triangular(f.params.Va), TriangularFuzzy(0.00167, 0.00168, 0.00172));
  EXPECT_EQ(as_triangular(f.params.rho), TriangularFuzzy(0.5, 1.5, 3.5));
  EXPECT_DOUBLE_EQ(f.fd_step, max_return::kFuzzyFdStep);

  for (auto k : {ProblemKind::example_4_1, ProblemKind::max_return_crisp, ProblemKind::max_return_fuzzy,
                 ProblemKind::fuzzy_polynomial}) {
    EXPECT_NO_THROW(builtin_spec(k).validate());
  }
}

TEST(ProblemSpec, ValidateRejects) {
  ProblemSpec s = builtin_spec(ProblemKind::max_return_crisp);
  s.params.Va = 0.0;
  EXPECT_THROW(s.validate(), DomainError);
  s = builtin_spec(ProblemKind::max_return_crisp);
  s.params.rho = TriangularFuzzy(0.5, 1.0, 2.0);
  EXPECT_THROW(s.validate(), DomainError);
  s = builtin_spec(ProblemKind::fuzzy_polynomial);
  s.coefficients.clear();
  EXPECT_THROW(s.validate(), DomainError);
  s = builtin_spec(ProblemKind::example_4_1);
  s.alpha_points = 100;
  EXPECT_THROW(s.validate(), DomainError);
  s = builtin_spec(ProblemKind::example_4_1);
  s.domain = {1.0, 0.0};
  EXPECT_THROW(s.validate(), DomainError);
}

TEST(ProblemSpec, NewtonConfigMirrorsFields) {
  ProblemSpec s = builtin_spec(ProblemKind::example_4_1);
  s.x0 = 0.25;
  s.max_iter = 7;
  s.quadrature = QuadratureRule::trapezoid;
  s.alpha_points = 40;
  const NewtonConfig cfg = s.newton_config();
  EXPECT_DOUBLE_EQ(cfg.x0, 0.25);
  EXPECT_EQ(cfg.max_iter, 7u);
  EXPECT_EQ(cfg.scal.quadrature, QuadratureRule::trapezoid);
  EXPECT_EQ(cfg.scal.alpha_points, 40u);
}

TEST(Example41, LevelsForNonnegativeX) {
  const FuzzyFunction f = build_example_4_1();
  ASSERT_TRUE(f.has_analytic_derivatives());
  for (double x : {0.0, 0.3, 1.0, 2.0}) {
    for (double a : {0.0, 0.25, 0.5, 1.0}) {
      const LevelPair v = f.levels(x, a);
      EXPECT_NEAR(v.lo, x * x * (1 + a) + x * x * x * a, 1e-12);
      EXPECT_NEAR(v.hi, x * x * (3 - a) + x * x * x * (2 - a), 1e-12);
    }
  }
}

TEST(FuzzyPolynomial, SignAwareScaling) {
  const FuzzyFunction f = build_fuzzy_polynomial({TriangularFuzzy(-1, 0, 1), TriangularFuzzy(1, 2, 3)});
  const LevelPair v = f.levels(-1.0, 0.0);
  EXPECT_DOUBLE_EQ(v.lo, -1.0 - 3.0);
  EXPECT_DOUBLE_EQ(v.hi, 1.0 - 1.0);
  const LevelPair d = f.first_derivative(-1.0, 0.0);
  EXPECT_DOUBLE_EQ(d.lo, 3.0);
  EXPECT_DOUBLE_EQ(d.hi, 1.0);
  EXPECT_THROW(build_fuzzy_polynomial({}), DomainError);
}

TEST(MaxReturnCrisp, MatchesFormula) {
  const FuzzyFunction f = build_max_return_crisp(0.00168, 1.0);
  ASSERT_TRUE(f.has_analytic_derivatives());
  for (double x : {0.0, 0.5, 0.6989, 1.0, 1.5}) {
    const LevelPair v = f.levels(x, 0.3);
    EXPECT_EQ(v.lo, v.hi);
    EXPECT_LT(rel(v.lo, oracle::max_return_g(x, 0.00168, 1.0)), 1e-13);
  }
  EXPECT_THROW(build_max_return_crisp(0.0, 1.0), DomainError);
  EXPECT_THROW(build_max_return_crisp(0.00168, -1.0), DomainError);
}

TEST(MaxReturnCrisp, DerivativesMatchDifferences) {
  const FuzzyFunction f = build_max_return_crisp(0.00169, 2.0);
  for (double x : {0.2, 0.6, 0.7, 1.3}) {
    const double h = 1e-6;
    const double g1 = (oracle::max_return_g(x + h, 0.00169, 2.0) - oracle::max_return_g(x - h, 0.00169, 2.0)) / (2 * h);
    EXPECT_LT(rel(f.first_derivative(x, 0.0).lo, g1), 1e-6);
  }
}

TEST(MaxReturnFuzzy, CoreCollapsesToCrisp) {
  const FuzzyFunction fz = build_max_return_fuzzy(TriangularFuzzy(0.00167, 0.00168, 0.00172),
                                                  TriangularFuzzy(0.5, 1.5, 3.5));
  const FuzzyFunction cr = build_max_return_crisp(0.00168, 1.5);
  EXPECT_FALSE(fz.has_analytic_derivatives());
  for (int i = 0; i <= 150; ++i) {
    const double x = 0.01 * i;
    const LevelPair a = fz.levels(x, 1.0);
    const LevelPair b = cr.levels(x, 1.0);
    EXPECT_LE(rel(a.lo, b.lo), 1e-12) << "x = " << x;
    EXPECT_LE(rel(a.hi, b.hi), 1e-12) << "x = " << x;
  }
}

TEST(MaxReturnFuzzy, StraddlingResidualClampsLowerLevel) {
  const FuzzyFunction f = build_max_return_fuzzy(TriangularFuzzy(0.00167, 0.00168, 0.00172),
                                                 TriangularFuzzy(0.5, 1.5, 3.5));
  // c(x) = 0.0017 lies inside the 0-level of Va, so the residual spans 0.
  const double c = 0.0017;
  const double x = (0.1589 + std::sqrt(0.1589 * 0.1589 - 4 * 0.1256 * (0.05139 - c))) / (2 * 0.1256);
  const LevelPair v = f.levels(x, 0.0);
  EXPECT_NEAR(v.lo, -0.06667 * x - 1.1167, 1e-12);
  // Upper level: weight rho_hi / Va_lo^2 times the larger squared residual end.
  const double k_hi = 3.5 / (0.00167 * 0.00167);
  const double s_hi = std::max(std::pow(c - 0.00172, 2), std::pow(c - 0.00167, 2));
  EXPECT_LT(rel(v.hi, -0.06667 * x - 1.1167 + k_hi * s_hi), 1e-9);
}

TEST(MaxReturnFuzzy, LevelsAreValidAcrossTheBracket) {
  const FuzzyFunction f = build_function(builtin_spec(ProblemKind::max_return_fuzzy));
  for (int i = 0; i <= 300; ++i) EXPECT_NO_THROW(eval_fuzzy(f, 0.005 * i)) << "x = " << 0.005 * i;
}

TEST(MaxReturnFuzzy, Errors) {
  EXPECT_THROW(build_max_return_fuzzy(TriangularFuzzy(-0.001, 0.00168, 0.002), TriangularFuzzy(0.5, 1.5, 3.5)),
               SingularError);
  EXPECT_THROW(build_max_return_fuzzy(TriangularFuzzy(0.00167, 0.00168, 0.00172), TriangularFuzzy(0.0, 1.5, 3.5)),
               DomainError);
}

TEST(BuildFunction, DispatchAndDomain) {
  ProblemSpec s = builtin_spec(ProblemKind::fuzzy_polynomial);
  s.domain = {-1.0, 1.0};
  const FuzzyFunction f = build_function(s);
  EXPECT_DOUBLE_EQ(f.domain.lo, -1.0);
  EXPECT_NEAR(scalarize(f, 0.5), oracle::cubic_F(0.5), 1e-12);
  EXPECT_NEAR(scalarize(build_function(builtin_spec(ProblemKind::max_return_crisp)), 0.7),
              2.0 * oracle::max_return_g(0.7, 0.00168, 1.0), 1e-10);
}

TEST(ReferenceBracket, Documented) {
  EXPECT_EQ(reference_bracket(ProblemKind::example_4_1), (Interval{-0.5, 0.5}));
  EXPECT_EQ(reference_bracket(ProblemKind::max_return_crisp), (Interval{0.0, 1.5}));
  EXPECT_EQ(reference_bracket(ProblemKind::max_return_fuzzy), (Interval{0.0, 1.5}));
  EXPECT_FALSE(reference_bracket(ProblemKind::fuzzy_polynomial));
}
