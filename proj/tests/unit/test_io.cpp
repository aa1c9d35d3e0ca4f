#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "fuzzyopt/errors.hpp"
#include "fuzzyopt/io.hpp"
#include "generators.hpp"

using namespace fuzzyopt;

TEST(FuzzyNumberJson, RoundTripIsExact) {
  fuzzyopt::testing::Gen g;
  for (int n = 0; n < 50; ++n) {
    const FuzzyNumber a = g.fuzzy(n % 2 ? 11 : 4);
    EXPECT_EQ(fuzzy_number_from_json(to_json(a)), a);
  }
}

TEST(FuzzyNumberJson, RejectsMalformedInput) {
  EXPECT_THROW(fuzzy_number_from_json("{"), ParseError);
  EXPECT_THROW(fuzzy_number_from_json("[1, 2]"), ParseError);
  EXPECT_THROW(fuzzy_number_from_json(R"({"alphas": [0, 1], "lo": [0]})"), ParseError);
  EXPECT_THROW(fuzzy_number_from_json(R"({"alphas": [0, 1], "lo": [0, 1], "hi": [2]})"), ParseError);
  EXPECT_THROW(fuzzy_number_from_json(R"({"alphas": [0, 0.6, 1], "lo": [0, 0, 0], "hi": [1, 1, 1]})"), ParseError);
  EXPECT_THROW(fuzzy_number_from_json(R"({"alphas": [0, 1], "lo": [0, 2], "hi": [3, 1]})"), ParseError);
  EXPECT_THROW(fuzzy_number_from_json(R"({"alphas": [0, 1], "lo": ["a", 0], "hi": [1, 1]})"), ParseError);
  EXPECT_NO_THROW(fuzzy_number_from_json(R"({"alphas": [0, 0.5, 1], "lo": [0, 0.5, 1], "hi": [2, 1.5, 1]})"));
}

TEST(TriangularJson, RoundTrip) {
  const TriangularFuzzy t(0.00167, 0.00168, 0.00172);
  EXPECT_EQ(triangular_from_json(to_json(t)), t);
  EXPECT_THROW(triangular_from_json("[3, 2, 1]"), ParseError);
  EXPECT_THROW(triangular_from_json("[1, 2]"), ParseError);
}

TEST(ParseParam, CommandLineSpelling) {
  EXPECT_EQ(parse_param("0.00168"), Param(0.00168));
  EXPECT_EQ(parse_param("0.5,1.5,3.5"), Param(TriangularFuzzy(0.5, 1.5, 3.5)));
  EXPECT_EQ(parse_param("0.5, 1.5, 3.5"), Param(TriangularFuzzy(0.5, 1.5, 3.5)));
  EXPECT_THROW(parse_param("abc"), ParseError);
  EXPECT_THROW(parse_param("1,2"), ParseError);
  EXPECT_THROW(parse_param("1,2,x"), ParseError);
  EXPECT_THROW(parse_param("1.5x"), ParseError);
  EXPECT_THROW(parse_param("3,2,1"), ParseError);
}

TEST(ProblemSpecJson, RoundTripsEveryBuiltin) {
  for (auto k : {ProblemKind::example_4_1, ProblemKind::max_return_crisp, ProblemKind::max_return_fuzzy,
                 ProblemKind::fuzzy_polynomial}) {
    ProblemSpec s = builtin_spec(k);
    s.x0 = 0.123456789012345;
    s.quadrature = QuadratureRule::trapezoid;
    const std::string text = to_json(s);
    EXPECT_EQ(problem_spec_from_json(text), s) << text;
    EXPECT_EQ(to_json(problem_spec_from_json(text)), text);
  }
}

TEST(ProblemSpecJson, BoundedDomainAndKeysPerKind) {
  ProblemSpec s = builtin_spec(ProblemKind::fuzzy_polynomial);
  s.domain = {-2.0, 3.5};
  const std::string text = to_json(s);
  EXPECT_NE(text.find("\"coefficients\""), std::string::npos);
  EXPECT_EQ(text.find("\"params\""), std::string::npos);
  EXPECT_EQ(problem_spec_from_json(text), s);

  const std::string crisp = to_json(builtin_spec(ProblemKind::max_return_crisp));
  EXPECT_EQ(crisp.find("\"coefficients\""), std::string::npos);
  EXPECT_NE(crisp.find("\"params\""), std::string::npos);
}

TEST(ProblemSpecJson, MissingKeysTakeBuiltinDefaults) {
  const ProblemSpec s = problem_spec_from_json(R"({"kind": "max_return_fuzzy", "x0": 0.9})");
  ProblemSpec want = builtin_spec(ProblemKind::max_return_fuzzy);
  want.x0 = 0.9;
  EXPECT_EQ(s, want);
  const ProblemSpec p = problem_spec_from_json(
      R"({"kind": "fuzzy_polynomial", "coefficients": [[0, 1, 2], [-1, -1, -1]], "domain": [null, 4]})");
  ASSERT_EQ(p.coefficients.size(), 2u);
  EXPECT_EQ(p.coefficients[1], TriangularFuzzy::crisp(-1.0));
  const ProblemSpec q = problem_spec_from_json(R"({"kind": "fuzzy_polynomial", "coefficients": [0, 2.5, [1, 2, 3]]})");
  ASSERT_EQ(q.coefficients.size(), 3u);
  EXPECT_EQ(q.coefficients[1], TriangularFuzzy::crisp(2.5));
  EXPECT_TRUE(std::isinf(p.domain.lo));
  EXPECT_DOUBLE_EQ(p.domain.hi, 4.0);
}

TEST(ProblemSpecJson, Rejects) {
  EXPECT_THROW(problem_spec_from_json("not json"), ParseError);
  EXPECT_THROW(problem_spec_from_json("[]"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"x0": 1})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "nope"})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "example_4_1", "colour": 1})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "example_4_1", "eps": "small"})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "example_4_1", "eps": -1})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "example_4_1", "max_iter": 2.5})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "example_4_1", "quadrature": "gauss"})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "max_return_crisp", "params": {"Va": -1}})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "max_return_crisp", "params": {"beta": 1}})"), ParseError);
  EXPECT_THROW(problem_spec_from_json(R"({"kind": "fuzzy_polynomial", "coefficients": []})"), ParseError);
}

TEST(Sweep, Formats) {
  EXPECT_TRUE(parse_sweep("").empty());
  EXPECT_TRUE(parse_sweep(" \n\t").empty());
  EXPECT_TRUE(parse_sweep("[]").empty());
  const auto rows = parse_sweep(R"([{"Va": 0.00168, "rho": 1}, {"Va": [1, 2, 3], "rho": 2, "x0": 0.5}])");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].params.is_crisp());
  EXPECT_FALSE(rows[0].x0);
  EXPECT_EQ(rows[1].params.Va, Param(TriangularFuzzy(1, 2, 3)));
  EXPECT_EQ(rows[1].x0, 0.5);
  EXPECT_EQ(parse_sweep(R"({"rows": [{"Va": 0.00168, "rho": 1}]})").size(), 1u);
  EXPECT_EQ(parse_sweep(to_json(rows)), rows);
}

TEST(Sweep, Rejects) {
  EXPECT_THROW(parse_sweep("{"), ParseError);
  EXPECT_THROW(parse_sweep(R"({"data": []})"), ParseError);
  EXPECT_THROW(parse_sweep(R"([{"Va": 1}])"), ParseError);
  EXPECT_THROW(parse_sweep(R"([{"Va": 1, "rho": 1, "extra": 0}])"), ParseError);
  EXPECT_THROW(parse_sweep(R"([{"Va": "x", "rho": 1}])"), ParseError);
  EXPECT_THROW(parse_sweep("[1]"), ParseError);
}

TEST(Files, LoadAndMissing) {
  const auto dir = std::filesystem::temp_directory_path() / "fuzzyopt_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "spec.json";
  {
    std::ofstream out(path);
    out << to_json(builtin_spec(ProblemKind::max_return_crisp));
  }
  EXPECT_EQ(load_problem_spec(path), builtin_spec(ProblemKind::max_return_crisp));
  EXPECT_THROW(load_problem_spec(dir / "missing.json"), ParseError);
  EXPECT_THROW(read_text_file(dir / "missing.json"), ParseError);
  std::filesystem::remove_all(dir);
}
