#include <gtest/gtest.h>

#include "properties.hpp"

using namespace fuzzyopt::testing;

namespace {

void expect_holds(const PropertyOutcome& p) {
  EXPECT_GE(p.cases, 200u) << p.name;
  EXPECT_EQ(p.failures, 0u) << p.name << ": " << p.first_failure;
}

}  // namespace

TEST(Properties, ArithmeticPreservesInvariants) { expect_holds(prop_arithmetic_invariants()); }
TEST(Properties, ArithmeticMatchesSampledImage) { expect_holds(prop_arithmetic_matches_sampled_image()); }
TEST(Properties, OrderAxioms) { expect_holds(prop_order_axioms()); }
TEST(Properties, MetricAxioms) { expect_holds(prop_metric_axioms()); }
TEST(Properties, HukuharaRoundTrip) { expect_holds(prop_hukuhara_roundtrip()); }
TEST(Properties, SquareWithinProduct) { expect_holds(prop_square_within_product()); }
TEST(Properties, NegationAntisymmetry) { expect_holds(prop_negation_antisymmetry()); }
TEST(Properties, CrispCollapse) { expect_holds(prop_crisp_collapse()); }
TEST(Properties, FiniteDifferencesMatchAnalyticUpToRoundoff) {
  expect_holds(prop_fd_matches_analytic(kPropertyCases, 5e-4));
}
