#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "clipopt/generators.hpp"
#include "clipopt/micp.hpp"
#include "support/instances.hpp"

namespace clipopt {
namespace {

using testing::RandomInstance;

ClippedTerm Scalar(double a, double b, double w, double alpha) {
  return {LossAtom::Square(), {Vector::Constant(1, a), b}, w, alpha};
}

Problem TwoWell() { return Problem(1, {}, {Scalar(1, 0, 1, 1), Scalar(1, -10, 1, 1)}); }

TEST(SolveExhaustive, TwoWellMatchesGrid) {
  const GlobalResult r = SolveExhaustive(TwoWell());
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_TRUE(r.proven);
  EXPECT_EQ(r.enumerated_count, 4);
  EXPECT_NEAR(testing::GridMinimum1D(TwoWell(), -5.0, 15.0), 1.0, 1e-9);
  const double x = r.x_star[0];
  EXPECT_TRUE(std::abs(x) < 1e-6 || std::abs(x - 10.0) < 1e-6);
}

TEST(SolveExhaustive, GridOracleOnOneDimensionalInstances) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Problem p = testing::RandomSquareInstance(seed, 1, 5);
    const GlobalResult r = SolveExhaustive(p);
    EXPECT_NEAR(r.value, testing::GridMinimum1D(p, -20.0, 20.0), 1e-7) << "seed " << seed;
  }
}

TEST(SolveExhaustive, SubsetSumGadget) {
  const SubsetSumInstance yes = GenSubsetSum({2, 3, -5});
  EXPECT_LE(std::abs(SolveExhaustive(yes.problem).value + yes.offset), 1e-6);
  const SubsetSumInstance no = GenSubsetSum({1, 2, 4});
  EXPECT_GT(SolveExhaustive(no.problem).value + no.offset, 1e-3);
  const SubsetSumInstance pair = GenSubsetSum({1, -1});
  const GlobalResult r = SolveExhaustive(pair.problem);
  EXPECT_LE(std::abs(r.value + pair.offset), 1e-6);
  EXPECT_NEAR(r.x_star[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x_star[1], 1.0, 1e-4);
}

// No zero-sum subset, but fractional points get within about (1/81)^2 of zero.
TEST(SolveExhaustive, GeometricListHasSmallPositiveValue) {
  const SubsetSumInstance s = GenSubsetSum({1, 3, 9, 27, 81});
  const double v = SolveExhaustive(s.problem).value + s.offset;
  EXPECT_GT(v, 1e-5);
  EXPECT_NEAR(v, 2.245e-4, 1e-6);
}

TEST(SolveExhaustive, RefusesAboveLimit) {
  ExhaustiveConfig cfg;
  cfg.limit = 3;
  try {
    SolveExhaustive(testing::RandomSquareInstance(0, 1, 4), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
}

TEST(SolveExhaustive, UnclippableTermsDoNotCountTowardLimit) {
  std::vector<ClippedTerm> terms;
  for (int i = 0; i < 5; ++i) terms.push_back(Scalar(1, i, 1, i < 2 ? 0.5 : kInf));
  ExhaustiveConfig cfg;
  cfg.limit = 2;
  const GlobalResult r = SolveExhaustive(Problem(1, {}, terms), cfg);
  EXPECT_EQ(r.enumerated_count, 4);
}

TEST(ExhaustiveProperty, PermutationInvariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Problem p = RandomInstance(seed);
    std::vector<int> order(static_cast<std::size_t>(p.num_terms()));
    std::iota(order.rbegin(), order.rend(), 0);
    EXPECT_NEAR(SolveExhaustive(p).value, SolveExhaustive(p.Permuted(order)).value, 1e-7) << "seed " << seed;
  }
}

TEST(SolveBnb, TwoWell) {
  const GlobalResult r = SolveBnb(TwoWell());
  EXPECT_TRUE(r.proven);
  EXPECT_NEAR(r.value, 1.0, 1e-4);
}

TEST(SolveBnb, IntegralRootStopsImmediately) {
  BaseObjective base;
  base.ridge = 1.0;
  const Problem p(1, base, {Scalar(1, -1, 1, 100)});
  const GlobalResult r = SolveBnb(p);
  EXPECT_EQ(r.explored_nodes, 1);
  EXPECT_TRUE(r.proven);
  EXPECT_NEAR(r.value, 0.5, 1e-6);
}

TEST(SolveBnb, NodeLimit) {
  BnbConfig cfg;
  cfg.node_limit = 1;
  cfg.abs_gap_tol = 0.0;
  cfg.rel_gap_tol = 0.0;
  const GlobalResult r = SolveBnb(GenRegression(0).problem, cfg);
  EXPECT_FALSE(r.proven);
  EXPECT_EQ(r.termination, Termination::kNodeLimit);
  EXPECT_LE(r.lower_bound, r.value);
}

TEST(SolveBnb, RejectsBadConfig) {
  BnbConfig cfg;
  cfg.integral_tol = 0.5;
  EXPECT_THROW(SolveBnb(TwoWell(), cfg), Error);
}

TEST(BnbProperty, MatchesExhaustiveOnTwoDimensionalInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Problem p = RandomInstance(seed + 500, {2, 2, 8, 8});
    const GlobalResult e = SolveExhaustive(p);
    const GlobalResult b = SolveBnb(p);
    EXPECT_TRUE(b.proven);
    EXPECT_LE(std::abs(b.value - e.value), std::max(1e-4, 1e-4 * std::abs(b.value))) << "seed " << seed;
    EXPECT_LE(b.bound_gap, std::max(1e-4, 1e-4 * std::abs(b.value)) + 1e-12);
  }
}

TEST(BnbProperty, TracesAreMonotone) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GlobalResult b = SolveBnb(RandomInstance(seed));
    ASSERT_EQ(b.incumbent_trace.size(), b.bound_trace.size());
    for (std::size_t k = 1; k < b.incumbent_trace.size(); ++k) {
      EXPECT_LE(b.incumbent_trace[k], b.incumbent_trace[k - 1]);
      EXPECT_GE(b.bound_trace[k], b.bound_trace[k - 1] - 1e-7);
    }
  }
}

}  // namespace
}  // namespace clipopt
