#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "clipopt/generators.hpp"
#include "clipopt/heuristics.hpp"
#include "clipopt/problem_io.hpp"

namespace clipopt {
namespace {

TEST(Rng, UniformAndSampleShapes) {
  Rng rng(1);
  for (int k = 0; k < 10000; ++k) {
    const double u = rng.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  const std::vector<int> s = rng.Sample(20, 20);
  EXPECT_EQ(std::set<int>(s.begin(), s.end()).size(), 20u);
  EXPECT_THROW(rng.Sample(3, 4), Error);
}

TEST(Rng, DocumentedStreamLayout) {
  std::mt19937_64 engine(42);
  const std::uint64_t a = engine(), b = engine(), c = engine();
  Rng rng(42);
  EXPECT_EQ(rng.Uniform(), static_cast<double>(a >> 11) * 0x1.0p-53);
  const double u1 = static_cast<double>(b >> 11) * 0x1.0p-53;
  const double u2 = static_cast<double>(c >> 11) * 0x1.0p-53;
  EXPECT_EQ(rng.Normal(), std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * M_PI * u2));
}

TEST(GenRegression, Shape) {
  const RegressionData r = GenRegression(0);
  EXPECT_EQ(r.problem.dim(), 1);
  EXPECT_EQ(r.problem.num_terms(), 20);
  EXPECT_EQ(r.problem.base().ridge, 0.2);
  for (const ClippedTerm& t : r.problem.terms()) EXPECT_EQ(t.alpha, 0.5);
  EXPECT_EQ(r.flipped.size(), 5u);
}

TEST(GenRegression, Deterministic) {
  EXPECT_EQ(SerializeProblem(GenRegression(9).problem), SerializeProblem(GenRegression(9).problem));
  EXPECT_NE(SerializeProblem(GenRegression(9).problem), SerializeProblem(GenRegression(10).problem));
}

TEST(GenRegression, ClippedSlopeBeatsLeastSquares) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const SolveReport clipped = SolveAltMin(GenRegression(seed).problem);
    const SolveReport ls = SolveAltMin(GenRegression(seed, 20, 5, kInf).problem);
    EXPECT_LE(std::abs(clipped.x_best[0] - 1.0), 0.15) << "seed " << seed;
    EXPECT_GT(std::abs(ls.x_best[0] - 1.0), 2.0 * std::abs(clipped.x_best[0] - 1.0)) << "seed " << seed;
    if (seed == 0) EXPECT_GE(std::abs(ls.x_best[0] - 1.0), 0.3);
    EXPECT_LE(clipped.iterations, 20);
  }
}

TEST(GenLaneChange, DifferenceRows) {
  LaneOptions opts;
  opts.horizon = 10;
  opts.obstacles.clear();
  const Problem p = GenLaneChange(opts);
  EXPECT_EQ(p.dim(), 11);
  EXPECT_EQ(p.num_terms(), 22);
  const QuadTerm& first = p.base().quad_terms.front();
  EXPECT_EQ(first.c, opts.rho1);
  EXPECT_EQ(first.expr.a[0], -1.0);
  EXPECT_EQ(first.expr.a[1], 1.0);
  EXPECT_EQ(first.expr.a.cwiseAbs().sum(), 2.0);
  EXPECT_EQ(p.base().quad_terms.size(), 10u + 9u + 8u);
  EXPECT_EQ(p.base().lower[0], 1.0);
  EXPECT_EQ(p.base().upper[10], -1.0);
}

TEST(GenLaneChange, StraightRoadStaysInLane) {
  LaneOptions opts;
  opts.horizon = 20;
  opts.obstacles.clear();
  opts.x_end = 1.0;
  const Problem p = GenLaneChange(opts);
  const SolveReport r = SolveAltMin(p);
  EXPECT_LE((r.x_best - Vector::Ones(21)).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_NEAR(r.objective_value, 21.0, 1e-8);
}

TEST(GenLaneChange, InvalidObstacles) {
  LaneOptions opts;
  opts.obstacles = {UpperLaneObstacle(5, 10), Obstacle{7, 8, 0.5, kInf}};
  EXPECT_THROW(GenLaneChange(opts), Error);
  opts.obstacles = {UpperLaneObstacle(0, 3)};
  EXPECT_THROW(GenLaneChange(opts), Error);
  opts.obstacles = {UpperLaneObstacle(90, 120)};
  EXPECT_THROW(GenLaneChange(opts), Error);
}

TEST(GenSubsetSum, Shape) {
  const SubsetSumInstance s = GenSubsetSum({2, 3, -5});
  EXPECT_EQ(s.problem.dim(), 3);
  EXPECT_EQ(s.problem.num_terms(), 6);
  EXPECT_EQ(s.offset, -0.75);
  EXPECT_EQ(s.problem.base().hinge_terms.size(), 1u);
  EXPECT_EQ(s.problem.base().hinge_terms[0].c, kSubsetSumPenalty);
  // Binary points satisfying 1^T x >= 1 give (a^T x)^2 exactly.
  const Vector x{{1.0, 1.0, 0.0}};
  EXPECT_DOUBLE_EQ(EvalObjective(s.problem, x) + s.offset, 25.0);
  EXPECT_THROW(GenSubsetSum({}), Error);
}

TEST(GenLogistic, ShapeAndDeterminism) {
  const LogisticData d = GenLogistic(0, 1.0);
  EXPECT_EQ(d.problem.dim(), 6);
  EXPECT_EQ(d.problem.num_terms(), 100);
  EXPECT_EQ(d.train_x.rows(), 100);
  EXPECT_EQ(d.test_x.rows(), 900);
  EXPECT_EQ(d.flipped.size(), 20u);
  EXPECT_DOUBLE_EQ(d.weight, 1.0 / 1000.0);
  EXPECT_DOUBLE_EQ(d.problem.term(0).alpha, d.weight * 1.0);
  EXPECT_EQ(d.problem.base().upper.size(), 6);
  EXPECT_EQ(SerializeProblem(d.problem), SerializeProblem(GenLogistic(0, 1.0).problem));
  EXPECT_EQ(GenLogistic(0, kInf).problem.term(0).alpha, kInf);
  EXPECT_THROW(GenLogistic(0, 0.0), Error);
}

TEST(GenLogistic, UnclippedKeepsAllWeights) {
  const LogisticData d = GenLogistic(0, kInf);
  const SolveReport r = SolveAltMin(d.problem);
  for (int i = 0; i < d.problem.num_terms(); ++i) EXPECT_EQ(r.lambda_trace.back()[i], 1.0);
  EXPECT_TRUE(DetectedOutliers(d, r.x_best).empty());
}

// Snapshot for seed 0 with the default options.
TEST(GenLogistic, SweepSnapshot) {
  const double alpha_small = 0.1, alpha_large = 10.0;
  const LogisticData small = GenLogistic(0, alpha_small);
  const LogisticData large = GenLogistic(0, alpha_large);
  const LogisticData plain = GenLogistic(0, kInf);
  const SolveReport rs = SolveAltMin(small.problem);
  const SolveReport rl = SolveAltMin(large.problem);
  const SolveReport rp = SolveAltMin(plain.problem);
  EXPECT_NEAR(Accuracy(rp.x_best, plain.test_x, plain.test_y), 0.6433, 1e-4);
  EXPECT_NEAR(Accuracy(rl.x_best, large.test_x, large.test_y), 0.6433, 1e-4);
  EXPECT_EQ(DetectedOutliers(small, rs.x_best).size(), 100u);
  EXPECT_EQ(DetectedOutliers(large, rl.x_best).size(), 0u);
}

}  // namespace
}  // namespace clipopt
