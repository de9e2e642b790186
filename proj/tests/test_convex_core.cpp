#include <gtest/gtest.h>

#include <cmath>

#include "clipopt/convex_core.hpp"
#include "support/instances.hpp"

namespace clipopt {
namespace {

using testing::RandomPoint;

ClippedTerm Scalar(double a, double b, double alpha) {
  return {LossAtom::Square(), {Vector::Constant(1, a), b}, 1.0, alpha};
}

Vector V(double v) { return Vector::Constant(1, v); }

TEST(WeightedSubproblem, SymmetricPair) {
  const Problem p(1, {}, {Scalar(1, -1, 1), Scalar(1, 1, 1)});
  const InnerResult r = WeightedSubproblem(p, WeightVector::Constant(2, 1.0), V(0.7));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 0.0, 1e-8);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
}

TEST(WeightedSubproblem, SingleActiveTerm) {
  const Problem p(1, {}, {Scalar(1, -1, 1), Scalar(1, 1, 1)});
  const InnerResult r = WeightedSubproblem(p, WeightVector(Vector{{1.0, 0.0}}), V(-3.0));
  EXPECT_NEAR(r.x[0], 1.0, 1e-8);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(WeightedSubproblem, PinnedCoordinate) {
  BaseObjective base;
  base.lower = V(3);
  base.upper = V(3);
  const Problem p(1, base, {Scalar(1, -1, 1), Scalar(1, 1, 1)});
  for (double l : {0.0, 0.3, 1.0}) {
    const InnerResult r = WeightedSubproblem(p, WeightVector::Constant(2, l), V(-10));
    EXPECT_EQ(r.x[0], 3.0);
    EXPECT_TRUE(r.converged);
  }
}

TEST(WeightedSubproblem, ConstantObjectiveReturnsProjectedStart) {
  BaseObjective base;
  base.lower = V(-1);
  base.upper = V(1);
  const Problem p(1, base, {Scalar(1, -1, 0.5)});
  const InnerResult r = WeightedSubproblem(p, WeightVector::Constant(1, 0.0), V(4));
  EXPECT_EQ(r.x[0], 1.0);
  EXPECT_EQ(r.value, 0.5);
  EXPECT_EQ(r.iterations, 0);
}

TEST(WeightedSubproblem, IterationCapFlagsNotConverged) {
  const Problem p = testing::RandomSquareInstance(1, 3, 6);
  InnerConfig cfg;
  cfg.max_iters = 1;
  cfg.grad_tol = 1e-14;
  const InnerResult r = WeightedSubproblem(p, WeightVector::Constant(6, 1.0), Vector::Constant(3, 5.0), cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_TRUE(std::isfinite(r.value));
}

TEST(WeightVector, RejectsOutOfRange) {
  EXPECT_THROW(WeightVector(Vector{{0.5, 1.5}}), Error);
  EXPECT_THROW(WeightVector(Vector{{-0.1}}), Error);
  EXPECT_THROW(WeightVector(V(NAN)), Error);
}

TEST(ProjectBox, Examples) {
  EXPECT_EQ(ProjectBox(V(2), V(0), V(1))[0], 1.0);
  EXPECT_EQ(ProjectBox(V(0.5), V(0), V(1))[0], 0.5);
  EXPECT_EQ(ProjectBox(V(-3), V(-1), V(kInf))[0], -1.0);
}

TEST(ProjectBox, NonexpansiveAndIdempotent) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + rng.Below(5);
    Vector lo = RandomPoint(rng, n, 1.0), hi = lo;
    for (int j = 0; j < n; ++j) {
      hi[j] += 2.0 * rng.Uniform();
      if (rng.Uniform() < 0.2) lo[j] = -kInf;
      if (rng.Uniform() < 0.2) hi[j] = kInf;
    }
    const Vector x = RandomPoint(rng, n, 3.0), y = RandomPoint(rng, n, 3.0);
    const Vector px = ProjectBox(x, lo, hi), py = ProjectBox(y, lo, hi);
    EXPECT_LE((px - py).norm(), (x - y).norm() + 1e-15);
    EXPECT_EQ(ProjectBox(px, lo, hi), px);
  }
}

TEST(SmoothValueGrad, RidgeOnly) {
  BaseObjective base;
  base.ridge = 1.0;
  const Problem p(1, base, {Scalar(0, 0, 1)});
  Vector g;
  EXPECT_EQ(SmoothValueGrad(p, WeightVector::Constant(1, 1.0), V(2), g), 4.0);
  EXPECT_EQ(g[0], 4.0);
}

TEST(SmoothValueGrad, ShiftedSquare) {
  const Problem p(1, {}, {Scalar(1, -1, 0)});
  Vector g;
  EXPECT_EQ(SmoothValueGrad(p, WeightVector::Constant(1, 1.0), V(0), g), 1.0);
  EXPECT_EQ(g[0], -2.0);
}

TEST(SmoothValueGrad, IncludesClipConstant) {
  const Problem p(1, {}, {Scalar(1, -1, 3)});
  Vector g;
  EXPECT_DOUBLE_EQ(SmoothValueGrad(p, WeightVector::Constant(1, 0.25), V(0), g), 0.25 + 0.75 * 3.0);
}

TEST(SmoothValueGrad, MatchesFiniteDifferences) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Problem p = testing::RandomInstance(seed);
    Rng rng(seed + 3);
    const Vector x = RandomPoint(rng, p.dim(), 1.0);
    Vector lam(p.num_terms());
    for (int i = 0; i < p.num_terms(); ++i) lam[i] = p.term(i).Clippable() ? rng.Uniform() : 1.0;
    const WeightVector w(lam);
    Vector g, scratch;
    SmoothValueGrad(p, w, x, g);
    const Vector fd = testing::NumericGradient(
        [&](const Vector& y) { return SmoothValueGrad(p, w, y, scratch); }, x);
    EXPECT_LE((g - fd).norm(), 1e-6 * std::max(1.0, g.norm())) << "seed " << seed;
  }
}

TEST(ConvexCoreProperty, StationaryAndStartIndependent) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Problem p = testing::RandomInstance(seed);
    Rng rng(seed + 99);
    Vector lam(p.num_terms());
    for (int i = 0; i < p.num_terms(); ++i) lam[i] = p.term(i).Clippable() ? rng.Uniform() : 1.0;
    const WeightVector w(lam);
    double first = kInf;
    for (int s = 0; s < 10; ++s) {
      const Vector x0 = RandomPoint(rng, p.dim(), 4.0);
      const InnerResult r = WeightedSubproblem(p, w, x0);
      EXPECT_TRUE(r.converged) << "seed " << seed;
      EXPECT_LE(r.pg_norm, 1e-8);
      Vector g;
      const Vector px0 = ProjectBox(x0, p.base().lower, p.base().upper);
      EXPECT_LE(r.value, SmoothValueGrad(p, w, px0, g));
      if (s == 0) {
        first = r.value;
      } else {
        EXPECT_NEAR(r.value, first, 1e-6) << "seed " << seed;
      }
    }
  }
}

}  // namespace
}  // namespace clipopt
