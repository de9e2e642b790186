#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "clipopt/model.hpp"
#include "support/instances.hpp"

namespace clipopt {
namespace {

using testing::RandomInstance;
using testing::RandomPoint;

ClippedTerm Scalar(LossAtom loss, double a, double b, double w, double alpha) {
  return {loss, {Vector::Constant(1, a), b}, w, alpha};
}

Problem TwoWell() {
  return Problem(1, {}, {Scalar(LossAtom::Square(), 1, 0, 1, 1), Scalar(LossAtom::Square(), 1, -10, 1, 1)});
}

TEST(EvalTerm, SquareAtZero) {
  const TermValue v = EvalTerm(Scalar(LossAtom::Square(), 1, 0, 1, 0.25), Vector::Zero(1));
  EXPECT_EQ(v.raw, 0.0);
  EXPECT_EQ(v.clipped, 0.0);
}

TEST(EvalTerm, SquareClipped) {
  const TermValue v = EvalTerm(Scalar(LossAtom::Square(), 1, 0, 1, 0.25), Vector::Ones(1));
  EXPECT_EQ(v.raw, 1.0);
  EXPECT_EQ(v.clipped, 0.25);
}

TEST(EvalTerm, LogisticAtZero) {
  const TermValue v = EvalTerm(Scalar(LossAtom::Logistic(1), 1, 0, 1, 10), Vector::Zero(1));
  EXPECT_NEAR(v.raw, std::log(2.0), 1e-15);
  EXPECT_NEAR(v.clipped, 0.6931, 1e-4);
}

TEST(EvalTerm, DimensionMismatch) {
  try {
    EvalTerm(Scalar(LossAtom::Square(), 1, 0, 1, 1), Vector::Zero(2));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
}

TEST(EvalObjective, OneTermAtMinimum) { EXPECT_EQ(EvalObjective(TwoWell(), Vector::Zero(1)), 1.0); }

TEST(EvalObjective, BothClipped) { EXPECT_EQ(EvalObjective(TwoWell(), Vector::Constant(1, 5)), 2.0); }

TEST(EvalObjective, OutsidePinnedBox) {
  BaseObjective base;
  base.lower = Vector::Ones(1);
  base.upper = Vector::Ones(1);
  const Problem p(1, base, {Scalar(LossAtom::Square(), 1, 0, 1, 1)});
  EXPECT_EQ(EvalObjective(p, Vector::Zero(1)), kInf);
  EXPECT_EQ(EvalObjective(p, Vector::Constant(1, 1.0 + 5e-10)), 1.0);
}

TEST(EvalObjective, BaseTerms) {
  BaseObjective base;
  base.ridge = 0.5;
  base.quad_terms.push_back({2.0, {Vector::Constant(1, 1.0), 1.0}});
  base.hinge_terms.push_back({3.0, {Vector::Constant(1, 1.0), -1.0}});
  const Problem p(1, base, {Scalar(LossAtom::Square(), 1, 0, 1, kInf)});
  // x = 2: ridge 2, quad 2*9, hinge 3*1, term 4
  EXPECT_DOUBLE_EQ(EvalObjective(p, Vector::Constant(1, 2.0)), 2.0 + 18.0 + 3.0 + 4.0);
}

TEST(Loss, LogisticLargeArgumentsStayFinite) {
  const LossAtom l = LossAtom::Logistic(1);
  EXPECT_NEAR(l.Value(-800.0), 800.0, 1e-9);
  EXPECT_EQ(l.Value(800.0), 0.0);
  EXPECT_NEAR(l.Derivative(-800.0), -1.0, 1e-12);
}

TEST(Loss, HuberPieces) {
  const LossAtom h = LossAtom::Huber(0.5);
  EXPECT_DOUBLE_EQ(h.Value(0.3), 0.09);
  EXPECT_DOUBLE_EQ(h.Value(-1.0), 0.75);
  EXPECT_DOUBLE_EQ(h.Derivative(2.0), 1.0);
}

TEST(Validation, RejectsBadInput) {
  EXPECT_THROW(Problem(1, {}, {}), Error);
  EXPECT_THROW(Problem(1, {}, {Scalar(LossAtom::Square(), NAN, 0, 1, 1)}), Error);
  EXPECT_THROW(Problem(1, {}, {Scalar(LossAtom::Square(), 1, 0, 0, 1)}), Error);
  BaseObjective base;
  base.lower = Vector::Constant(1, 2.0);
  base.upper = Vector::Constant(1, 1.0);
  EXPECT_THROW(Problem(1, base, {Scalar(LossAtom::Square(), 1, 0, 1, 1)}), Error);
  EXPECT_THROW(Problem(2, {}, {Scalar(LossAtom::Square(), 1, 0, 1, 1)}), Error);
}

TEST(ModelProperty, ClippedBelowAlphaAndRaw) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Problem p = RandomInstance(seed);
    Rng rng(seed);
    for (int k = 0; k < 20; ++k) {
      const Vector x = RandomPoint(rng, p.dim(), 3.0);
      for (const ClippedTerm& t : p.terms()) {
        const TermValue v = EvalTerm(t, x);
        EXPECT_LE(v.clipped, t.alpha);
        EXPECT_LE(v.clipped, v.raw);
      }
    }
  }
}

TEST(ModelProperty, PermutationInvariance) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Problem p = RandomInstance(seed);
    Rng rng(seed + 1000);
    std::vector<int> order(static_cast<std::size_t>(p.num_terms()));
    std::iota(order.begin(), order.end(), 0);
    for (int k = static_cast<int>(order.size()) - 1; k > 0; --k) std::swap(order[k], order[rng.Below(k + 1)]);
    const Problem q = p.Permuted(order);
    for (int k = 0; k < 10; ++k) {
      const Vector x = RandomPoint(rng, p.dim(), 2.0);
      const double a = EvalObjective(p, x), b = EvalObjective(q, x);
      if (std::isinf(a)) {
        EXPECT_EQ(a, b);
      } else {
        EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::abs(a)));
      }
    }
  }
}

TEST(ModelProperty, ClippedValueMonotoneInAlpha) {
  Rng rng(7);
  for (int k = 0; k < 1000; ++k) {
    ClippedTerm t = Scalar(LossAtom::Huber(0.5 + rng.Uniform()), rng.Normal(), rng.Normal(), 1.0, 0.0);
    const Vector x = RandomPoint(rng, 1, 2.0);
    double prev = -kInf;
    for (double alpha : {0.0, 0.1, 0.5, 1.0, 3.0, kInf}) {
      t.alpha = alpha;
      const TermValue v = EvalTerm(t, x);
      EXPECT_GE(v.clipped, prev);
      EXPECT_LE(v.clipped, v.raw);
      prev = v.clipped;
    }
  }
}

TEST(ModelProperty, AtomGradientsMatchCentralDifferences) {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const double u = 20.0 * rng.Uniform() - 10.0;
    for (const LossAtom& l : {LossAtom::Square(), LossAtom::Huber(0.25 + 2.0 * rng.Uniform()),
                              LossAtom::Logistic(1), LossAtom::Logistic(-1)}) {
      if (l.kind == LossKind::kHuber && std::abs(std::abs(u) - l.delta) < 1e-4) continue;
      const double h = 1e-5;
      const double fd = (l.Value(u + h) - l.Value(u - h)) / (2.0 * h);
      const double d = l.Derivative(u);
      EXPECT_LE(std::abs(fd - d), 1e-6 * std::max(1.0, std::abs(d))) << "u = " << u;
    }
  }
}

TEST(ModelProperty, TermGradientsMatchCentralDifferences) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Problem p = RandomInstance(seed);
    Rng rng(seed + 77);
    const Vector x = RandomPoint(rng, p.dim(), 1.0);
    for (const ClippedTerm& t : p.terms()) {
      const Vector g = t.RawGradient(x);
      const Vector fd = testing::NumericGradient([&](const Vector& y) { return t.Raw(y); }, x);
      EXPECT_LE((g - fd).norm(), 1e-6 * std::max(1.0, g.norm()));
    }
  }
}

}  // namespace
}  // namespace clipopt
