#pragma once

// Inner convex engine: minimizes the smooth part of
//
//   L(x, lambda) = f0(x) + sum_i lambda_i f_i(x) + (1 - lambda_i) alpha_i
//
// (optionally plus a linear term) over the box of f0, by projected gradient
// with Armijo backtracking and restarted Nesterov extrapolation.

#include <span>

#include "clipopt/model.hpp"

namespace clipopt {

// Values in [0, 1], one per clipped term.
class WeightVector {
 public:
  WeightVector() = default;
  // Throws Error(kInvalidInput) if any entry is outside [0, 1] or NaN.
  explicit WeightVector(Vector values);
  static WeightVector Constant(int m, double value) {
    return WeightVector(Vector::Constant(m, value));
  }

  const Vector& values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }
  bool operator==(const WeightVector& other) const { return values_ == other.values_; }

 private:
  Vector values_;
};

struct InnerConfig {
  double grad_tol = 1e-8;
  int max_iters = 5000;
  double backtrack = 0.5;   // step shrink factor, in (0, 1)
  double armijo = 1e-4;     // sufficient decrease constant, in (0, 1)
  bool accelerate = true;
};

struct InnerResult {
  Vector x;
  double value = kInf;      // objective incl. constants at x
  double pg_norm = kInf;    // || x - P(x - grad) ||
  int iterations = 0;
  bool converged = false;
};

// Smooth objective  c_base * f0_smooth(x) + sum_i w_i f_i(x) + g^T x + const.
// Terms with zero weight are skipped entirely.
class SmoothObjective {
 public:
  SmoothObjective(const Problem& p, std::span<const double> term_weights);

  // L(., lambda): term weights lambda and constant sum (1 - lambda_i) alpha_i.
  static SmoothObjective Weighted(const Problem& p, const WeightVector& lambda);

  void AddLinear(const Vector& g, double constant);

  double Value(const Vector& x) const;
  double ValueGradient(const Vector& x, Vector& grad) const;
  // Upper estimate of the largest Hessian eigenvalue (power iteration on the
  // curvature-bound matrix).
  double CurvatureEstimate() const;
  // True when the objective does not depend on x.
  bool IsConstant() const;

  const Problem& problem() const { return *problem_; }

 private:
  const Problem* problem_;
  std::vector<double> weights_;
  Vector linear_;
  double constant_ = 0.0;
  bool has_linear_ = false;
};

Vector ProjectBox(const Vector& x, const Vector& lower, const Vector& upper);

// || x - P(x - grad) ||_2, the stationarity measure for box-constrained problems.
double ProjectedGradientNorm(const Vector& x, const Vector& grad, const Vector& lower,
                             const Vector& upper);

// Value and gradient of the smooth part of L(x, lambda) (box excluded).
double SmoothValueGrad(const Problem& p, const WeightVector& lambda, const Vector& x, Vector& grad);

// Minimizes `obj` over the problem's box starting from the projection of x0.
// Throws Error(kNumerical) if a non-finite value shows up.
InnerResult MinimizeSmooth(const SmoothObjective& obj, const Vector& x0, const InnerConfig& cfg);

InnerResult WeightedSubproblem(const Problem& p, const WeightVector& lambda, const Vector& x0,
                               const InnerConfig& cfg = {});

}  // namespace clipopt
