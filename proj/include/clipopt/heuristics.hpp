#pragma once

// Local heuristics for clipped problems: alternating minimization on the
// bi-convex form L(x, lambda), the convex-concave procedure, and the minimal
// convex extension of clipped squares.

#include <optional>
#include <vector>

#include "clipopt/convex_core.hpp"

namespace clipopt {

enum class AltMinMode { kInexact, kExact };

struct AltMinConfig {
  std::optional<WeightVector> lambda0;  // default (1/2) * 1
  std::optional<Vector> x0;             // warm start for the first inner solve; default 0
  double beta = 0.1;
  double eps = 1e-6;
  int n_iter = 100;
  AltMinMode mode = AltMinMode::kInexact;
  InnerConfig inner;
};

struct CcpConfig {
  std::optional<Vector> x0;  // default 0 projected onto the box
  int max_iters = 100;
  double tol = 1e-8;         // stop once the true objective changes by at most this
  InnerConfig inner;
};

// lambda_i = 1 if f_i(x) <= alpha_i, else 0.
WeightVector LambdaExactUpdate(const Problem& p, const Vector& x);

// clip(lambda_i - beta * sign(g_i), 0, 1) with sign(0) = +1.
WeightVector LambdaSignStep(const WeightVector& lambda, const Vector& g, double beta);

// Inexact (or exact) alternating minimization. Terms with alpha = +inf keep
// lambda_i = 1 throughout, whatever lambda0 says.
//   objective_trace[k]      = L(x^k, lambda^k)
//   true_objective_trace[k] = clipped objective at x^k
//   lambda_trace[k]         = lambda^k
SolveReport SolveAltMin(const Problem& p, const AltMinConfig& cfg = {});

struct CcpLinearization {
  std::vector<Vector> s;  // gradient of f_i where f_i > alpha_i, else 0
  Vector h;               // max(f_i - alpha_i, 0)
};

CcpLinearization CcpLinearize(const Problem& p, const Vector& x);

// Value at y of the convex majorizer built at x:
//   f0(y) + sum_i f_i(y) - sum_i (h_i(x) + s_i^T (y - x)).
double CcpMajorizer(const Problem& p, const Vector& x, const Vector& y);

//   objective_trace[k]      = majorizer minimum at iteration k
//   true_objective_trace[k] = clipped objective at x^k
//   lambda_trace[k]         = LambdaExactUpdate(p, x^k)
SolveReport SolveCcp(const Problem& p, const CcpConfig& cfg = {});

// Square term -> huber term with threshold sqrt(alpha / weight); equal to f on
// {f <= alpha}, linear outside. alpha = +inf returns the term unchanged.
// Throws Error(kUnsupported) for non-square losses and Error(kInvalidInput)
// for alpha <= 0.
ClippedTerm MinimalConvexExtension(const ClippedTerm& term);

// Applies MinimalConvexExtension to every term.
Problem MinimalConvexExtension(const Problem& p);

}  // namespace clipopt
