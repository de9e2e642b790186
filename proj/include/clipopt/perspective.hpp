#pragma once

// Perspective machinery: closed-form perspectives of the supported functions,
// the relaxed perspective formulation
//
//   minimize  sum_i f_i^p(z_i, t_i) + (1 - t_i) alpha_i
//                   + (1/m) (f0^p(z_i, t_i) + f0^p(x - z_i, 1 - t_i))
//   over      x, z_1..z_m, 0 <= t <= 1,
//
// whose optimum lower-bounds the clipped problem, and two solvers for it: a
// primal log-barrier Newton method on the joint variable, and consensus ADMM
// where each block is one term.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clipopt/model.hpp"

namespace clipopt {

struct PerspectiveVars {
  Vector x;
  std::vector<Vector> z;
  Vector t;
};

// t * weight * loss((a^T v + b t) / t) for t > 0; weight * Recession(a^T v)
// at t = 0. Throws Error(kInvalidInput) for t < 0.
double PerspectiveEval(const LossAtom& loss, double weight, const AffineExpr& expr, const Vector& v,
                       double t);
double PerspectiveEval(const ClippedTerm& term, const Vector& v, double t);

// Perspective of the box indicator: 0 when t l <= v <= t u (with slack), else
// +inf. At t = 0 this is the recession cone of the box.
double BoxPerspective(const Vector& lower, const Vector& upper, const Vector& v, double t);

// Perspective of the whole base objective f0, box included.
double PerspectiveEval(const BaseObjective& base, const Vector& v, double t);

// Exact objective of the relaxed formulation; +inf when any perspective is
// infeasible. Throws Error(kInvalidInput) on dimension mismatch or t outside
// [0, 1].
double RelaxationObjective(const Problem& p, const PerspectiveVars& v);

// Per-term fixing used by branch-and-bound: -1 free, 0 or 1 fixed.
using TAssignment = std::vector<std::int8_t>;
inline constexpr std::int8_t kFree = -1;

struct RelaxationConfig {
  double auto_ridge = 1e-6;  // added when f0 is not superlinear; 0 disables
  double gap_tol = 1e-9;     // barrier stops once (#constraints / tau) <= gap_tol * max(1, |F|)
  double barrier_growth = 10.0;
  int max_newton = 1000;     // total Newton steps
  std::optional<Vector> x0;
};

struct AdmmConfig {
  double rho = 1.0;
  int max_iters = 2000;
  double primal_tol = 1e-5;  // max_i ||y_i - x||
  double dual_tol = 1e-5;    // rho ||x^k - x^{k-1}||
  double auto_ridge = 1e-6;
  double gap_tol = 1e-9;     // for the per-block barrier solves
};

struct BoundCertificate {
  double lower_bound = -kInf;  // +inf when the fixed assignment is infeasible
  double objective = kInf;     // relaxation objective at `solution`
  PerspectiveVars solution;
  bool feasible = true;
  bool converged = true;
  double auto_ridge = 0.0;     // ridge that was added to make f0 superlinear
  int iterations = 0;          // Newton steps (direct) or ADMM iterations
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double wall_time = 0.0;

  double GapVs(double heuristic_value) const { return heuristic_value - lower_bound; }
};

// Direct barrier solve. `fixed` is empty (nothing fixed) or has one entry per
// term. Terms with alpha = +inf are always treated as t_i = 1.
BoundCertificate SolveRelaxation(const Problem& p, std::span<const std::int8_t> fixed = {},
                                 const RelaxationConfig& cfg = {});

BoundCertificate SolveRelaxationAdmm(const Problem& p, const AdmmConfig& cfg = {});

}  // namespace clipopt
