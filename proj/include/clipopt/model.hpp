#pragma once

// Problem data model for
//
//   minimize  f0(x) + sum_i min{ f_i(x), alpha_i }
//
// where f0 is a smooth convex quadratic-type base objective plus a box
// indicator, and every f_i is a weighted scalar loss atom applied to an affine
// function of x.

#include <limits>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "clipopt/error.hpp"

namespace clipopt {

using Vector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Box membership slack used by every feasibility test in the library.
inline constexpr double kBoxTolerance = 1e-9;

enum class LossKind {
  kSquare,       // u^2
  kHuber,        // u^2 inside [-delta, delta], delta (2|u| - delta) outside
  kLogistic,     // log(1 + exp(-label u))
  kHingeSquare,  // max(u, 0)^2; base objective only (halfspace penalties)
};

// A scalar convex C^1 loss. New atoms need Value/Derivative/SecondDerivative,
// a curvature bound for step-size initialization, and the recession function
// used by the t = 0 branch of the perspective.
struct LossAtom {
  LossKind kind = LossKind::kSquare;
  double delta = 1.0;  // huber only
  double label = 1.0;  // logistic only, +1 or -1

  static LossAtom Square() { return {LossKind::kSquare, 1.0, 1.0}; }
  static LossAtom Huber(double delta) { return {LossKind::kHuber, delta, 1.0}; }
  static LossAtom Logistic(double label) { return {LossKind::kLogistic, 1.0, label}; }
  static LossAtom HingeSquare() { return {LossKind::kHingeSquare, 1.0, 1.0}; }

  double Value(double u) const;
  double Derivative(double u) const;
  // Second derivative where it exists; the one-sided value on the right at
  // kinks (huber at |u| = delta, hinge at 0).
  double SecondDerivative(double u) const;
  // sup over u of SecondDerivative(u).
  double CurvatureBound() const;
  // lim_{g -> 0+} g * Value(u / g); +inf where the atom grows superlinearly.
  double Recession(double u) const;

  bool operator==(const LossAtom& other) const;
};

// a^T x + b.
struct AffineExpr {
  Vector a;
  double b = 0.0;

  double Eval(const Vector& x) const { return a.dot(x) + b; }
  bool operator==(const AffineExpr& other) const { return a == other.a && b == other.b; }
};

struct TermValue {
  double raw = 0.0;
  double clipped = 0.0;
};

// min{ weight * loss(expr(x)), alpha }. alpha = +inf means the term is never
// clipped.
struct ClippedTerm {
  LossAtom loss;
  AffineExpr expr;
  double weight = 1.0;
  double alpha = kInf;

  double Raw(const Vector& x) const { return weight * loss.Value(expr.Eval(x)); }
  // Gradient of the unclipped function.
  Vector RawGradient(const Vector& x) const {
    return (weight * loss.Derivative(expr.Eval(x))) * expr.a;
  }
  bool Clippable() const { return alpha < kInf; }
  bool operator==(const ClippedTerm& other) const = default;
};

// c * expr(x)^2.
struct QuadTerm {
  double c = 1.0;
  AffineExpr expr;
  bool operator==(const QuadTerm& other) const = default;
};

// c * max(expr(x), 0)^2. Encodes halfspace constraints as smooth exact-ish
// penalties (expr(x) <= 0 is the feasible side).
struct HingeTerm {
  double c = 1.0;
  AffineExpr expr;
  bool operator==(const HingeTerm& other) const = default;
};

// f0(x) = sum_k c_k expr_k(x)^2 + sum_k c_k max(expr_k(x), 0)^2 + ridge ||x||^2
//         + indicator(lower <= x <= upper).
struct BaseObjective {
  std::vector<QuadTerm> quad_terms;
  std::vector<HingeTerm> hinge_terms;
  double ridge = 0.0;
  Vector lower;  // entries may be -inf
  Vector upper;  // entries may be +inf; lower_j == upper_j pins coordinate j

  // Smooth part only (no box).
  double SmoothValue(const Vector& x) const;
  bool InBox(const Vector& x, double tol = kBoxTolerance) const;
  bool BoxIsCompact() const;
  // Sufficient condition used by the perspective machinery.
  bool IsSuperlinear() const { return ridge > 0.0 || BoxIsCompact(); }
  bool operator==(const BaseObjective& other) const;
};

// Sparse view of one scalar atom: weight * loss(coef^T x[idx] + b). Every
// smooth piece of a Problem (quad rows, hinge rows, ridge coordinates, clipped
// terms) is compiled into this form for the solvers.
struct SparseAtom {
  LossAtom loss;
  double weight = 1.0;
  std::vector<int> idx;
  std::vector<double> coef;
  double b = 0.0;

  double Argument(const Vector& x) const {
    double s = b;
    for (std::size_t k = 0; k < idx.size(); ++k) s += coef[k] * x[idx[k]];
    return s;
  }
  double Value(const Vector& x) const { return weight * loss.Value(Argument(x)); }
  // Adds scale * gradient into grad and returns scale * value.
  double AccumulateGradient(const Vector& x, double scale, Vector& grad) const;
};

class Problem {
 public:
  // Validates and compiles. Throws Error(kInvalidInput) on any violation.
  Problem(int n, BaseObjective base, std::vector<ClippedTerm> terms);

  int dim() const { return n_; }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const BaseObjective& base() const { return base_; }
  const std::vector<ClippedTerm>& terms() const { return terms_; }
  const ClippedTerm& term(int i) const { return terms_[static_cast<std::size_t>(i)]; }

  // Compiled smooth pieces of f0: quad rows, hinge rows, then one square atom
  // per coordinate carrying the ridge (omitted when ridge == 0).
  const std::vector<SparseAtom>& base_atoms() const { return base_atoms_; }
  // Compiled f_i, one per term, same order as terms().
  const std::vector<SparseAtom>& term_atoms() const { return term_atoms_; }

  // Same problem with `extra` added to the ridge.
  Problem WithExtraRidge(double extra) const;
  // Same problem with terms permuted: result.term(k) == term(order[k]).
  Problem Permuted(std::span<const int> order) const;

  bool operator==(const Problem& other) const {
    return n_ == other.n_ && base_ == other.base_ && terms_ == other.terms_;
  }

 private:
  void Validate() const;
  void Compile();

  int n_ = 0;
  BaseObjective base_;
  std::vector<ClippedTerm> terms_;
  std::vector<SparseAtom> base_atoms_;
  std::vector<SparseAtom> term_atoms_;
};

// Result of a heuristic or exact solve.
enum class Termination {
  kToleranceMet,
  kMaxIters,
  kNodeLimit,
  kProvenOptimal,
};

const char* ToString(Termination t);

struct SolveReport {
  Vector x_best;
  double objective_value = kInf;          // true clipped objective at x_best
  std::vector<double> objective_trace;    // method-specific surrogate per iteration
  std::vector<double> true_objective_trace;  // clipped objective of each iterate
  std::vector<Vector> lambda_trace;       // heuristics only; one row per iteration
  int iterations = 0;
  Termination termination = Termination::kMaxIters;
  double wall_time = 0.0;                 // seconds
  bool inner_converged = true;            // every inner solve met its tolerance
  bool has_lower_bound = false;
  double lower_bound = -kInf;
};

void CheckDimension(const Problem& p, const Vector& x, const char* what);

TermValue EvalTerm(const ClippedTerm& term, const Vector& x);

// f0(x) + sum_i min{f_i(x), alpha_i}; +inf outside the box (slack kBoxTolerance).
double EvalObjective(const Problem& p, const Vector& x);

// Builds a length-n vector with a single nonzero; handy for generators/tests.
Vector UnitVector(int n, int j, double value = 1.0);

}  // namespace clipopt
