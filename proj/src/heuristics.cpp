#include "clipopt/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace clipopt {

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Vector StartPoint(const Problem& p, const std::optional<Vector>& x0) {
  Vector x = x0 ? *x0 : Vector::Zero(p.dim());
  CheckDimension(p, x, "x0");
  if (!x.allFinite()) throw Error(ErrorCode::kInvalidInput, "x0 must be finite");
  return ProjectBox(x, p.base().lower, p.base().upper);
}

}  // namespace

WeightVector LambdaExactUpdate(const Problem& p, const Vector& x) {
  CheckDimension(p, x, "x");
  Vector l(p.num_terms());
  for (int i = 0; i < p.num_terms(); ++i) {
    l[i] = p.term(i).Raw(x) <= p.term(i).alpha ? 1.0 : 0.0;
  }
  return WeightVector(std::move(l));
}

WeightVector LambdaSignStep(const WeightVector& lambda, const Vector& g, double beta) {
  if (g.size() != lambda.size()) throw Error(ErrorCode::kInvalidInput, "g must match lambda in length");
  if (!(beta > 0.0)) throw Error(ErrorCode::kInvalidInput, "beta must be positive");
  Vector l = lambda.values();
  for (Eigen::Index i = 0; i < l.size(); ++i) {
    const double sign = g[i] >= 0.0 ? 1.0 : -1.0;
    l[i] = std::clamp(l[i] - beta * sign, 0.0, 1.0);
  }
  return WeightVector(std::move(l));
}

SolveReport SolveAltMin(const Problem& p, const AltMinConfig& cfg) {
  const auto start = Clock::now();
  if (!(cfg.beta > 0.0)) throw Error(ErrorCode::kInvalidInput, "beta must be positive");
  if (!(cfg.eps > 0.0)) throw Error(ErrorCode::kInvalidInput, "eps must be positive");
  if (cfg.n_iter < 1) throw Error(ErrorCode::kInvalidInput, "n_iter must be at least 1");
  const int m = p.num_terms();

  Vector lambda = cfg.lambda0 ? cfg.lambda0->values() : Vector::Constant(m, 0.5);
  if (lambda.size() != m) throw Error(ErrorCode::kInvalidInput, "lambda0 must have one entry per term");
  for (int i = 0; i < m; ++i) {
    if (!p.term(i).Clippable()) lambda[i] = 1.0;
  }
  WeightVector lam(lambda);
  Vector x = StartPoint(p, cfg.x0);

  SolveReport rep;
  for (int k = 1; k <= cfg.n_iter; ++k) {
    const InnerResult inner = WeightedSubproblem(p, lam, x, cfg.inner);
    rep.inner_converged = rep.inner_converged && inner.converged;
    x = inner.x;

    WeightVector next;
    if (cfg.mode == AltMinMode::kExact) {
      next = LambdaExactUpdate(p, x);
    } else {
      Vector g(m);
      for (int i = 0; i < m; ++i) g[i] = p.term(i).Raw(x) - p.term(i).alpha;
      next = LambdaSignStep(lam, g, cfg.beta);
    }
    const double change = (next.values() - lam.values()).lpNorm<1>();
    lam = std::move(next);

    rep.objective_trace.push_back(SmoothObjective::Weighted(p, lam).Value(x));
    const double truth = EvalObjective(p, x);
    rep.true_objective_trace.push_back(truth);
    rep.lambda_trace.push_back(lam.values());
    if (rep.x_best.size() == 0 || truth < rep.objective_value) {
      rep.x_best = x;
      rep.objective_value = truth;
    }
    rep.iterations = k;
    if (change <= cfg.eps) {
      rep.termination = Termination::kToleranceMet;
      break;
    }
  }
  rep.wall_time = Seconds(start);
  return rep;
}

CcpLinearization CcpLinearize(const Problem& p, const Vector& x) {
  CheckDimension(p, x, "x");
  CcpLinearization lin;
  lin.h = Vector::Zero(p.num_terms());
  lin.s.reserve(static_cast<std::size_t>(p.num_terms()));
  for (int i = 0; i < p.num_terms(); ++i) {
    const ClippedTerm& t = p.term(i);
    const double f = t.Raw(x);
    if (f > t.alpha) {
      lin.s.push_back(t.RawGradient(x));
      lin.h[i] = f - t.alpha;
    } else {
      lin.s.push_back(Vector::Zero(p.dim()));
    }
  }
  return lin;
}

namespace {

SmoothObjective Majorizer(const Problem& p, const Vector& x) {
  const CcpLinearization lin = CcpLinearize(p, x);
  SmoothObjective obj = SmoothObjective::Weighted(p, WeightVector::Constant(p.num_terms(), 1.0));
  Vector g = Vector::Zero(p.dim());
  double c = 0.0;
  for (int i = 0; i < p.num_terms(); ++i) {
    g -= lin.s[static_cast<std::size_t>(i)];
    c += lin.s[static_cast<std::size_t>(i)].dot(x) - lin.h[i];
  }
  obj.AddLinear(g, c);
  return obj;
}

}  // namespace

double CcpMajorizer(const Problem& p, const Vector& x, const Vector& y) {
  CheckDimension(p, y, "y");
  if (!p.base().InBox(y)) return kInf;
  return Majorizer(p, x).Value(y);
}

SolveReport SolveCcp(const Problem& p, const CcpConfig& cfg) {
  const auto start = Clock::now();
  if (cfg.max_iters < 1) throw Error(ErrorCode::kInvalidInput, "max_iters must be at least 1");
  if (!(cfg.tol >= 0.0)) throw Error(ErrorCode::kInvalidInput, "tol must be nonnegative");
  Vector x = StartPoint(p, cfg.x0);
  double prev = EvalObjective(p, x);

  SolveReport rep;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    const InnerResult inner = MinimizeSmooth(Majorizer(p, x), x, cfg.inner);
    rep.inner_converged = rep.inner_converged && inner.converged;
    x = inner.x;
    const double truth = EvalObjective(p, x);
    rep.objective_trace.push_back(inner.value);
    rep.true_objective_trace.push_back(truth);
    rep.lambda_trace.push_back(LambdaExactUpdate(p, x).values());
    if (rep.x_best.size() == 0 || truth < rep.objective_value) {
      rep.x_best = x;
      rep.objective_value = truth;
    }
    rep.iterations = k;
    if (std::abs(prev - truth) <= cfg.tol) {
      rep.termination = Termination::kToleranceMet;
      break;
    }
    prev = truth;
  }
  rep.wall_time = Seconds(start);
  return rep;
}

ClippedTerm MinimalConvexExtension(const ClippedTerm& term) {
  if (term.loss.kind != LossKind::kSquare) {
    throw Error(ErrorCode::kUnsupported, "minimal convex extension is only available for square losses");
  }
  if (!term.Clippable()) return term;
  if (!(term.alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "minimal convex extension needs alpha > 0");
  }
  ClippedTerm out = term;
  out.loss = LossAtom::Huber(std::sqrt(term.alpha / term.weight));
  return out;
}

Problem MinimalConvexExtension(const Problem& p) {
  std::vector<ClippedTerm> terms;
  terms.reserve(p.terms().size());
  for (const ClippedTerm& t : p.terms()) terms.push_back(MinimalConvexExtension(t));
  return Problem(p.dim(), p.base(), std::move(terms));
}

}  // namespace clipopt
