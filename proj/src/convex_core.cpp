#include "clipopt/convex_core.hpp"

#include <cmath>

namespace clipopt {

WeightVector::WeightVector(Vector values) : values_(std::move(values)) {
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidInput,
                  "weight " + std::to_string(i) + " = " + std::to_string(v) + " is outside [0, 1]");
    }
  }
}

SmoothObjective::SmoothObjective(const Problem& p, std::span<const double> term_weights)
    : problem_(&p), weights_(term_weights.begin(), term_weights.end()) {
  if (static_cast<int>(weights_.size()) != p.num_terms()) {
    throw Error(ErrorCode::kInvalidInput, "one weight per clipped term is required");
  }
}

SmoothObjective SmoothObjective::Weighted(const Problem& p, const WeightVector& lambda) {
  if (lambda.size() != p.num_terms()) {
    throw Error(ErrorCode::kInvalidInput, "lambda must have one entry per clipped term");
  }
  const Vector& l = lambda.values();
  SmoothObjective obj(p, std::span<const double>(l.data(), static_cast<std::size_t>(l.size())));
  double constant = 0.0;
  for (int i = 0; i < p.num_terms(); ++i) {
    if (l[i] < 1.0) {
      if (!p.term(i).Clippable()) {
        throw Error(ErrorCode::kInvalidInput,
                    "lambda < 1 on term " + std::to_string(i) + " whose clip level is +inf");
      }
      constant += (1.0 - l[i]) * p.term(i).alpha;
    }
  }
  obj.constant_ = constant;
  return obj;
}

void SmoothObjective::AddLinear(const Vector& g, double constant) {
  if (g.size() != problem_->dim()) throw Error(ErrorCode::kInvalidInput, "linear term has wrong length");
  if (!has_linear_) {
    linear_ = Vector::Zero(problem_->dim());
    has_linear_ = true;
  }
  linear_ += g;
  constant_ += constant;
}

double SmoothObjective::Value(const Vector& x) const {
  double v = constant_;
  for (const SparseAtom& a : problem_->base_atoms()) v += a.Value(x);
  const auto& atoms = problem_->term_atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (weights_[i] != 0.0) v += weights_[i] * atoms[i].Value(x);
  }
  if (has_linear_) v += linear_.dot(x);
  return v;
}

double SmoothObjective::ValueGradient(const Vector& x, Vector& grad) const {
  grad.setZero(x.size());
  double v = constant_;
  for (const SparseAtom& a : problem_->base_atoms()) v += a.AccumulateGradient(x, 1.0, grad);
  const auto& atoms = problem_->term_atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (weights_[i] != 0.0) v += atoms[i].AccumulateGradient(x, weights_[i], grad);
  }
  if (has_linear_) {
    v += linear_.dot(x);
    grad += linear_;
  }
  return v;
}

bool SmoothObjective::IsConstant() const {
  if (has_linear_ && linear_.squaredNorm() > 0.0) return false;
  for (const SparseAtom& a : problem_->base_atoms()) {
    if (!a.idx.empty()) return false;
  }
  const auto& atoms = problem_->term_atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (weights_[i] != 0.0 && !atoms[i].idx.empty()) return false;
  }
  return true;
}

double SmoothObjective::CurvatureEstimate() const {
  const int n = problem_->dim();
  auto apply = [&](const Vector& v) {
    Vector out = Vector::Zero(n);
    auto add = [&](const SparseAtom& a, double scale) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.idx.size(); ++k) s += a.coef[k] * v[a.idx[k]];
      s *= scale * a.weight * a.loss.CurvatureBound();
      for (std::size_t k = 0; k < a.idx.size(); ++k) out[a.idx[k]] += s * a.coef[k];
    };
    for (const SparseAtom& a : problem_->base_atoms()) add(a, 1.0);
    const auto& atoms = problem_->term_atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (weights_[i] != 0.0) add(atoms[i], weights_[i]);
    }
    return out;
  };
  Vector v = Vector::Ones(n) / std::sqrt(static_cast<double>(n));
  double est = 0.0;
  for (int it = 0; it < 30; ++it) {
    Vector w = apply(v);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    est = norm;
    v = w / norm;
  }
  return est;
}

Vector ProjectBox(const Vector& x, const Vector& lower, const Vector& upper) {
  return x.cwiseMax(lower).cwiseMin(upper);
}

double ProjectedGradientNorm(const Vector& x, const Vector& grad, const Vector& lower,
                             const Vector& upper) {
  return (x - ProjectBox(x - grad, lower, upper)).norm();
}

double SmoothValueGrad(const Problem& p, const WeightVector& lambda, const Vector& x, Vector& grad) {
  CheckDimension(p, x, "x");
  return SmoothObjective::Weighted(p, lambda).ValueGradient(x, grad);
}

namespace {

double Roundoff(double f) { return 1e-12 * std::max(1.0, std::abs(f)); }

void CheckFinite(double v, const char* where) {
  if (!std::isfinite(v)) throw Error(ErrorCode::kNumerical, std::string("non-finite objective in ") + where);
}

}  // namespace

InnerResult MinimizeSmooth(const SmoothObjective& obj, const Vector& x0, const InnerConfig& cfg) {
  const Problem& p = obj.problem();
  CheckDimension(p, x0, "x0");
  const Vector& lo = p.base().lower;
  const Vector& hi = p.base().upper;

  InnerResult res;
  Vector x = ProjectBox(x0, lo, hi);
  Vector gx;
  double fx = obj.ValueGradient(x, gx);
  CheckFinite(fx, "inner solve");
  res.x = x;
  res.value = fx;
  res.pg_norm = ProjectedGradientNorm(x, gx, lo, hi);
  if (obj.IsConstant() || res.pg_norm <= cfg.grad_tol) {
    res.converged = true;
    return res;
  }

  double step = 1.0 / std::max(obj.CurvatureEstimate(), 1e-12);
  Vector x_prev = x;
  Vector y = x, gy = gx, xn, gn;
  double fy = fx;
  double theta = 1.0;
  bool y_is_x = true;

  for (int it = 1; it <= cfg.max_iters; ++it) {
    res.iterations = it;
    double s = step * 1.5;
    double fn = kInf;
    bool accepted = false;
    for (int bt = 0; bt < 80; ++bt) {
      xn = ProjectBox(y - s * gy, lo, hi);
      const Vector d = xn - y;
      const double slope = gy.dot(d);
      fn = obj.ValueGradient(xn, gn);
      if (!std::isfinite(fn)) {
        s *= cfg.backtrack;
        continue;
      }
      const double dd = d.squaredNorm();
      const bool value_ok = fn <= fy + slope + dd / (2.0 * s) && fn <= fy + cfg.armijo * slope;
      // Once value differences drop to roundoff, judge the step by the
      // local curvature along d instead.
      const bool curvature_ok = std::abs(fn - fy) <= Roundoff(fy) && (gn - gy).dot(d) <= dd / s;
      if (value_ok || curvature_ok) {
        accepted = true;
        break;
      }
      s *= cfg.backtrack;
    }
    if (!accepted || fn > fx + Roundoff(fx)) {
      if (y_is_x) break;  // no further progress possible from x itself
      // Extrapolated point was worse than x: drop momentum and retry from x.
      y = x;
      gy = gx;
      fy = fx;
      theta = 1.0;
      y_is_x = true;
      continue;
    }
    step = s;
    x_prev = x;
    x = xn;
    gx = gn;
    fx = fn;
    CheckFinite(fx, "inner solve");
    res.pg_norm = ProjectedGradientNorm(x, gx, lo, hi);
    if (res.pg_norm <= cfg.grad_tol) {
      res.converged = true;
      break;
    }
    if (cfg.accelerate) {
      const double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
      const Vector dir = x - x_prev;
      if (gx.dot(dir) > 0.0) {
        theta = 1.0;  // gradient-based restart
        y = x;
        gy = gx;
        fy = fx;
        y_is_x = true;
      } else {
        y = ProjectBox(x + ((theta - 1.0) / theta_next) * dir, lo, hi);
        theta = theta_next;
        fy = obj.ValueGradient(y, gy);
        y_is_x = false;
        if (!std::isfinite(fy)) {
          y = x;
          gy = gx;
          fy = fx;
          theta = 1.0;
          y_is_x = true;
        }
      }
    } else {
      y = x;
      gy = gx;
      fy = fx;
    }
  }
  res.x = x;
  res.value = fx;
  return res;
}

InnerResult WeightedSubproblem(const Problem& p, const WeightVector& lambda, const Vector& x0,
                               const InnerConfig& cfg) {
  return MinimizeSmooth(SmoothObjective::Weighted(p, lambda), x0, cfg);
}

}  // namespace clipopt
