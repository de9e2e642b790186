#include "clipopt/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace clipopt {

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::Normal() {
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int Rng::Below(int n) {
  if (n <= 0) throw Error(ErrorCode::kInvalidInput, "Below needs n > 0");
  const int v = static_cast<int>(Uniform() * n);
  return v < n ? v : n - 1;
}

std::vector<int> Rng::Sample(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorCode::kInvalidInput, "cannot sample k of n items");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < k; ++i) {
    const int j = i + Below(n - i);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  perm.resize(static_cast<std::size_t>(k));
  return perm;
}

RegressionData GenRegression(std::uint64_t seed, int n_points, int outliers, double alpha, double ridge) {
  if (n_points < 1 || outliers < 0 || outliers > n_points) {
    throw Error(ErrorCode::kInvalidInput, "regression needs 1 <= N and 0 <= outliers <= N");
  }
  Rng rng(seed);
  RegressionData d{Problem(1, {}, {ClippedTerm{LossAtom::Square(), {Vector::Ones(1), 0.0}, 1.0, kInf}}), {}, {}, {}};
  d.x.resize(static_cast<std::size_t>(n_points));
  d.y.resize(static_cast<std::size_t>(n_points));
  for (double& v : d.x) v = rng.Normal();
  for (int i = 0; i < n_points; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    d.y[ui] = d.x[ui] + 0.1 * rng.Normal();
  }
  d.flipped = rng.Sample(n_points, outliers);
  for (int i : d.flipped) d.y[static_cast<std::size_t>(i)] = -d.y[static_cast<std::size_t>(i)];

  std::vector<ClippedTerm> terms;
  for (int i = 0; i < n_points; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    terms.push_back({LossAtom::Square(), {Vector::Constant(1, d.x[ui]), -d.y[ui]}, 1.0, alpha});
  }
  BaseObjective base;
  base.ridge = ridge;
  d.problem = Problem(1, std::move(base), std::move(terms));
  return d;
}

LogisticData GenLogistic(std::uint64_t seed, double alpha, const LogisticOptions& opts) {
  if (opts.n_points < 1 || opts.n_train < 1 || opts.n_train > opts.n_points || opts.n_flip < 0 ||
      opts.n_flip > opts.n_train || opts.dim < 1) {
    throw Error(ErrorCode::kInvalidInput, "inconsistent logistic generator options");
  }
  if (std::isnan(alpha) || alpha <= 0.0) throw Error(ErrorCode::kInvalidInput, "alpha must be positive or +inf");
  Rng rng(seed);
  const int np = opts.n_points, dim = opts.dim;
  Eigen::MatrixXd feats(np, dim);
  Vector labels(np);
  for (int i = 0; i < np; ++i) {
    labels[i] = rng.Uniform() < 0.5 ? 1.0 : -1.0;
    for (int j = 0; j < dim; ++j) feats(i, j) = labels[i] * opts.separation + rng.Normal();
  }
  const std::vector<int> order = rng.Sample(np, np);
  const std::vector<int> flips = rng.Sample(opts.n_train, opts.n_flip);

  LogisticData d{Problem(1, {}, {ClippedTerm{LossAtom::Square(), {Vector::Ones(1), 0.0}, 1.0, kInf}}),
                 {}, {}, {}, {}, flips, 0.0, alpha};
  const int nt = opts.n_train;
  d.train_x.resize(nt, dim);
  d.train_y.resize(nt);
  d.test_x.resize(np - nt, dim);
  d.test_y.resize(np - nt);
  for (int k = 0; k < np; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    if (k < nt) {
      d.train_x.row(k) = feats.row(src);
      d.train_y[k] = labels[src];
    } else {
      d.test_x.row(k - nt) = feats.row(src);
      d.test_y[k - nt] = labels[src];
    }
  }
  for (int i : flips) d.train_y[i] = -d.train_y[i];

  d.weight = 1.0 / (opts.per_train_weight ? opts.n_train : opts.n_points);
  const int n = dim + 1;
  std::vector<ClippedTerm> terms;
  for (int i = 0; i < nt; ++i) {
    Vector a(n);
    a.head(dim) = d.train_x.row(i).transpose();
    a[dim] = 1.0;
    terms.push_back({LossAtom::Logistic(d.train_y[i]), {std::move(a), 0.0}, d.weight, d.weight * alpha});
  }
  BaseObjective base;
  for (int j = 0; j < dim; ++j) base.quad_terms.push_back({opts.ridge, {UnitVector(n, j), 0.0}});
  d.problem = Problem(n, std::move(base), std::move(terms));
  return d;
}

double Accuracy(const Vector& theta_b, const Eigen::MatrixXd& x, const Vector& y) {
  const int dim = static_cast<int>(x.cols());
  if (theta_b.size() != dim + 1 || y.size() != x.rows()) {
    throw Error(ErrorCode::kInvalidInput, "accuracy: dimension mismatch");
  }
  if (x.rows() == 0) return 0.0;
  int correct = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double s = x.row(i).dot(theta_b.head(dim)) + theta_b[dim];
    const double pred = s >= 0.0 ? 1.0 : -1.0;
    correct += pred == y[i] ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(x.rows());
}

std::vector<int> DetectedOutliers(const LogisticData& data, const Vector& theta_b) {
  std::vector<int> out;
  for (int i = 0; i < data.problem.num_terms(); ++i) {
    const ClippedTerm& t = data.problem.term(i);
    if (t.Raw(theta_b) >= t.alpha) out.push_back(i);
  }
  return out;
}

Obstacle UpperLaneObstacle(int t_begin, int t_end) { return {t_begin, t_end, -kInf, 0.0}; }

Obstacle LowerLaneObstacle(int t_begin, int t_end) { return {t_begin, t_end, 0.0, kInf}; }

std::vector<Obstacle> DefaultObstacles() {
  return {UpperLaneObstacle(5, 40), LowerLaneObstacle(50, 75), UpperLaneObstacle(85, 99)};
}

Problem GenLaneChange(const LaneOptions& opts) {
  const int T = opts.horizon;
  if (T < 3) throw Error(ErrorCode::kInvalidInput, "lane horizon must be at least 3");
  if (!(opts.rho1 > 0.0 && opts.rho2 > 0.0 && opts.rho3 > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "comfort weights must be positive");
  }
  if (!std::isfinite(opts.x_start) || !std::isfinite(opts.x_end)) {
    throw Error(ErrorCode::kInvalidInput, "endpoints must be finite");
  }
  const int n = T + 1;
  BaseObjective base;
  base.lower = Vector::Constant(n, -kInf);
  base.upper = Vector::Constant(n, kInf);
  for (const Obstacle& o : opts.obstacles) {
    if (o.t_begin < 0 || o.t_end > T || o.t_begin > o.t_end || std::isnan(o.x_min) || std::isnan(o.x_max)) {
      throw Error(ErrorCode::kInvalidInput, "obstacle time range must satisfy 0 <= begin <= end <= T");
    }
    for (int t = o.t_begin; t <= o.t_end; ++t) {
      base.lower[t] = std::max(base.lower[t], o.x_min);
      base.upper[t] = std::min(base.upper[t], o.x_max);
    }
  }
  for (int t = 0; t < n; ++t) {
    if (base.lower[t] > base.upper[t]) {
      throw Error(ErrorCode::kInvalidInput, "obstacles leave no room at t = " + std::to_string(t));
    }
  }
  auto pin = [&](int t, double v) {
    if (v < base.lower[t] || v > base.upper[t]) {
      throw Error(ErrorCode::kInvalidInput, "endpoint at t = " + std::to_string(t) + " is inside an obstacle");
    }
    base.lower[t] = base.upper[t] = v;
  };
  pin(0, opts.x_start);
  pin(T, opts.x_end);

  const double stencils[3][4] = {{-1, 1, 0, 0}, {1, -2, 1, 0}, {-1, 3, -3, 1}};
  const double rho[3] = {opts.rho1, opts.rho2, opts.rho3};
  for (int order = 1; order <= 3; ++order) {
    for (int t = 0; t + order <= T; ++t) {
      Vector a = Vector::Zero(n);
      for (int k = 0; k <= order; ++k) a[t + k] = stencils[order - 1][k];
      base.quad_terms.push_back({rho[order - 1], {std::move(a), 0.0}});
    }
  }
  std::vector<ClippedTerm> terms;
  for (int t = 0; t < n; ++t) {
    terms.push_back({LossAtom::Square(), {UnitVector(n, t), -1.0}, 1.0, 1.0});
    terms.push_back({LossAtom::Square(), {UnitVector(n, t), 1.0}, 1.0, 1.0});
  }
  return Problem(n, std::move(base), std::move(terms));
}

SubsetSumInstance GenSubsetSum(const std::vector<long long>& a) {
  if (a.empty()) throw Error(ErrorCode::kInvalidInput, "subset-sum needs a nonempty list");
  const int n = static_cast<int>(a.size());
  BaseObjective base;
  Vector coef(n);
  for (int i = 0; i < n; ++i) coef[i] = static_cast<double>(a[static_cast<std::size_t>(i)]);
  base.quad_terms.push_back({1.0, {coef, 0.0}});
  base.hinge_terms.push_back({kSubsetSumPenalty, {-Vector::Ones(n), 1.0}});
  std::vector<ClippedTerm> terms;
  for (int i = 0; i < n; ++i) {
    terms.push_back({LossAtom::Square(), {UnitVector(n, i), 0.0}, 1.0, 0.25});
    terms.push_back({LossAtom::Square(), {UnitVector(n, i), -1.0}, 1.0, 0.25});
  }
  return {Problem(n, std::move(base), std::move(terms)), -0.25 * n};
}

}  // namespace clipopt
