#pragma once

// Seeded instance generators for the standard experiments (1-D clipped
// regression, clipped logistic regression, lane changing) and the subset-sum
// gadget.
//
// Random streams: one std::mt19937_64 seeded with `seed` per instance.
//   Uniform()  = (next() >> 11) * 2^-53, in [0, 1)
//   Normal()   = sqrt(-2 ln(1 - U1)) * cos(2 pi U2), two fresh uniforms per draw
//   Sample(n, k) = first k entries of a partial Fisher-Yates shuffle of 0..n-1,
//                  position i swapped with i + floor(U * (n - i))
// The draw order of each generator is listed next to it.

#include <cstdint>
#include <random>
#include <vector>

#include "clipopt/model.hpp"

namespace clipopt {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform();
  double Normal();
  // Uniform integer in [0, n).
  int Below(int n);
  std::vector<int> Sample(int n, int k);

 private:
  std::mt19937_64 engine_;
};

// Draw order: x_1..x_N ~ N(0,1); z_1..z_N ~ N(0,1); Sample(N, outliers).
// y_i = x_i + 0.1 z_i, sign flipped for the sampled points. Terms are
// min{(x_i theta - y_i)^2, alpha} with ridge 0.2 * theta^2; alpha = +inf gives
// plain ridge least squares.
struct RegressionData {
  Problem problem;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<int> flipped;
};

RegressionData GenRegression(std::uint64_t seed, int n_points = 20, int outliers = 5, double alpha = 0.5,
                             double ridge = 0.2);

// Draw order, per point 1..1000: label (U < 1/2 ? +1 : -1), then 5 normals;
// features = label * 0.5 * 1 + N(0, I). Then Sample(1000, 1000) shuffles the
// points (first 100 train, rest test), then Sample(100, 20) picks the training
// labels to flip. Variables (theta_1..theta_5, b); terms
//   weight * min{log(1 + exp(-y_i (x_i^T theta + b))), alpha}
// encoded with clip level weight * alpha, plus 0.1 ||theta||^2 (b is not
// regularized).
struct LogisticOptions {
  int n_points = 1000;
  int n_train = 100;
  int n_flip = 20;
  int dim = 5;
  double separation = 0.5;
  double ridge = 0.1;
  bool per_train_weight = false;  // weight 1/n_train instead of 1/n_points
};

struct LogisticData {
  Problem problem;
  Eigen::MatrixXd train_x;  // one row per point
  Vector train_y;
  Eigen::MatrixXd test_x;
  Vector test_y;
  std::vector<int> flipped;  // training indices whose labels were flipped
  double weight = 0.0;
  double alpha = kInf;       // unscaled clip level
};

LogisticData GenLogistic(std::uint64_t seed, double alpha, const LogisticOptions& opts = {});

// Fraction of rows with sign(x^T theta + b) == y (sign(0) = +1).
double Accuracy(const Vector& theta_b, const Eigen::MatrixXd& x, const Vector& y);

// Training points whose unclipped loss is at least alpha.
std::vector<int> DetectedOutliers(const LogisticData& data, const Vector& theta_b);

struct Obstacle {
  int t_begin = 0;
  int t_end = 0;  // inclusive
  double x_min = -kInf;
  double x_max = kInf;
};

// Obstacle occupying the upper lane (forces x <= 0) or the lower lane (x >= 0).
Obstacle UpperLaneObstacle(int t_begin, int t_end);
Obstacle LowerLaneObstacle(int t_begin, int t_end);
std::vector<Obstacle> DefaultObstacles();

struct LaneOptions {
  int horizon = 100;
  double rho1 = 10.0;
  double rho2 = 1.0;
  double rho3 = 0.1;
  double x_start = 1.0;
  double x_end = -1.0;
  std::vector<Obstacle> obstacles = DefaultObstacles();
};

// Variables x_0..x_T; terms min{(x_t - 1)^2, 1}, min{(x_t + 1)^2, 1} for each
// t (interleaved); comfort rows rho_k ||D^k x||^2 as quad terms; x_0 and x_T
// pinned. Throws Error(kInvalidInput) for an empty or inconsistent obstacle
// box.
Problem GenLaneChange(const LaneOptions& opts = {});

// (a^T x)^2 + sum_i min{x_i^2, 1/4} + min{(x_i - 1)^2, 1/4}
//   + 1e4 * max(1 - 1^T x, 0)^2, with offset -n/4.
struct SubsetSumInstance {
  Problem problem;
  double offset = 0.0;
};

inline constexpr double kSubsetSumPenalty = 1e4;

SubsetSumInstance GenSubsetSum(const std::vector<long long>& a);

}  // namespace clipopt
