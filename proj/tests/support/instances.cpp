#include "instances.hpp"

#include <algorithm>
#include <cmath>

namespace clipopt::testing {

Vector RandomPoint(Rng& rng, int n, double scale) {
  Vector x(n);
  for (int j = 0; j < n; ++j) x[j] = scale * rng.Normal();
  return x;
}

Problem RandomInstance(std::uint64_t seed, const InstanceShape& shape) {
  Rng rng(seed * 7919 + 17);
  const int n = shape.min_n + rng.Below(shape.max_n - shape.min_n + 1);
  const int m = shape.min_m + rng.Below(shape.max_m - shape.min_m + 1);
  BaseObjective base;
  if (rng.Uniform() < 0.75) {
    base.ridge = 0.05 + 0.45 * rng.Uniform();
  } else {
    base.lower = Vector::Constant(n, -3.0);
    base.upper = Vector::Constant(n, 3.0);
  }
  if (rng.Uniform() < 0.5) {
    Vector a = RandomPoint(rng, n, 1.0);
    base.quad_terms.push_back({0.1 + rng.Uniform(), {a, rng.Normal()}});
  }
  std::vector<ClippedTerm> terms;
  for (int i = 0; i < m; ++i) {
    ClippedTerm t;
    const double u = rng.Uniform();
    Vector a = RandomPoint(rng, n, 1.0);
    t.expr = {a, 2.0 * rng.Normal()};
    if (u < 0.5) {
      t.loss = LossAtom::Square();
    } else if (u < 0.75) {
      t.loss = LossAtom::Huber(0.25 + rng.Uniform());
    } else {
      t.loss = LossAtom::Logistic(rng.Uniform() < 0.5 ? 1.0 : -1.0);
    }
    t.weight = 0.5 + 1.5 * rng.Uniform();
    t.alpha = rng.Uniform() < 0.1 ? kInf : 0.2 + 1.8 * rng.Uniform();
    terms.push_back(t);
  }
  return Problem(n, std::move(base), std::move(terms));
}

Problem RandomSquareInstance(std::uint64_t seed, int n, int m) {
  Rng rng(seed * 104729 + 3);
  BaseObjective base;
  base.ridge = 0.05 + 0.5 * rng.Uniform();
  std::vector<ClippedTerm> terms;
  for (int i = 0; i < m; ++i) {
    ClippedTerm t;
    t.loss = LossAtom::Square();
    t.expr = {RandomPoint(rng, n, 1.0), 2.0 * rng.Normal()};
    t.weight = 0.5 + rng.Uniform();
    t.alpha = 0.1 + 2.0 * rng.Uniform();
    terms.push_back(t);
  }
  return Problem(n, std::move(base), std::move(terms));
}

double GridMinimum1D(const Problem& p, double lo, double hi, int cells) {
  auto f = [&](double v) { return EvalObjective(p, Vector::Constant(1, v)); };
  const double h = (hi - lo) / cells;
  int best = 0;
  double best_v = f(lo);
  for (int k = 1; k <= cells; ++k) {
    const double v = f(lo + k * h);
    if (v < best_v) {
      best_v = v;
      best = k;
    }
  }
  double a = lo + std::max(0, best - 1) * h;
  double b = lo + std::min(cells, best + 1) * h;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 100; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::min(best_v, f(0.5 * (a + b)));
}

}  // namespace clipopt::testing
