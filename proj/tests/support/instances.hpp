#pragma once

#include <cstdint>

#include "clipopt/generators.hpp"
#include "clipopt/model.hpp"

namespace clipopt::testing {

struct InstanceShape {
  int min_n = 1;
  int max_n = 3;
  int min_m = 2;
  int max_m = 10;
};

// Mixed-atom random instance, fully determined by `seed`.
//   75%: ridge in [0.05, 0.5], else box [-3, 3]^n and no ridge
//   50%: one quad term with c in [0.1, 1.1]
//   terms: square (1/2), huber (1/4), logistic (1/4); weight in [0.5, 2];
//          alpha in [0.2, 2], or +inf with probability 0.1
Problem RandomInstance(std::uint64_t seed, const InstanceShape& shape = {});

// Random square-only instance with a ridge; every term clippable.
Problem RandomSquareInstance(std::uint64_t seed, int n, int m);

Vector RandomPoint(Rng& rng, int n, double scale);

// Central differences of a scalar function of x.
template <class F>
Vector NumericGradient(F&& f, const Vector& x, double h = 1e-6) {
  Vector g(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Vector xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    g[j] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

// Minimum of a one-dimensional problem over [lo, hi]: uniform grid, then a
// golden-section polish of the best cell.
double GridMinimum1D(const Problem& p, double lo, double hi, int cells = 200000);

}  // namespace clipopt::testing
