#pragma once

// Exact solvers: enumeration of binary lambda, and branch-and-bound on the
// binary t of the perspective formulation using the relaxation as the bound.

#include <cstdint>
#include <vector>

#include "clipopt/heuristics.hpp"
#include "clipopt/perspective.hpp"

namespace clipopt {

struct ExhaustiveConfig {
  int limit = 12;  // refuse when more than `limit` terms can be clipped
  InnerConfig inner;
};

struct BnbConfig {
  double abs_gap_tol = 1e-4;
  double rel_gap_tol = 1e-4;
  std::int64_t node_limit = 1000000;
  std::size_t max_open = 100000;  // switch to depth-first above this many open nodes
  double integral_tol = 1e-6;
  RelaxationConfig relaxation;
  AltMinConfig altmin;
};

struct GlobalResult {
  Vector x_star;
  double value = kInf;
  bool proven = false;
  std::int64_t explored_nodes = 0;    // bnb: relaxations solved
  std::int64_t enumerated_count = 0;  // exhaustive: convex subproblems solved
  double lower_bound = -kInf;
  double bound_gap = kInf;            // value - lower_bound
  std::vector<double> incumbent_trace;  // bnb: after each explored node
  std::vector<double> bound_trace;
  Termination termination = Termination::kProvenOptimal;
  double wall_time = 0.0;
};

// min over lambda in {0,1}^m of min_x L(x, lambda), enumerated in Gray-code
// order with warm starts. Terms with alpha = +inf keep lambda_i = 1. Throws
// Error(kLimitExceeded) when the number of clippable terms exceeds cfg.limit.
GlobalResult SolveExhaustive(const Problem& p, const ExhaustiveConfig& cfg = {});

// Best-first branch-and-bound. A node is pruned once
//   bound >= incumbent - abs_gap_tol  or  bound >= incumbent - rel_gap_tol * |incumbent|.
GlobalResult SolveBnb(const Problem& p, const BnbConfig& cfg = {});

}  // namespace clipopt
