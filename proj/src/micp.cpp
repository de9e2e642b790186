#include "clipopt/micp.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <queue>
#include <string>

namespace clipopt {

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

GlobalResult SolveExhaustive(const Problem& p, const ExhaustiveConfig& cfg) {
  const auto start = Clock::now();
  const int m = p.num_terms();
  std::vector<int> clippable;
  for (int i = 0; i < m; ++i) {
    if (p.term(i).Clippable()) clippable.push_back(i);
  }
  const int k = static_cast<int>(clippable.size());
  if (k > cfg.limit || k > 62) {
    throw Error(ErrorCode::kLimitExceeded, "exhaustive search over " + std::to_string(k) +
                                               " clippable terms exceeds the limit of " +
                                               std::to_string(cfg.limit));
  }

  Vector lambda = Vector::Ones(m);
  Vector x = ProjectBox(Vector::Zero(p.dim()), p.base().lower, p.base().upper);
  GlobalResult res;
  double best_l = kInf;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t code = 0; code < count; ++code) {
    if (code > 0) {
      const int bit = std::countr_zero(code);
      const int i = clippable[static_cast<std::size_t>(bit)];
      lambda[i] = 1.0 - lambda[i];
    }
    const InnerResult inner = WeightedSubproblem(p, WeightVector(lambda), x, cfg.inner);
    x = inner.x;
    ++res.enumerated_count;
    if (inner.value < best_l) {
      best_l = inner.value;
      res.x_star = inner.x;
    }
  }
  res.value = EvalObjective(p, res.x_star);
  res.lower_bound = res.value;
  res.bound_gap = 0.0;
  res.proven = true;
  res.termination = Termination::kProvenOptimal;
  res.wall_time = Seconds(start);
  return res;
}

namespace {

struct Node {
  TAssignment fixed;
  double bound = -kInf;
  int depth = 0;
  Vector x;
  Vector t;
};

struct WorseBound {
  bool operator()(const Node& a, const Node& b) const { return a.bound > b.bound; }
};

class BranchAndBound {
 public:
  BranchAndBound(const Problem& p, const BnbConfig& cfg) : p_(p), cfg_(cfg) {}

  GlobalResult Run() {
    const auto start = Clock::now();
    const int m = p_.num_terms();
    Node root;
    root.fixed.assign(static_cast<std::size_t>(m), kFree);
    if (!Bound(root, -kInf)) {
      throw Error(ErrorCode::kInfeasible, "root relaxation is infeasible");
    }

    AltMinConfig am = cfg_.altmin;
    Vector lam0(m);
    for (int i = 0; i < m; ++i) lam0[i] = root.t[i] >= 0.5 ? 1.0 : 0.0;
    am.lambda0 = WeightVector(lam0);
    am.x0 = root.x;
    const SolveReport heur = SolveAltMin(p_, am);
    Offer(heur.x_best, heur.objective_value);
    Offer(root.x, EvalObjective(p_, root.x));

    open_.push(std::move(root));
    bool stopped = false;
    while (!open_.empty() || !dive_.empty()) {
      if (explored_ >= cfg_.node_limit) {
        stopped = true;
        break;
      }
      Node node;
      if (!dive_.empty()) {
        node = std::move(dive_.back());
        dive_.pop_back();
      } else {
        node = open_.top();
        open_.pop();
      }
      if (Prunable(node.bound)) {
        Close(node.bound);
        Record();
        continue;
      }
      Process(std::move(node));
      Record();
    }

    GlobalResult res;
    res.x_star = x_inc_;
    res.value = upper_;
    res.explored_nodes = explored_;
    res.incumbent_trace = std::move(inc_trace_);
    res.bound_trace = std::move(bound_trace_);
    res.lower_bound = std::min(GlobalLower(), upper_);
    res.bound_gap = res.value - res.lower_bound;
    res.proven = !stopped;
    res.termination = stopped ? Termination::kNodeLimit : Termination::kProvenOptimal;
    res.wall_time = Seconds(start);
    return res;
  }

 private:
  // Solves the node relaxation; false when infeasible.
  bool Bound(Node& node, double parent_bound) {
    RelaxationConfig rc = cfg_.relaxation;
    if (node.x.size() == p_.dim()) rc.x0 = node.x;
    const BoundCertificate cert = SolveRelaxation(p_, node.fixed, rc);
    ++explored_;
    if (!cert.feasible) return false;
    node.bound = std::max(cert.lower_bound, parent_bound);
    node.x = cert.solution.x;
    node.t = cert.solution.t;
    return true;
  }

  void Offer(const Vector& x, double value) {
    if (x.size() == p_.dim() && value < upper_) {
      upper_ = value;
      x_inc_ = x;
    }
  }

  bool Prunable(double bound) const {
    if (!std::isfinite(upper_)) return false;
    const double gap = upper_ - bound;
    return gap <= cfg_.abs_gap_tol || gap <= cfg_.rel_gap_tol * std::abs(upper_);
  }

  void Close(double bound) { closed_lower_ = std::min(closed_lower_, bound); }

  double GlobalLower() const {
    double lb = closed_lower_;
    if (!open_.empty()) lb = std::min(lb, open_.top().bound);
    for (const Node& n : dive_) lb = std::min(lb, n.bound);
    return lb;
  }

  void Record() {
    inc_trace_.push_back(upper_);
    bound_trace_.push_back(std::min(GlobalLower(), upper_));
  }

  int BranchIndex(const Node& node) const {
    int best = -1;
    double best_dist = kInf;
    for (int i = 0; i < p_.num_terms(); ++i) {
      if (node.fixed[static_cast<std::size_t>(i)] != kFree || !p_.term(i).Clippable()) continue;
      const double t = node.t[i];
      if (std::min(t, 1.0 - t) <= cfg_.integral_tol) continue;
      const double dist = std::abs(t - 0.5);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    return best;
  }

  void Process(Node node) {
    const int branch = BranchIndex(node);
    if (branch < 0) {
      // Integral relaxation: its rounded lambda gives a candidate for this subtree.
      Vector lam(p_.num_terms());
      for (int i = 0; i < p_.num_terms(); ++i) lam[i] = node.t[i] >= 0.5 ? 1.0 : 0.0;
      const InnerResult inner = WeightedSubproblem(p_, WeightVector(lam), node.x, cfg_.altmin.inner);
      Offer(inner.x, EvalObjective(p_, inner.x));
      Close(node.bound);
      return;
    }
    for (const std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
      Node child;
      child.fixed = node.fixed;
      child.fixed[static_cast<std::size_t>(branch)] = v;
      child.depth = node.depth + 1;
      child.x = node.x;
      if (!Bound(child, node.bound)) continue;
      Offer(child.x, EvalObjective(p_, child.x));
      if (Prunable(child.bound)) {
        Close(child.bound);
        continue;
      }
      if (open_.size() >= cfg_.max_open) {
        dive_.push_back(std::move(child));
      } else {
        open_.push(std::move(child));
      }
    }
  }

  const Problem& p_;
  const BnbConfig& cfg_;
  std::priority_queue<Node, std::vector<Node>, WorseBound> open_;
  std::vector<Node> dive_;
  double upper_ = kInf;
  Vector x_inc_;
  double closed_lower_ = kInf;
  std::int64_t explored_ = 0;
  std::vector<double> inc_trace_;
  std::vector<double> bound_trace_;
};

}  // namespace

GlobalResult SolveBnb(const Problem& p, const BnbConfig& cfg) {
  if (!(cfg.abs_gap_tol >= 0.0) || !(cfg.rel_gap_tol >= 0.0) || cfg.node_limit < 1 ||
      !(cfg.integral_tol >= 0.0 && cfg.integral_tol < 0.5)) {
    throw Error(ErrorCode::kInvalidInput, "invalid branch-and-bound configuration");
  }
  return BranchAndBound(p, cfg).Run();
}

}  // namespace clipopt
