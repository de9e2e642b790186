#include "clipopt/clipopt.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "clipopt/generators.hpp"
#include "clipopt/heuristics.hpp"
#include "clipopt/micp.hpp"
#include "clipopt/perspective.hpp"
#include "clipopt/problem_io.hpp"

using namespace clipopt;

struct clipopt_problem {
  Problem problem;
  double offset = 0.0;
};

struct clipopt_report {
  SolveReport report;
  int dim = 0;
  int num_terms = 0;
};

struct clipopt_bound {
  BoundCertificate cert;
  int dim = 0;
  int num_terms = 0;
};

struct clipopt_global {
  GlobalResult result;
  int dim = 0;
};

struct clipopt_logistic {
  LogisticData data;
};

namespace {

thread_local std::string g_last_error;

clipopt_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return CLIPOPT_ERR_INVALID_INPUT;
    case ErrorCode::kParse: return CLIPOPT_ERR_PARSE;
    case ErrorCode::kUnsupported: return CLIPOPT_ERR_UNSUPPORTED;
    case ErrorCode::kNumerical: return CLIPOPT_ERR_NUMERICAL;
    case ErrorCode::kLimitExceeded: return CLIPOPT_ERR_LIMIT_EXCEEDED;
    case ErrorCode::kInfeasible: return CLIPOPT_ERR_INFEASIBLE;
    case ErrorCode::kIo: return CLIPOPT_ERR_IO;
  }
  return CLIPOPT_ERR_INTERNAL;
}

clipopt_status Fail(clipopt_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
clipopt_status Guard(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const Error& e) {
    return Fail(StatusOf(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CLIPOPT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CLIPOPT_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(CLIPOPT_ERR_INTERNAL, "unknown error");
  }
}

#define CLIPOPT_REQUIRE(ptr)                                                    \
  do {                                                                         \
    if ((ptr) == nullptr) return Fail(CLIPOPT_ERR_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

clipopt_status CheckLength(size_t got, std::size_t want, const char* what) {
  if (got != want) {
    return Fail(CLIPOPT_ERR_BUFFER_SIZE, std::string(what) + ": expected length " + std::to_string(want) +
                                             ", got " + std::to_string(got));
  }
  return CLIPOPT_OK;
}

Vector In(const double* x, size_t n) { return Eigen::Map<const Vector>(x, static_cast<Eigen::Index>(n)); }

void Out(const Vector& v, double* out) {
  if (v.size() > 0) std::memcpy(out, v.data(), sizeof(double) * static_cast<std::size_t>(v.size()));
}

clipopt_termination TermOf(Termination t) {
  switch (t) {
    case Termination::kToleranceMet: return CLIPOPT_TERM_TOLERANCE_MET;
    case Termination::kMaxIters: return CLIPOPT_TERM_MAX_ITERS;
    case Termination::kNodeLimit: return CLIPOPT_TERM_NODE_LIMIT;
    case Termination::kProvenOptimal: return CLIPOPT_TERM_PROVEN_OPTIMAL;
  }
  return CLIPOPT_TERM_MAX_ITERS;
}

InnerConfig ToInner(const clipopt_inner_config& c) {
  InnerConfig r;
  r.grad_tol = c.grad_tol;
  r.max_iters = c.max_iters;
  r.backtrack = c.backtrack;
  r.armijo = c.armijo;
  r.accelerate = c.accelerate != 0;
  return r;
}

void FromInner(const InnerConfig& r, clipopt_inner_config& c) {
  c.grad_tol = r.grad_tol;
  c.max_iters = r.max_iters;
  c.backtrack = r.backtrack;
  c.armijo = r.armijo;
  c.accelerate = r.accelerate ? 1 : 0;
}

AltMinConfig ToAltMin(const clipopt_altmin_config& c, const Problem& p) {
  AltMinConfig r;
  if (c.lambda0) r.lambda0 = WeightVector(In(c.lambda0, static_cast<size_t>(p.num_terms())));
  if (c.x0) r.x0 = In(c.x0, static_cast<size_t>(p.dim()));
  r.beta = c.beta;
  r.eps = c.eps;
  r.n_iter = c.n_iter;
  r.mode = c.mode == CLIPOPT_ALTMIN_EXACT ? AltMinMode::kExact : AltMinMode::kInexact;
  r.inner = ToInner(c.inner);
  return r;
}

RelaxationConfig ToRelaxation(const clipopt_relaxation_config& c, const Problem& p) {
  RelaxationConfig r;
  r.auto_ridge = c.auto_ridge;
  r.gap_tol = c.gap_tol;
  r.barrier_growth = c.barrier_growth;
  r.max_newton = c.max_newton;
  if (c.x0) r.x0 = In(c.x0, static_cast<size_t>(p.dim()));
  return r;
}

const std::vector<double>* Trace(const clipopt_report* r, clipopt_trace_kind kind) {
  if (kind == CLIPOPT_TRACE_OBJECTIVE) return &r->report.objective_trace;
  if (kind == CLIPOPT_TRACE_TRUE_OBJECTIVE) return &r->report.true_objective_trace;
  return nullptr;
}

clipopt_status CopyTrace(const std::vector<double>& t, double* out, size_t length) {
  if (clipopt_status s = CheckLength(length, t.size(), "trace"); s != CLIPOPT_OK) return s;
  if (!t.empty()) std::memcpy(out, t.data(), sizeof(double) * t.size());
  return CLIPOPT_OK;
}

clipopt_status NewProblem(Problem p, double offset, clipopt_problem** out) {
  *out = new clipopt_problem{std::move(p), offset};
  return CLIPOPT_OK;
}

}  // namespace

extern "C" {

const char* clipopt_version(void) { return "0.1.0"; }

const char* clipopt_status_string(clipopt_status status) {
  switch (status) {
    case CLIPOPT_OK: return "ok";
    case CLIPOPT_ERR_INVALID_INPUT: return "invalid input";
    case CLIPOPT_ERR_PARSE: return "parse error";
    case CLIPOPT_ERR_UNSUPPORTED: return "unsupported";
    case CLIPOPT_ERR_NUMERICAL: return "numerical failure";
    case CLIPOPT_ERR_LIMIT_EXCEEDED: return "limit exceeded";
    case CLIPOPT_ERR_INFEASIBLE: return "infeasible";
    case CLIPOPT_ERR_IO: return "i/o error";
    case CLIPOPT_ERR_NULL_ARGUMENT: return "null argument";
    case CLIPOPT_ERR_BUFFER_SIZE: return "buffer size mismatch";
    case CLIPOPT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* clipopt_termination_string(clipopt_termination t) {
  switch (t) {
    case CLIPOPT_TERM_TOLERANCE_MET: return ToString(Termination::kToleranceMet);
    case CLIPOPT_TERM_MAX_ITERS: return ToString(Termination::kMaxIters);
    case CLIPOPT_TERM_NODE_LIMIT: return ToString(Termination::kNodeLimit);
    case CLIPOPT_TERM_PROVEN_OPTIMAL: return ToString(Termination::kProvenOptimal);
  }
  return "unknown";
}

const char* clipopt_last_error(void) { return g_last_error.c_str(); }

clipopt_status clipopt_problem_parse(const char* text, size_t length, clipopt_problem** out) {
  CLIPOPT_REQUIRE(text);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    ProblemDocument doc = ParseProblemDocument(std::string_view(text, length));
    return NewProblem(std::move(doc.problem), doc.offset, out);
  });
}

clipopt_status clipopt_problem_load(const char* path, clipopt_problem** out) {
  CLIPOPT_REQUIRE(path);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    ProblemDocument doc = LoadProblemFile(path);
    return NewProblem(std::move(doc.problem), doc.offset, out);
  });
}

clipopt_status clipopt_problem_save(const clipopt_problem* p, const char* path) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(path);
  return Guard([&] {
    SaveProblemFile(path, p->problem, p->offset);
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_problem_serialize(const clipopt_problem* p, char** out) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    const std::string s = SerializeProblem(p->problem, p->offset);
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return CLIPOPT_OK;
  });
}

void clipopt_string_free(char* s) { delete[] s; }

void clipopt_problem_free(clipopt_problem* p) { delete p; }

clipopt_status clipopt_problem_dim(const clipopt_problem* p, size_t* n) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(n);
  *n = static_cast<size_t>(p->problem.dim());
  return CLIPOPT_OK;
}

clipopt_status clipopt_problem_num_terms(const clipopt_problem* p, size_t* m) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(m);
  *m = static_cast<size_t>(p->problem.num_terms());
  return CLIPOPT_OK;
}

clipopt_status clipopt_problem_offset(const clipopt_problem* p, double* offset) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(offset);
  *offset = p->offset;
  return CLIPOPT_OK;
}

clipopt_status clipopt_problem_term_alpha(const clipopt_problem* p, size_t i, double* alpha) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(alpha);
  if (i >= static_cast<size_t>(p->problem.num_terms())) return Fail(CLIPOPT_ERR_INVALID_INPUT, "term index out of range");
  *alpha = p->problem.term(static_cast<int>(i)).alpha;
  return CLIPOPT_OK;
}

clipopt_status clipopt_eval_objective(const clipopt_problem* p, const double* x, size_t n, double* value) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(x);
  CLIPOPT_REQUIRE(value);
  if (clipopt_status s = CheckLength(n, static_cast<std::size_t>(p->problem.dim()), "x"); s != CLIPOPT_OK) return s;
  return Guard([&] {
    *value = EvalObjective(p->problem, In(x, n));
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_eval_term(const clipopt_problem* p, size_t i, const double* x, size_t n, double* raw,
                                 double* clipped) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(x);
  if (i >= static_cast<size_t>(p->problem.num_terms())) return Fail(CLIPOPT_ERR_INVALID_INPUT, "term index out of range");
  if (clipopt_status s = CheckLength(n, static_cast<std::size_t>(p->problem.dim()), "x"); s != CLIPOPT_OK) return s;
  return Guard([&] {
    const TermValue v = EvalTerm(p->problem.term(static_cast<int>(i)), In(x, n));
    if (raw) *raw = v.raw;
    if (clipped) *clipped = v.clipped;
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_gen_regression(uint64_t seed, int n_points, int outliers, double alpha, double ridge,
                                      clipopt_problem** out) {
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] { return NewProblem(GenRegression(seed, n_points, outliers, alpha, ridge).problem, 0.0, out); });
}

void clipopt_lane_options_init(clipopt_lane_options* opts) {
  if (!opts) return;
  const LaneOptions d;
  opts->horizon = d.horizon;
  opts->rho1 = d.rho1;
  opts->rho2 = d.rho2;
  opts->rho3 = d.rho3;
  opts->x_start = d.x_start;
  opts->x_end = d.x_end;
  opts->obstacles = nullptr;
  opts->num_obstacles = 0;
  opts->no_obstacles = 0;
}

clipopt_status clipopt_gen_lane(const clipopt_lane_options* opts, clipopt_problem** out) {
  CLIPOPT_REQUIRE(opts);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  if (opts->num_obstacles > 0 && !opts->obstacles) return Fail(CLIPOPT_ERR_NULL_ARGUMENT, "obstacles is NULL");
  return Guard([&] {
    LaneOptions lo;
    lo.horizon = opts->horizon;
    lo.rho1 = opts->rho1;
    lo.rho2 = opts->rho2;
    lo.rho3 = opts->rho3;
    lo.x_start = opts->x_start;
    lo.x_end = opts->x_end;
    if (opts->no_obstacles || opts->num_obstacles > 0) lo.obstacles.clear();
    for (size_t k = 0; k < opts->num_obstacles; ++k) {
      const clipopt_lane_obstacle& o = opts->obstacles[k];
      lo.obstacles.push_back({o.t_begin, o.t_end, o.x_min, o.x_max});
    }
    return NewProblem(GenLaneChange(lo), 0.0, out);
  });
}

clipopt_status clipopt_gen_subset_sum(const long long* a, size_t n, clipopt_problem** out) {
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  if (n > 0) CLIPOPT_REQUIRE(a);
  return Guard([&] {
    SubsetSumInstance inst = GenSubsetSum(std::vector<long long>(a, a + n));
    return NewProblem(std::move(inst.problem), inst.offset, out);
  });
}

void clipopt_logistic_options_init(clipopt_logistic_options* opts) {
  if (!opts) return;
  const LogisticOptions d;
  opts->n_points = d.n_points;
  opts->n_train = d.n_train;
  opts->n_flip = d.n_flip;
  opts->dim = d.dim;
  opts->separation = d.separation;
  opts->ridge = d.ridge;
  opts->per_train_weight = d.per_train_weight ? 1 : 0;
}

clipopt_status clipopt_gen_logistic(uint64_t seed, double alpha, const clipopt_logistic_options* opts,
                                    clipopt_logistic** out) {
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    LogisticOptions lo;
    if (opts) {
      lo.n_points = opts->n_points;
      lo.n_train = opts->n_train;
      lo.n_flip = opts->n_flip;
      lo.dim = opts->dim;
      lo.separation = opts->separation;
      lo.ridge = opts->ridge;
      lo.per_train_weight = opts->per_train_weight != 0;
    }
    *out = new clipopt_logistic{GenLogistic(seed, alpha, lo)};
    return CLIPOPT_OK;
  });
}

void clipopt_logistic_free(clipopt_logistic* d) { delete d; }

clipopt_status clipopt_logistic_problem(const clipopt_logistic* d, clipopt_problem** out) {
  CLIPOPT_REQUIRE(d);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] { return NewProblem(d->data.problem, 0.0, out); });
}

clipopt_status clipopt_logistic_test_accuracy(const clipopt_logistic* d, const double* theta_b, size_t n,
                                              double* accuracy) {
  CLIPOPT_REQUIRE(d);
  CLIPOPT_REQUIRE(theta_b);
  CLIPOPT_REQUIRE(accuracy);
  return Guard([&] {
    *accuracy = Accuracy(In(theta_b, n), d->data.test_x, d->data.test_y);
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_logistic_train_accuracy(const clipopt_logistic* d, const double* theta_b, size_t n,
                                               double* accuracy) {
  CLIPOPT_REQUIRE(d);
  CLIPOPT_REQUIRE(theta_b);
  CLIPOPT_REQUIRE(accuracy);
  return Guard([&] {
    *accuracy = Accuracy(In(theta_b, n), d->data.train_x, d->data.train_y);
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_logistic_outliers(const clipopt_logistic* d, const double* theta_b, size_t n,
                                         size_t* detected, size_t* planted_hits) {
  CLIPOPT_REQUIRE(d);
  CLIPOPT_REQUIRE(theta_b);
  if (clipopt_status s = CheckLength(n, static_cast<std::size_t>(d->data.problem.dim()), "theta_b"); s != CLIPOPT_OK) {
    return s;
  }
  return Guard([&] {
    const std::vector<int> found = DetectedOutliers(d->data, In(theta_b, n));
    size_t hits = 0;
    for (int i : found) {
      for (int f : d->data.flipped) hits += i == f ? 1 : 0;
    }
    if (detected) *detected = found.size();
    if (planted_hits) *planted_hits = hits;
    return CLIPOPT_OK;
  });
}

void clipopt_altmin_config_init(clipopt_altmin_config* cfg) {
  if (!cfg) return;
  const AltMinConfig d;
  cfg->lambda0 = nullptr;
  cfg->x0 = nullptr;
  cfg->beta = d.beta;
  cfg->eps = d.eps;
  cfg->n_iter = d.n_iter;
  cfg->mode = CLIPOPT_ALTMIN_INEXACT;
  FromInner(d.inner, cfg->inner);
}

void clipopt_ccp_config_init(clipopt_ccp_config* cfg) {
  if (!cfg) return;
  const CcpConfig d;
  cfg->x0 = nullptr;
  cfg->max_iters = d.max_iters;
  cfg->tol = d.tol;
  FromInner(d.inner, cfg->inner);
}

clipopt_status clipopt_solve_altmin(const clipopt_problem* p, const clipopt_altmin_config* cfg,
                                    clipopt_report** out) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    clipopt_altmin_config c;
    clipopt_altmin_config_init(&c);
    if (cfg) c = *cfg;
    SolveReport r = SolveAltMin(p->problem, ToAltMin(c, p->problem));
    *out = new clipopt_report{std::move(r), p->problem.dim(), p->problem.num_terms()};
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_solve_ccp(const clipopt_problem* p, const clipopt_ccp_config* cfg, clipopt_report** out) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    CcpConfig c;
    if (cfg) {
      if (cfg->x0) c.x0 = In(cfg->x0, static_cast<size_t>(p->problem.dim()));
      c.max_iters = cfg->max_iters;
      c.tol = cfg->tol;
      c.inner = ToInner(cfg->inner);
    }
    SolveReport r = SolveCcp(p->problem, c);
    *out = new clipopt_report{std::move(r), p->problem.dim(), p->problem.num_terms()};
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_minimal_convex_extension(const clipopt_problem* p, clipopt_problem** out) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] { return NewProblem(MinimalConvexExtension(p->problem), p->offset, out); });
}

void clipopt_report_free(clipopt_report* r) { delete r; }

clipopt_status clipopt_report_info_get(const clipopt_report* r, clipopt_report_info* info) {
  CLIPOPT_REQUIRE(r);
  CLIPOPT_REQUIRE(info);
  info->dim = static_cast<size_t>(r->dim);
  info->num_terms = static_cast<size_t>(r->num_terms);
  info->objective_value = r->report.objective_value;
  info->iterations = r->report.iterations;
  info->termination = TermOf(r->report.termination);
  info->wall_time = r->report.wall_time;
  info->inner_converged = r->report.inner_converged ? 1 : 0;
  info->trace_length = r->report.objective_trace.size();
  return CLIPOPT_OK;
}

clipopt_status clipopt_report_x(const clipopt_report* r, double* x, size_t n) {
  CLIPOPT_REQUIRE(r);
  CLIPOPT_REQUIRE(x);
  if (clipopt_status s = CheckLength(n, static_cast<std::size_t>(r->report.x_best.size()), "x"); s != CLIPOPT_OK) {
    return s;
  }
  Out(r->report.x_best, x);
  return CLIPOPT_OK;
}

clipopt_status clipopt_report_trace(const clipopt_report* r, clipopt_trace_kind kind, double* out, size_t length) {
  CLIPOPT_REQUIRE(r);
  const std::vector<double>* t = Trace(r, kind);
  if (!t) return Fail(CLIPOPT_ERR_INVALID_INPUT, "trace kind not available on a heuristic report");
  if (length > 0) CLIPOPT_REQUIRE(out);
  return CopyTrace(*t, out, length);
}

clipopt_status clipopt_report_lambda(const clipopt_report* r, size_t k, double* out, size_t m) {
  CLIPOPT_REQUIRE(r);
  if (k >= r->report.lambda_trace.size()) return Fail(CLIPOPT_ERR_INVALID_INPUT, "iteration index out of range");
  const Vector& lam = r->report.lambda_trace[k];
  if (clipopt_status s = CheckLength(m, static_cast<std::size_t>(lam.size()), "lambda"); s != CLIPOPT_OK) return s;
  if (m > 0) CLIPOPT_REQUIRE(out);
  Out(lam, out);
  return CLIPOPT_OK;
}

void clipopt_relaxation_config_init(clipopt_relaxation_config* cfg) {
  if (!cfg) return;
  const RelaxationConfig d;
  cfg->auto_ridge = d.auto_ridge;
  cfg->gap_tol = d.gap_tol;
  cfg->barrier_growth = d.barrier_growth;
  cfg->max_newton = d.max_newton;
  cfg->x0 = nullptr;
}

void clipopt_admm_config_init(clipopt_admm_config* cfg) {
  if (!cfg) return;
  const AdmmConfig d;
  cfg->rho = d.rho;
  cfg->max_iters = d.max_iters;
  cfg->primal_tol = d.primal_tol;
  cfg->dual_tol = d.dual_tol;
  cfg->auto_ridge = d.auto_ridge;
  cfg->gap_tol = d.gap_tol;
}

clipopt_status clipopt_bound_direct(const clipopt_problem* p, const int8_t* fixed, size_t m,
                                    const clipopt_relaxation_config* cfg, clipopt_bound** out) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  if (fixed) {
    if (clipopt_status s = CheckLength(m, static_cast<std::size_t>(p->problem.num_terms()), "fixed");
        s != CLIPOPT_OK) {
      return s;
    }
  }
  return Guard([&] {
    clipopt_relaxation_config c;
    clipopt_relaxation_config_init(&c);
    if (cfg) c = *cfg;
    const TAssignment fix = fixed ? TAssignment(fixed, fixed + m) : TAssignment{};
    BoundCertificate cert = SolveRelaxation(p->problem, fix, ToRelaxation(c, p->problem));
    *out = new clipopt_bound{std::move(cert), p->problem.dim(), p->problem.num_terms()};
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_bound_admm(const clipopt_problem* p, const clipopt_admm_config* cfg, clipopt_bound** out) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    AdmmConfig c;
    if (cfg) {
      c.rho = cfg->rho;
      c.max_iters = cfg->max_iters;
      c.primal_tol = cfg->primal_tol;
      c.dual_tol = cfg->dual_tol;
      c.auto_ridge = cfg->auto_ridge;
      c.gap_tol = cfg->gap_tol;
    }
    BoundCertificate cert = SolveRelaxationAdmm(p->problem, c);
    *out = new clipopt_bound{std::move(cert), p->problem.dim(), p->problem.num_terms()};
    return CLIPOPT_OK;
  });
}

void clipopt_bound_free(clipopt_bound* b) { delete b; }

clipopt_status clipopt_bound_info_get(const clipopt_bound* b, clipopt_bound_info* info) {
  CLIPOPT_REQUIRE(b);
  CLIPOPT_REQUIRE(info);
  const BoundCertificate& c = b->cert;
  info->dim = static_cast<size_t>(b->dim);
  info->num_terms = static_cast<size_t>(b->num_terms);
  info->lower_bound = c.lower_bound;
  info->objective = c.objective;
  info->feasible = c.feasible ? 1 : 0;
  info->converged = c.converged ? 1 : 0;
  info->auto_ridge = c.auto_ridge;
  info->iterations = c.iterations;
  info->primal_residual = c.primal_residual;
  info->dual_residual = c.dual_residual;
  info->wall_time = c.wall_time;
  return CLIPOPT_OK;
}

clipopt_status clipopt_bound_x(const clipopt_bound* b, double* x, size_t n) {
  CLIPOPT_REQUIRE(b);
  CLIPOPT_REQUIRE(x);
  if (clipopt_status s = CheckLength(n, static_cast<std::size_t>(b->dim), "x"); s != CLIPOPT_OK) return s;
  if (b->cert.solution.x.size() != b->dim) return Fail(CLIPOPT_ERR_INFEASIBLE, "no relaxation point available");
  Out(b->cert.solution.x, x);
  return CLIPOPT_OK;
}

clipopt_status clipopt_bound_t(const clipopt_bound* b, double* t, size_t m) {
  CLIPOPT_REQUIRE(b);
  if (clipopt_status s = CheckLength(m, static_cast<std::size_t>(b->num_terms), "t"); s != CLIPOPT_OK) return s;
  if (m > 0) CLIPOPT_REQUIRE(t);
  if (b->cert.solution.t.size() != b->num_terms) return Fail(CLIPOPT_ERR_INFEASIBLE, "no relaxation point available");
  Out(b->cert.solution.t, t);
  return CLIPOPT_OK;
}

void clipopt_exhaustive_config_init(clipopt_exhaustive_config* cfg) {
  if (!cfg) return;
  const ExhaustiveConfig d;
  cfg->limit = d.limit;
  FromInner(d.inner, cfg->inner);
}

void clipopt_bnb_config_init(clipopt_bnb_config* cfg) {
  if (!cfg) return;
  const BnbConfig d;
  cfg->abs_gap_tol = d.abs_gap_tol;
  cfg->rel_gap_tol = d.rel_gap_tol;
  cfg->node_limit = d.node_limit;
  cfg->max_open = d.max_open;
  cfg->integral_tol = d.integral_tol;
  clipopt_relaxation_config_init(&cfg->relaxation);
  clipopt_altmin_config_init(&cfg->altmin);
}

clipopt_status clipopt_solve_exhaustive(const clipopt_problem* p, const clipopt_exhaustive_config* cfg,
                                        clipopt_global** out) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    ExhaustiveConfig c;
    if (cfg) {
      c.limit = cfg->limit;
      c.inner = ToInner(cfg->inner);
    }
    GlobalResult r = SolveExhaustive(p->problem, c);
    *out = new clipopt_global{std::move(r), p->problem.dim()};
    return CLIPOPT_OK;
  });
}

clipopt_status clipopt_solve_bnb(const clipopt_problem* p, const clipopt_bnb_config* cfg, clipopt_global** out) {
  CLIPOPT_REQUIRE(p);
  CLIPOPT_REQUIRE(out);
  *out = nullptr;
  return Guard([&] {
    clipopt_bnb_config c;
    clipopt_bnb_config_init(&c);
    if (cfg) c = *cfg;
    BnbConfig b;
    b.abs_gap_tol = c.abs_gap_tol;
    b.rel_gap_tol = c.rel_gap_tol;
    b.node_limit = c.node_limit;
    b.max_open = c.max_open;
    b.integral_tol = c.integral_tol;
    b.relaxation = ToRelaxation(c.relaxation, p->problem);
    b.altmin = ToAltMin(c.altmin, p->problem);
    GlobalResult r = SolveBnb(p->problem, b);
    *out = new clipopt_global{std::move(r), p->problem.dim()};
    return CLIPOPT_OK;
  });
}

void clipopt_global_free(clipopt_global* g) { delete g; }

clipopt_status clipopt_global_info_get(const clipopt_global* g, clipopt_global_info* info) {
  CLIPOPT_REQUIRE(g);
  CLIPOPT_REQUIRE(info);
  const GlobalResult& r = g->result;
  info->dim = static_cast<size_t>(g->dim);
  info->value = r.value;
  info->proven = r.proven ? 1 : 0;
  info->explored_nodes = r.explored_nodes;
  info->enumerated_count = r.enumerated_count;
  info->lower_bound = r.lower_bound;
  info->bound_gap = r.bound_gap;
  info->termination = TermOf(r.termination);
  info->wall_time = r.wall_time;
  info->trace_length = r.incumbent_trace.size();
  return CLIPOPT_OK;
}

clipopt_status clipopt_global_x(const clipopt_global* g, double* x, size_t n) {
  CLIPOPT_REQUIRE(g);
  CLIPOPT_REQUIRE(x);
  if (clipopt_status s = CheckLength(n, static_cast<std::size_t>(g->dim), "x"); s != CLIPOPT_OK) return s;
  if (g->result.x_star.size() != g->dim) return Fail(CLIPOPT_ERR_INFEASIBLE, "no solution available");
  Out(g->result.x_star, x);
  return CLIPOPT_OK;
}

clipopt_status clipopt_global_trace(const clipopt_global* g, clipopt_trace_kind kind, double* out, size_t length) {
  CLIPOPT_REQUIRE(g);
  if (length > 0) CLIPOPT_REQUIRE(out);
  if (kind == CLIPOPT_TRACE_INCUMBENT) return CopyTrace(g->result.incumbent_trace, out, length);
  if (kind == CLIPOPT_TRACE_BOUND) return CopyTrace(g->result.bound_trace, out, length);
  return Fail(CLIPOPT_ERR_INVALID_INPUT, "trace kind not available on a global result");
}

}  // extern "C"
