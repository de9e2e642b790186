#ifndef CLIPOPT_CLIPOPT_H_
#define CLIPOPT_CLIPOPT_H_

/* C interface to the clipped-convex solver library.
 *
 * Every function returns a clipopt_status. On failure the message is
 * available from clipopt_last_error() until the next call on the same thread.
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function (passing NULL is allowed). Arrays are copied in and out;
 * output arrays must have exactly the documented length. */

#include <stddef.h>
#include <stdint.h>

#if defined(CLIPOPT_BUILDING_LIBRARY)
#define CLIPOPT_API __attribute__((visibility("default")))
#else
#define CLIPOPT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clipopt_status {
  CLIPOPT_OK = 0,
  CLIPOPT_ERR_INVALID_INPUT = 1,
  CLIPOPT_ERR_PARSE = 2,
  CLIPOPT_ERR_UNSUPPORTED = 3,
  CLIPOPT_ERR_NUMERICAL = 4,
  CLIPOPT_ERR_LIMIT_EXCEEDED = 5,
  CLIPOPT_ERR_INFEASIBLE = 6,
  CLIPOPT_ERR_IO = 7,
  CLIPOPT_ERR_NULL_ARGUMENT = 8,
  CLIPOPT_ERR_BUFFER_SIZE = 9,
  CLIPOPT_ERR_INTERNAL = 10
} clipopt_status;

typedef enum clipopt_termination {
  CLIPOPT_TERM_TOLERANCE_MET = 0,
  CLIPOPT_TERM_MAX_ITERS = 1,
  CLIPOPT_TERM_NODE_LIMIT = 2,
  CLIPOPT_TERM_PROVEN_OPTIMAL = 3
} clipopt_termination;

typedef enum clipopt_trace_kind {
  CLIPOPT_TRACE_OBJECTIVE = 0,      /* method surrogate per iteration */
  CLIPOPT_TRACE_TRUE_OBJECTIVE = 1, /* clipped objective per iteration */
  CLIPOPT_TRACE_INCUMBENT = 2,      /* bnb only */
  CLIPOPT_TRACE_BOUND = 3           /* bnb only */
} clipopt_trace_kind;

CLIPOPT_API const char* clipopt_version(void);
CLIPOPT_API const char* clipopt_status_string(clipopt_status status);
CLIPOPT_API const char* clipopt_termination_string(clipopt_termination t);
CLIPOPT_API const char* clipopt_last_error(void);

/* ---- problems ---- */

typedef struct clipopt_problem clipopt_problem;

CLIPOPT_API clipopt_status clipopt_problem_parse(const char* text, size_t length, clipopt_problem** out);
CLIPOPT_API clipopt_status clipopt_problem_load(const char* path, clipopt_problem** out);
CLIPOPT_API clipopt_status clipopt_problem_save(const clipopt_problem* p, const char* path);
/* *out is a NUL-terminated JSON document; release with clipopt_string_free. */
CLIPOPT_API clipopt_status clipopt_problem_serialize(const clipopt_problem* p, char** out);
CLIPOPT_API void clipopt_string_free(char* s);
CLIPOPT_API void clipopt_problem_free(clipopt_problem* p);

CLIPOPT_API clipopt_status clipopt_problem_dim(const clipopt_problem* p, size_t* n);
CLIPOPT_API clipopt_status clipopt_problem_num_terms(const clipopt_problem* p, size_t* m);
/* Constant added to reported objective values (0 unless the file sets one). */
CLIPOPT_API clipopt_status clipopt_problem_offset(const clipopt_problem* p, double* offset);
CLIPOPT_API clipopt_status clipopt_problem_term_alpha(const clipopt_problem* p, size_t i, double* alpha);

/* Clipped objective, +inf outside the box. x has length n. */
CLIPOPT_API clipopt_status clipopt_eval_objective(const clipopt_problem* p, const double* x, size_t n,
                                                  double* value);
CLIPOPT_API clipopt_status clipopt_eval_term(const clipopt_problem* p, size_t i, const double* x, size_t n,
                                             double* raw, double* clipped);

/* ---- generators ---- */

CLIPOPT_API clipopt_status clipopt_gen_regression(uint64_t seed, int n_points, int outliers, double alpha,
                                                  double ridge, clipopt_problem** out);

typedef struct clipopt_lane_obstacle {
  int t_begin;
  int t_end; /* inclusive */
  double x_min;
  double x_max;
} clipopt_lane_obstacle;

typedef struct clipopt_lane_options {
  int horizon;
  double rho1, rho2, rho3;
  double x_start, x_end;
  /* NULL with count 0 selects the default obstacle set. */
  const clipopt_lane_obstacle* obstacles;
  size_t num_obstacles;
  int no_obstacles; /* nonzero: empty obstacle set */
} clipopt_lane_options;

CLIPOPT_API void clipopt_lane_options_init(clipopt_lane_options* opts);
CLIPOPT_API clipopt_status clipopt_gen_lane(const clipopt_lane_options* opts, clipopt_problem** out);

/* The offset -n/4 is stored on the problem (see clipopt_problem_offset). */
CLIPOPT_API clipopt_status clipopt_gen_subset_sum(const long long* a, size_t n, clipopt_problem** out);

typedef struct clipopt_logistic clipopt_logistic;

typedef struct clipopt_logistic_options {
  int n_points;
  int n_train;
  int n_flip;
  int dim;
  double separation;
  double ridge;
  int per_train_weight;
} clipopt_logistic_options;

CLIPOPT_API void clipopt_logistic_options_init(clipopt_logistic_options* opts);
/* alpha = INFINITY disables clipping. */
CLIPOPT_API clipopt_status clipopt_gen_logistic(uint64_t seed, double alpha, const clipopt_logistic_options* opts,
                                                clipopt_logistic** out);
CLIPOPT_API void clipopt_logistic_free(clipopt_logistic* d);
/* New problem handle; the dataset keeps its own copy. */
CLIPOPT_API clipopt_status clipopt_logistic_problem(const clipopt_logistic* d, clipopt_problem** out);
/* theta_b = (theta, b), length dim + 1. */
CLIPOPT_API clipopt_status clipopt_logistic_test_accuracy(const clipopt_logistic* d, const double* theta_b,
                                                          size_t n, double* accuracy);
CLIPOPT_API clipopt_status clipopt_logistic_train_accuracy(const clipopt_logistic* d, const double* theta_b,
                                                           size_t n, double* accuracy);
/* Number of training points whose unclipped loss reaches alpha, and how many
 * of those carry a flipped label. */
CLIPOPT_API clipopt_status clipopt_logistic_outliers(const clipopt_logistic* d, const double* theta_b, size_t n,
                                                     size_t* detected, size_t* planted_hits);

/* ---- heuristics ---- */

typedef struct clipopt_inner_config {
  double grad_tol;
  int max_iters;
  double backtrack;
  double armijo;
  int accelerate;
} clipopt_inner_config;

typedef enum clipopt_altmin_mode { CLIPOPT_ALTMIN_INEXACT = 0, CLIPOPT_ALTMIN_EXACT = 1 } clipopt_altmin_mode;

typedef struct clipopt_altmin_config {
  const double* lambda0; /* length m, or NULL for 1/2 */
  const double* x0;      /* length n, or NULL for 0 */
  double beta;
  double eps;
  int n_iter;
  clipopt_altmin_mode mode;
  clipopt_inner_config inner;
} clipopt_altmin_config;

typedef struct clipopt_ccp_config {
  const double* x0; /* length n, or NULL */
  int max_iters;
  double tol;
  clipopt_inner_config inner;
} clipopt_ccp_config;

CLIPOPT_API void clipopt_altmin_config_init(clipopt_altmin_config* cfg);
CLIPOPT_API void clipopt_ccp_config_init(clipopt_ccp_config* cfg);

typedef struct clipopt_report clipopt_report;

typedef struct clipopt_report_info {
  size_t dim;
  size_t num_terms;
  double objective_value;
  int iterations;
  clipopt_termination termination;
  double wall_time;
  int inner_converged;
  size_t trace_length;
} clipopt_report_info;

CLIPOPT_API clipopt_status clipopt_solve_altmin(const clipopt_problem* p, const clipopt_altmin_config* cfg,
                                                clipopt_report** out);
CLIPOPT_API clipopt_status clipopt_solve_ccp(const clipopt_problem* p, const clipopt_ccp_config* cfg,
                                             clipopt_report** out);
/* Replaces every clipped square term by its minimal convex extension. */
CLIPOPT_API clipopt_status clipopt_minimal_convex_extension(const clipopt_problem* p, clipopt_problem** out);
CLIPOPT_API void clipopt_report_free(clipopt_report* r);
CLIPOPT_API clipopt_status clipopt_report_info_get(const clipopt_report* r, clipopt_report_info* info);
CLIPOPT_API clipopt_status clipopt_report_x(const clipopt_report* r, double* x, size_t n);
/* OBJECTIVE or TRUE_OBJECTIVE; out has length trace_length. */
CLIPOPT_API clipopt_status clipopt_report_trace(const clipopt_report* r, clipopt_trace_kind kind, double* out,
                                                size_t length);
/* lambda at iteration k < trace_length, length m. */
CLIPOPT_API clipopt_status clipopt_report_lambda(const clipopt_report* r, size_t k, double* out, size_t m);

/* ---- relaxation bounds ---- */

typedef struct clipopt_relaxation_config {
  double auto_ridge;
  double gap_tol;
  double barrier_growth;
  int max_newton;
  const double* x0; /* length n, or NULL */
} clipopt_relaxation_config;

typedef struct clipopt_admm_config {
  double rho;
  int max_iters;
  double primal_tol;
  double dual_tol;
  double auto_ridge;
  double gap_tol;
} clipopt_admm_config;

CLIPOPT_API void clipopt_relaxation_config_init(clipopt_relaxation_config* cfg);
CLIPOPT_API void clipopt_admm_config_init(clipopt_admm_config* cfg);

typedef struct clipopt_bound clipopt_bound;

typedef struct clipopt_bound_info {
  size_t dim;
  size_t num_terms;
  double lower_bound;
  double objective;
  int feasible;
  int converged;
  double auto_ridge;
  int iterations;
  double primal_residual;
  double dual_residual;
  double wall_time;
} clipopt_bound_info;

/* fixed: NULL, or length m with entries -1 (free), 0 or 1. */
CLIPOPT_API clipopt_status clipopt_bound_direct(const clipopt_problem* p, const int8_t* fixed, size_t m,
                                                const clipopt_relaxation_config* cfg, clipopt_bound** out);
CLIPOPT_API clipopt_status clipopt_bound_admm(const clipopt_problem* p, const clipopt_admm_config* cfg,
                                              clipopt_bound** out);
CLIPOPT_API void clipopt_bound_free(clipopt_bound* b);
CLIPOPT_API clipopt_status clipopt_bound_info_get(const clipopt_bound* b, clipopt_bound_info* info);
CLIPOPT_API clipopt_status clipopt_bound_x(const clipopt_bound* b, double* x, size_t n);
CLIPOPT_API clipopt_status clipopt_bound_t(const clipopt_bound* b, double* t, size_t m);

/* ---- exact solvers ---- */

typedef struct clipopt_exhaustive_config {
  int limit;
  clipopt_inner_config inner;
} clipopt_exhaustive_config;

typedef struct clipopt_bnb_config {
  double abs_gap_tol;
  double rel_gap_tol;
  int64_t node_limit;
  size_t max_open;
  double integral_tol;
  clipopt_relaxation_config relaxation;
  clipopt_altmin_config altmin;
} clipopt_bnb_config;

CLIPOPT_API void clipopt_exhaustive_config_init(clipopt_exhaustive_config* cfg);
CLIPOPT_API void clipopt_bnb_config_init(clipopt_bnb_config* cfg);

typedef struct clipopt_global clipopt_global;

typedef struct clipopt_global_info {
  size_t dim;
  double value;
  int proven;
  int64_t explored_nodes;
  int64_t enumerated_count;
  double lower_bound;
  double bound_gap;
  clipopt_termination termination;
  double wall_time;
  size_t trace_length;
} clipopt_global_info;

CLIPOPT_API clipopt_status clipopt_solve_exhaustive(const clipopt_problem* p, const clipopt_exhaustive_config* cfg,
                                                    clipopt_global** out);
CLIPOPT_API clipopt_status clipopt_solve_bnb(const clipopt_problem* p, const clipopt_bnb_config* cfg,
                                             clipopt_global** out);
CLIPOPT_API void clipopt_global_free(clipopt_global* g);
CLIPOPT_API clipopt_status clipopt_global_info_get(const clipopt_global* g, clipopt_global_info* info);
CLIPOPT_API clipopt_status clipopt_global_x(const clipopt_global* g, double* x, size_t n);
/* INCUMBENT or BOUND; out has length trace_length. */
CLIPOPT_API clipopt_status clipopt_global_trace(const clipopt_global* g, clipopt_trace_kind kind, double* out,
                                                size_t length);

#ifdef __cplusplus
}
#endif

#endif /* CLIPOPT_CLIPOPT_H_ */
