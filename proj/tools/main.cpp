#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clipopt/clipopt.h"
#include "handles.hpp"
#include "output.hpp"

namespace cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitParse = 4,
  kExitInvalid = 5,
  kExitSolver = 6,
  kExitLimit = 7,
  kExitInternal = 8,
};

int ExitFor(clipopt_status s) {
  switch (s) {
    case CLIPOPT_OK: return kExitOk;
    case CLIPOPT_ERR_IO: return kExitIo;
    case CLIPOPT_ERR_PARSE: return kExitParse;
    case CLIPOPT_ERR_INVALID_INPUT:
    case CLIPOPT_ERR_NULL_ARGUMENT:
    case CLIPOPT_ERR_BUFFER_SIZE: return kExitInvalid;
    case CLIPOPT_ERR_NUMERICAL:
    case CLIPOPT_ERR_INFEASIBLE:
    case CLIPOPT_ERR_UNSUPPORTED: return kExitSolver;
    case CLIPOPT_ERR_LIMIT_EXCEEDED: return kExitLimit;
    case CLIPOPT_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

struct ProblemInfo {
  std::size_t n = 0;
  std::size_t m = 0;
  double offset = 0.0;
};

ProblemInfo Info(const clipopt_problem* p) {
  ProblemInfo r;
  Check(clipopt_problem_dim(p, &r.n), "problem");
  Check(clipopt_problem_num_terms(p, &r.m), "problem");
  Check(clipopt_problem_offset(p, &r.offset), "problem");
  return r;
}

Json ProblemJson(const ProblemInfo& info) {
  return {{"n", info.n}, {"m", info.m}, {"offset", info.offset}};
}

ProblemPtr Load(const std::string& path) {
  clipopt_problem* p = nullptr;
  Check(clipopt_problem_load(path.c_str(), &p), "load");
  return ProblemPtr(p);
}

std::vector<double> XOf(const clipopt_report* r, std::size_t n) {
  std::vector<double> x(n);
  Check(clipopt_report_x(r, x.data(), n), "report");
  return x;
}

void WriteX(const OutputDir& out, const std::string& name, const std::vector<double>& x) {
  std::vector<std::vector<double>> rows;
  for (std::size_t j = 0; j < x.size(); ++j) rows.push_back({static_cast<double>(j), x[j]});
  out.WriteCsv(name, {"index", "value"}, rows);
}

// ---- solve ----

struct SolveOptions {
  std::string method = "altmin";
  double beta = 0.1;
  double eps = 1e-6;
  int max_iters = 100;
  std::string lambda0 = "half";
  bool with_bound = false;
};

struct SolveOutcome {
  Json report;
  std::vector<double> x;
};

BoundPtr DirectBound(const clipopt_problem* p) {
  clipopt_bound* b = nullptr;
  Check(clipopt_bound_direct(p, nullptr, 0, nullptr, &b), "bound");
  return BoundPtr(b);
}

SolveOutcome RunSolve(const clipopt_problem* p, const SolveOptions& o, const OutputDir& out) {
  const ProblemInfo info = Info(p);
  Json cfg = {{"method", o.method}, {"max_iters", o.max_iters}};
  clipopt_report* raw = nullptr;
  std::vector<double> lam0, x0;
  if (o.method == "ccp") {
    clipopt_ccp_config c;
    clipopt_ccp_config_init(&c);
    c.max_iters = o.max_iters;
    cfg["tol"] = c.tol;
    Check(clipopt_solve_ccp(p, &c, &raw), "ccp");
  } else if (o.method == "altmin" || o.method == "altmin-exact") {
    clipopt_altmin_config c;
    clipopt_altmin_config_init(&c);
    c.beta = o.beta;
    c.eps = o.eps;
    c.n_iter = o.max_iters;
    c.mode = o.method == "altmin" ? CLIPOPT_ALTMIN_INEXACT : CLIPOPT_ALTMIN_EXACT;
    if (o.lambda0 == "relaxation") {
      BoundPtr b = DirectBound(p);
      lam0.resize(info.m);
      x0.resize(info.n);
      Check(clipopt_bound_t(b.get(), lam0.data(), info.m), "bound");
      Check(clipopt_bound_x(b.get(), x0.data(), info.n), "bound");
      c.lambda0 = lam0.data();
      c.x0 = x0.data();
    }
    cfg["beta"] = o.beta;
    cfg["eps"] = o.eps;
    cfg["lambda0"] = o.lambda0;
    Check(clipopt_solve_altmin(p, &c, &raw), "altmin");
  } else {
    throw Failure(CLIPOPT_ERR_INVALID_INPUT, "unknown method " + o.method);
  }
  ReportPtr r(raw);
  clipopt_report_info ri;
  Check(clipopt_report_info_get(r.get(), &ri), "report");

  SolveOutcome res;
  res.x = XOf(r.get(), info.n);
  const double value = ri.objective_value + info.offset;
  res.report = {{"command", "solve"},
                {"solver", o.method},
                {"config", cfg},
                {"problem", ProblemJson(info)},
                {"objective", Number(value)},
                {"iterations", ri.iterations},
                {"termination", clipopt_termination_string(ri.termination)},
                {"inner_converged", ri.inner_converged != 0},
                {"wall_time", ri.wall_time}};
  if (o.with_bound) {
    BoundPtr b = DirectBound(p);
    clipopt_bound_info bi;
    Check(clipopt_bound_info_get(b.get(), &bi), "bound");
    const double q = bi.lower_bound + info.offset;
    res.report["bound"] = Number(q);
    res.report["gap"] = Number(value - q);
    res.report["bound_wall_time"] = bi.wall_time;
  }

  const std::size_t len = ri.trace_length;
  std::vector<double> obj(len), truth(len);
  Check(clipopt_report_trace(r.get(), CLIPOPT_TRACE_OBJECTIVE, obj.data(), len), "trace");
  Check(clipopt_report_trace(r.get(), CLIPOPT_TRACE_TRUE_OBJECTIVE, truth.data(), len), "trace");
  std::vector<std::vector<double>> rows, lrows;
  std::vector<std::string> lheader{"iteration"};
  for (std::size_t i = 0; i < info.m; ++i) lheader.push_back("lambda_" + std::to_string(i));
  std::vector<double> lam(info.m);
  for (std::size_t k = 0; k < len; ++k) {
    rows.push_back({static_cast<double>(k), obj[k] + info.offset, truth[k] + info.offset});
    Check(clipopt_report_lambda(r.get(), k, lam.data(), info.m), "lambda");
    std::vector<double> row{static_cast<double>(k)};
    row.insert(row.end(), lam.begin(), lam.end());
    lrows.push_back(std::move(row));
  }
  out.WriteCsv("trace.csv", {"iteration", "objective", "true_objective"}, rows);
  out.WriteCsv("lambda.csv", lheader, lrows);
  WriteX(out, "x.csv", res.x);
  return res;
}

// ---- bound ----

struct BoundOptions {
  std::string solver = "direct";
  double rho = 1.0;
  int max_iters = 2000;
};

Json RunBound(const clipopt_problem* p, const BoundOptions& o, const OutputDir& out) {
  const ProblemInfo info = Info(p);
  clipopt_bound* raw = nullptr;
  Json cfg = {{"solver", o.solver}};
  if (o.solver == "direct") {
    clipopt_relaxation_config c;
    clipopt_relaxation_config_init(&c);
    cfg["gap_tol"] = c.gap_tol;
    cfg["auto_ridge"] = c.auto_ridge;
    Check(clipopt_bound_direct(p, nullptr, 0, &c, &raw), "bound");
  } else if (o.solver == "admm") {
    clipopt_admm_config c;
    clipopt_admm_config_init(&c);
    c.rho = o.rho;
    c.max_iters = o.max_iters;
    cfg["rho"] = c.rho;
    cfg["max_iters"] = c.max_iters;
    cfg["primal_tol"] = c.primal_tol;
    cfg["dual_tol"] = c.dual_tol;
    cfg["auto_ridge"] = c.auto_ridge;
    Check(clipopt_bound_admm(p, &c, &raw), "admm");
  } else {
    throw Failure(CLIPOPT_ERR_INVALID_INPUT, "unknown bound solver " + o.solver);
  }
  BoundPtr b(raw);
  clipopt_bound_info bi;
  Check(clipopt_bound_info_get(b.get(), &bi), "bound");
  std::vector<double> x(info.n), t(info.m);
  Check(clipopt_bound_x(b.get(), x.data(), info.n), "bound");
  Check(clipopt_bound_t(b.get(), t.data(), info.m), "bound");
  WriteX(out, "x.csv", x);
  WriteX(out, "t.csv", t);
  return {{"command", "bound"},
          {"solver", o.solver},
          {"config", cfg},
          {"problem", ProblemJson(info)},
          {"bound", Number(bi.lower_bound + info.offset)},
          {"relaxation_objective", Number(bi.objective + info.offset)},
          {"converged", bi.converged != 0},
          {"auto_ridge", bi.auto_ridge},
          {"iterations", bi.iterations},
          {"primal_residual", bi.primal_residual},
          {"dual_residual", bi.dual_residual},
          {"wall_time", bi.wall_time}};
}

// ---- exact ----

struct ExactOptions {
  std::string mode = "exhaustive";
  int m_limit = 12;
  double gap = 1e-4;
  double abs_gap = 1e-4;
  std::int64_t node_limit = 1000000;
};

struct ExactOutcome {
  Json report;
  std::vector<double> x;
};

ExactOutcome RunExact(const clipopt_problem* p, const ExactOptions& o, const OutputDir& out) {
  const ProblemInfo info = Info(p);
  clipopt_global* raw = nullptr;
  Json cfg = {{"mode", o.mode}};
  if (o.mode == "exhaustive") {
    clipopt_exhaustive_config c;
    clipopt_exhaustive_config_init(&c);
    c.limit = o.m_limit;
    cfg["m_limit"] = c.limit;
    Check(clipopt_solve_exhaustive(p, &c, &raw), "exhaustive");
  } else if (o.mode == "bnb") {
    clipopt_bnb_config c;
    clipopt_bnb_config_init(&c);
    c.rel_gap_tol = o.gap;
    c.abs_gap_tol = o.abs_gap;
    c.node_limit = o.node_limit;
    cfg["rel_gap_tol"] = c.rel_gap_tol;
    cfg["abs_gap_tol"] = c.abs_gap_tol;
    cfg["node_limit"] = c.node_limit;
    Check(clipopt_solve_bnb(p, &c, &raw), "bnb");
  } else {
    throw Failure(CLIPOPT_ERR_INVALID_INPUT, "unknown exact mode " + o.mode);
  }
  GlobalPtr g(raw);
  clipopt_global_info gi;
  Check(clipopt_global_info_get(g.get(), &gi), "exact");
  ExactOutcome res;
  res.x.resize(info.n);
  Check(clipopt_global_x(g.get(), res.x.data(), info.n), "exact");
  res.report = {{"command", "exact"},
                {"solver", o.mode},
                {"config", cfg},
                {"problem", ProblemJson(info)},
                {"objective", Number(gi.value + info.offset)},
                {"bound", Number(gi.lower_bound + info.offset)},
                {"gap", Number(gi.bound_gap)},
                {"proven", gi.proven != 0},
                {"explored_nodes", gi.explored_nodes},
                {"enumerated_count", gi.enumerated_count},
                {"termination", clipopt_termination_string(gi.termination)},
                {"wall_time", gi.wall_time}};
  if (gi.trace_length > 0) {
    std::vector<double> inc(gi.trace_length), bnd(gi.trace_length);
    Check(clipopt_global_trace(g.get(), CLIPOPT_TRACE_INCUMBENT, inc.data(), inc.size()), "trace");
    Check(clipopt_global_trace(g.get(), CLIPOPT_TRACE_BOUND, bnd.data(), bnd.size()), "trace");
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < inc.size(); ++k) {
      rows.push_back({static_cast<double>(k), inc[k] + info.offset, bnd[k] + info.offset});
    }
    out.WriteCsv("trace.csv", {"node", "incumbent", "bound"}, rows);
  }
  WriteX(out, "x.csv", res.x);
  return res;
}

// ---- example ----

struct ExampleOptions {
  std::string name;
  std::uint64_t seed = 0;
  bool solve = false;
  // regression
  int n_points = 20;
  int outliers = 5;
  double alpha = 0.5;
  double ridge = 0.2;
  bool unclipped = false;
  // logistic
  double logistic_alpha = 1.0;
  bool per_train_weight = false;
  bool sweep = false;
  int sweep_points = 10;
  // lane
  int horizon = 100;
  double x_start = 1.0;
  double x_end = -1.0;
  bool no_obstacles = false;
  // subset-sum
  std::vector<long long> a{2, 3, -5};
};

void SaveProblem(const clipopt_problem* p, const OutputDir& out, const std::string& dir) {
  if (!out.enabled()) return;
  Check(clipopt_problem_save(p, (std::filesystem::path(dir) / "problem.json").string().c_str()), "save");
}

double Slope(const clipopt_problem* p) {
  ReportPtr r;
  clipopt_report* raw = nullptr;
  Check(clipopt_solve_altmin(p, nullptr, &raw), "altmin");
  r.reset(raw);
  return XOf(r.get(), 1)[0];
}

Json LogisticRun(std::uint64_t seed, double alpha, const clipopt_logistic_options& lo, ReportPtr* keep) {
  clipopt_logistic* raw = nullptr;
  Check(clipopt_gen_logistic(seed, alpha, &lo, &raw), "logistic");
  LogisticPtr d(raw);
  clipopt_problem* praw = nullptr;
  Check(clipopt_logistic_problem(d.get(), &praw), "logistic");
  ProblemPtr p(praw);
  const ProblemInfo info = Info(p.get());
  clipopt_report* rraw = nullptr;
  Check(clipopt_solve_altmin(p.get(), nullptr, &rraw), "altmin");
  ReportPtr r(rraw);
  clipopt_report_info ri;
  Check(clipopt_report_info_get(r.get(), &ri), "report");
  const std::vector<double> x = XOf(r.get(), info.n);
  double acc = 0.0, train_acc = 0.0;
  std::size_t detected = 0, hits = 0;
  Check(clipopt_logistic_test_accuracy(d.get(), x.data(), x.size(), &acc), "accuracy");
  Check(clipopt_logistic_train_accuracy(d.get(), x.data(), x.size(), &train_acc), "accuracy");
  Check(clipopt_logistic_outliers(d.get(), x.data(), x.size(), &detected, &hits), "outliers");
  if (keep) *keep = std::move(r);
  return {{"alpha", Number(alpha)},
          {"objective", Number(ri.objective_value)},
          {"iterations", ri.iterations},
          {"test_accuracy", acc},
          {"train_accuracy", train_acc},
          {"detected_outliers", detected},
          {"outlier_fraction", static_cast<double>(detected) / static_cast<double>(info.m)},
          {"planted_hits", hits},
          {"wall_time", ri.wall_time}};
}

Json RunExample(const ExampleOptions& o, const std::string& dir, const OutputDir& out) {
  Json report = {{"command", "example"}, {"example", o.name}, {"seed", o.seed}};
  if (o.name == "logistic") {
    clipopt_logistic_options lo;
    clipopt_logistic_options_init(&lo);
    lo.per_train_weight = o.per_train_weight ? 1 : 0;
    report["config"] = {{"alpha", Number(o.logistic_alpha)},
                        {"per_train_weight", o.per_train_weight},
                        {"n_points", lo.n_points},
                        {"n_train", lo.n_train},
                        {"n_flip", lo.n_flip},
                        {"ridge", lo.ridge}};
    clipopt_logistic* raw = nullptr;
    Check(clipopt_gen_logistic(o.seed, o.logistic_alpha, &lo, &raw), "logistic");
    LogisticPtr d(raw);
    clipopt_problem* praw = nullptr;
    Check(clipopt_logistic_problem(d.get(), &praw), "logistic");
    ProblemPtr p(praw);
    SaveProblem(p.get(), out, dir);
    report["problem"] = ProblemJson(Info(p.get()));
    if (o.solve) report["run"] = LogisticRun(o.seed, o.logistic_alpha, lo, nullptr);
    if (o.sweep) {
      Json runs = Json::array();
      std::vector<std::vector<double>> rows;
      const int k = std::max(o.sweep_points, 2);
      for (int i = 0; i <= k; ++i) {
        const double alpha = i == k ? kInf : std::pow(10.0, -1.0 + 2.0 * i / (k - 1));
        Json run = LogisticRun(o.seed, alpha, lo, nullptr);
        rows.push_back({alpha, run["test_accuracy"].get<double>(), run["outlier_fraction"].get<double>(),
                        static_cast<double>(run["planted_hits"].get<std::size_t>()),
                        run["objective"].is_null() ? kInf : run["objective"].get<double>(),
                        static_cast<double>(run["iterations"].get<int>())});
        runs.push_back(std::move(run));
      }
      out.WriteCsv("sweep.csv",
                   {"alpha", "test_accuracy", "outlier_fraction", "planted_hits", "objective", "iterations"}, rows);
      report["sweep"] = std::move(runs);
    }
    return report;
  }

  ProblemPtr p;
  clipopt_problem* raw = nullptr;
  if (o.name == "regression") {
    const double alpha = o.unclipped ? kInf : o.alpha;
    Check(clipopt_gen_regression(o.seed, o.n_points, o.outliers, alpha, o.ridge, &raw), "regression");
    p.reset(raw);
    report["config"] = {{"n_points", o.n_points}, {"outliers", o.outliers}, {"alpha", Number(alpha)},
                        {"ridge", o.ridge}};
  } else if (o.name == "lane") {
    clipopt_lane_options lo;
    clipopt_lane_options_init(&lo);
    lo.horizon = o.horizon;
    lo.x_start = o.x_start;
    lo.x_end = o.x_end;
    lo.no_obstacles = o.no_obstacles ? 1 : 0;
    Check(clipopt_gen_lane(&lo, &raw), "lane");
    p.reset(raw);
    report["config"] = {{"horizon", o.horizon}, {"x_start", o.x_start}, {"x_end", o.x_end},
                        {"obstacles", o.no_obstacles ? "none" : "default"}};
  } else if (o.name == "subset-sum") {
    Check(clipopt_gen_subset_sum(o.a.data(), o.a.size(), &raw), "subset-sum");
    p.reset(raw);
    report["config"] = {{"a", o.a}};
  } else {
    throw Failure(CLIPOPT_ERR_INVALID_INPUT, "unknown example " + o.name);
  }
  SaveProblem(p.get(), out, dir);
  report["problem"] = ProblemJson(Info(p.get()));
  if (!o.solve) return report;

  if (o.name == "subset-sum") {
    const ExactOutcome ex = RunExact(p.get(), ExactOptions{}, out);
    report["run"] = ex.report;
    double ones = 0.0;
    for (double v : ex.x) ones += v;
    report["halfspace_slack"] = ones - 1.0;
    return report;
  }
  SolveOptions so;
  so.with_bound = true;
  const SolveOutcome s = RunSolve(p.get(), so, out);
  report["run"] = s.report;
  if (o.name == "regression") {
    report["slope"] = s.x[0];
    clipopt_problem* ls = nullptr;
    Check(clipopt_gen_regression(o.seed, o.n_points, o.outliers, kInf, o.ridge, &ls), "regression");
    ProblemPtr lsp(ls);
    report["least_squares_slope"] = Slope(lsp.get());
  } else if (s.report.contains("bound")) {
    const double q = s.report["bound"].is_null() ? 0.0 : s.report["bound"].get<double>();
    if (q > 0.0 && !s.report["objective"].is_null()) report["ratio"] = s.report["objective"].get<double>() / q;
  }
  return report;
}

}  // namespace
}  // namespace cli

int main(int argc, char** argv) {
  using namespace cli;
  CLI::App app{"Solver for sums of clipped convex functions"};
  app.require_subcommand(1);
  std::string problem_path, out_dir;

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "run a local heuristic");
  solve->add_option("--problem", problem_path, "problem file")->required();
  solve->add_option("--out", out_dir, "output directory (report on stdout when omitted)");
  solve->add_option("--method", so.method)->check(CLI::IsMember({"altmin", "altmin-exact", "ccp"}));
  solve->add_option("--beta", so.beta)->check(CLI::PositiveNumber);
  solve->add_option("--eps", so.eps)->check(CLI::PositiveNumber);
  solve->add_option("--max-iters", so.max_iters)->check(CLI::PositiveNumber);
  solve->add_option("--lambda0", so.lambda0)->check(CLI::IsMember({"half", "relaxation"}));
  solve->add_flag("--with-bound", so.with_bound, "also compute the relaxation bound and the gap");

  BoundOptions bo;
  auto* bound = app.add_subcommand("bound", "compute the perspective relaxation lower bound");
  bound->add_option("--problem", problem_path, "problem file")->required();
  bound->add_option("--out", out_dir, "output directory");
  bound->add_option("--solver", bo.solver)->check(CLI::IsMember({"direct", "admm"}));
  bound->add_option("--rho", bo.rho)->check(CLI::PositiveNumber);
  bound->add_option("--max-iters", bo.max_iters)->check(CLI::PositiveNumber);

  ExactOptions eo;
  auto* exact = app.add_subcommand("exact", "solve to global optimality");
  exact->add_option("--problem", problem_path, "problem file")->required();
  exact->add_option("--out", out_dir, "output directory");
  exact->add_option("--mode", eo.mode)->check(CLI::IsMember({"exhaustive", "bnb"}));
  exact->add_option("--m-limit", eo.m_limit, "max clippable terms for exhaustive")->check(CLI::NonNegativeNumber);
  exact->add_option("--gap", eo.gap, "relative gap tolerance (bnb)")->check(CLI::NonNegativeNumber);
  exact->add_option("--abs-gap", eo.abs_gap, "absolute gap tolerance (bnb)")->check(CLI::NonNegativeNumber);
  exact->add_option("--node-limit", eo.node_limit)->check(CLI::PositiveNumber);

  ExampleOptions xo;
  std::string a_list;
  auto* example = app.add_subcommand("example", "generate (and optionally solve) a standard instance");
  example->add_option("name", xo.name)->required()->check(CLI::IsMember({"regression", "logistic", "lane", "subset-sum"}));
  example->add_option("--out", out_dir, "output directory");
  example->add_option("--seed", xo.seed);
  example->add_flag("--solve", xo.solve, "run the default solver pipeline");
  example->add_option("--n-points", xo.n_points)->check(CLI::PositiveNumber);
  example->add_option("--outliers", xo.outliers)->check(CLI::NonNegativeNumber);
  example->add_option("--alpha", xo.alpha, "clip level (regression)")->check(CLI::PositiveNumber);
  example->add_option("--ridge", xo.ridge)->check(CLI::NonNegativeNumber);
  example->add_flag("--unclipped", xo.unclipped, "regression with alpha = inf");
  example->add_option("--logistic-alpha", xo.logistic_alpha, "clip level (logistic); inf disables clipping");
  example->add_flag("--per-train-weight", xo.per_train_weight, "logistic weight 1/n_train instead of 1/n_points");
  example->add_flag("--sweep", xo.sweep, "logistic alpha sweep over [0.1, 10] plus inf");
  example->add_option("--sweep-points", xo.sweep_points)->check(CLI::Range(2, 1000));
  example->add_option("--horizon", xo.horizon)->check(CLI::Range(3, 100000));
  example->add_option("--x-start", xo.x_start);
  example->add_option("--x-end", xo.x_end);
  example->add_flag("--no-obstacles", xo.no_obstacles);
  example->add_option("--a", a_list, "comma-separated integers (subset-sum)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputDir out(out_dir);
    Json report;
    if (*solve) {
      report = RunSolve(Load(problem_path).get(), so, out).report;
    } else if (*bound) {
      report = RunBound(Load(problem_path).get(), bo, out);
    } else if (*exact) {
      report = RunExact(Load(problem_path).get(), eo, out).report;
    } else {
      if (!a_list.empty()) {
        xo.a.clear();
        std::stringstream ss(a_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
          std::size_t used = 0;
          try {
            xo.a.push_back(std::stoll(item, &used));
          } catch (const std::exception&) {
            used = 0;
          }
          if (used == 0 || used != item.size()) throw Failure(CLIPOPT_ERR_INVALID_INPUT, "bad integer in --a: " + item);
        }
      }
      report = RunExample(xo, out_dir, out);
    }
    report["version"] = clipopt_version();
    out.WriteReport(report);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what() << "\n";
    return ExitFor(f.status());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
