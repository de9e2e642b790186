#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "clipopt/clipopt.h"

namespace {

const char* kTwoWell = R"({"n": 1, "terms": [
  {"loss": {"kind": "square"}, "a": [1], "b": 0, "weight": 1, "alpha": 1},
  {"loss": {"kind": "square"}, "a": [1], "b": -10, "weight": 1, "alpha": 1}]})";

clipopt_problem* Parse(const char* text) {
  clipopt_problem* p = nullptr;
  EXPECT_EQ(clipopt_problem_parse(text, std::strlen(text), &p), CLIPOPT_OK) << clipopt_last_error();
  return p;
}

TEST(CApi, ParseAndEvaluate) {
  clipopt_problem* p = Parse(kTwoWell);
  size_t n = 0, m = 0;
  ASSERT_EQ(clipopt_problem_dim(p, &n), CLIPOPT_OK);
  ASSERT_EQ(clipopt_problem_num_terms(p, &m), CLIPOPT_OK);
  EXPECT_EQ(n, 1u);
  EXPECT_EQ(m, 2u);
  const double x = 5.0;
  double v = 0.0;
  ASSERT_EQ(clipopt_eval_objective(p, &x, 1, &v), CLIPOPT_OK);
  EXPECT_EQ(v, 2.0);
  double raw = 0.0, clipped = 0.0;
  ASSERT_EQ(clipopt_eval_term(p, 1, &x, 1, &raw, &clipped), CLIPOPT_OK);
  EXPECT_EQ(raw, 25.0);
  EXPECT_EQ(clipped, 1.0);
  EXPECT_EQ(clipopt_eval_term(p, 2, &x, 1, &raw, &clipped), CLIPOPT_ERR_INVALID_INPUT);
  EXPECT_EQ(clipopt_eval_objective(p, &x, 2, &v), CLIPOPT_ERR_BUFFER_SIZE);
  clipopt_problem_free(p);
}

TEST(CApi, ErrorsAreReported) {
  clipopt_problem* p = nullptr;
  const std::string bad = R"({"n": 1, "terms": [{"loss": {"kind": "cubic"}, "a": [1], "b": 0, "weight": 1, "alpha": 1}]})";
  EXPECT_EQ(clipopt_problem_parse(bad.data(), bad.size(), &p), CLIPOPT_ERR_PARSE);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(clipopt_last_error()).find("unknown"), std::string::npos) << clipopt_last_error();
  EXPECT_EQ(clipopt_problem_parse(nullptr, 0, &p), CLIPOPT_ERR_NULL_ARGUMENT);
  EXPECT_EQ(clipopt_problem_load("/nonexistent/p.json", &p), CLIPOPT_ERR_IO);
  EXPECT_STREQ(clipopt_status_string(CLIPOPT_OK), "ok");
  EXPECT_NE(std::strlen(clipopt_version()), 0u);
  clipopt_problem_free(nullptr);
}

TEST(CApi, SerializeRoundTrip) {
  const long long a[] = {2, 3, -5};
  clipopt_problem* p = nullptr;
  ASSERT_EQ(clipopt_gen_subset_sum(a, 3, &p), CLIPOPT_OK);
  char* text = nullptr;
  ASSERT_EQ(clipopt_problem_serialize(p, &text), CLIPOPT_OK);
  clipopt_problem* q = Parse(text);
  char* again = nullptr;
  ASSERT_EQ(clipopt_problem_serialize(q, &again), CLIPOPT_OK);
  EXPECT_STREQ(text, again);
  double offset = 0.0;
  ASSERT_EQ(clipopt_problem_offset(q, &offset), CLIPOPT_OK);
  EXPECT_EQ(offset, -0.75);
  clipopt_string_free(text);
  clipopt_string_free(again);
  clipopt_problem_free(p);
  clipopt_problem_free(q);
}

TEST(CApi, AltMinReport) {
  clipopt_problem* p = Parse(kTwoWell);
  clipopt_altmin_config cfg;
  clipopt_altmin_config_init(&cfg);
  const double lambda0[] = {1.0, 0.0};
  cfg.lambda0 = lambda0;
  clipopt_report* r = nullptr;
  ASSERT_EQ(clipopt_solve_altmin(p, &cfg, &r), CLIPOPT_OK);
  clipopt_report_info info;
  ASSERT_EQ(clipopt_report_info_get(r, &info), CLIPOPT_OK);
  EXPECT_NEAR(info.objective_value, 1.0, 1e-9);
  EXPECT_EQ(info.termination, CLIPOPT_TERM_TOLERANCE_MET);
  std::vector<double> trace(info.trace_length);
  ASSERT_EQ(clipopt_report_trace(r, CLIPOPT_TRACE_OBJECTIVE, trace.data(), trace.size()), CLIPOPT_OK);
  for (std::size_t k = 1; k < trace.size(); ++k) EXPECT_LE(trace[k], trace[k - 1] + 1e-9);
  double lam[2];
  ASSERT_EQ(clipopt_report_lambda(r, info.trace_length - 1, lam, 2), CLIPOPT_OK);
  EXPECT_EQ(lam[0], 1.0);
  EXPECT_EQ(clipopt_report_lambda(r, info.trace_length, lam, 2), CLIPOPT_ERR_INVALID_INPUT);
  double x = 0.0;
  ASSERT_EQ(clipopt_report_x(r, &x, 1), CLIPOPT_OK);
  EXPECT_NEAR(x, 0.0, 1e-6);
  clipopt_report_free(r);
  clipopt_problem_free(p);
}

TEST(CApi, BoundsAndExactSolvers) {
  clipopt_problem* p = nullptr;
  ASSERT_EQ(clipopt_gen_regression(0, 20, 5, 0.5, 0.2, &p), CLIPOPT_OK);
  clipopt_relaxation_config rc;
  clipopt_relaxation_config_init(&rc);
  clipopt_bound* b = nullptr;
  ASSERT_EQ(clipopt_bound_direct(p, nullptr, 0, &rc, &b), CLIPOPT_OK);
  clipopt_bound_info bi;
  ASSERT_EQ(clipopt_bound_info_get(b, &bi), CLIPOPT_OK);
  std::vector<double> t(bi.num_terms);
  ASSERT_EQ(clipopt_bound_t(b, t.data(), t.size()), CLIPOPT_OK);
  for (double v : t) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }

  clipopt_bnb_config bc;
  clipopt_bnb_config_init(&bc);
  clipopt_global* g = nullptr;
  ASSERT_EQ(clipopt_solve_bnb(p, &bc, &g), CLIPOPT_OK);
  clipopt_global_info gi;
  ASSERT_EQ(clipopt_global_info_get(g, &gi), CLIPOPT_OK);
  EXPECT_TRUE(gi.proven);
  EXPECT_LE(bi.lower_bound, gi.value);

  clipopt_exhaustive_config ec;
  clipopt_exhaustive_config_init(&ec);
  clipopt_global* e = nullptr;
  EXPECT_EQ(clipopt_solve_exhaustive(p, &ec, &e), CLIPOPT_ERR_LIMIT_EXCEEDED);
  EXPECT_EQ(e, nullptr);

  clipopt_global_free(g);
  clipopt_bound_free(b);
  clipopt_problem_free(p);
}

TEST(CApi, NullArguments) {
  clipopt_report_info info;
  EXPECT_EQ(clipopt_report_info_get(nullptr, &info), CLIPOPT_ERR_NULL_ARGUMENT);
  EXPECT_EQ(clipopt_solve_altmin(nullptr, nullptr, nullptr), CLIPOPT_ERR_NULL_ARGUMENT);
  EXPECT_EQ(clipopt_gen_regression(0, 20, 5, 0.5, 0.2, nullptr), CLIPOPT_ERR_NULL_ARGUMENT);
}

}  // namespace
