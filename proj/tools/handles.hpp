#pragma once

// RAII owners for the C API handles, plus the exception used to carry a
// failing status out to main().

#include <memory>
#include <stdexcept>
#include <string>

#include "clipopt/clipopt.h"

namespace cli {

struct Deleter {
  void operator()(clipopt_problem* p) const { clipopt_problem_free(p); }
  void operator()(clipopt_report* r) const { clipopt_report_free(r); }
  void operator()(clipopt_bound* b) const { clipopt_bound_free(b); }
  void operator()(clipopt_global* g) const { clipopt_global_free(g); }
  void operator()(clipopt_logistic* d) const { clipopt_logistic_free(d); }
};

using ProblemPtr = std::unique_ptr<clipopt_problem, Deleter>;
using ReportPtr = std::unique_ptr<clipopt_report, Deleter>;
using BoundPtr = std::unique_ptr<clipopt_bound, Deleter>;
using GlobalPtr = std::unique_ptr<clipopt_global, Deleter>;
using LogisticPtr = std::unique_ptr<clipopt_logistic, Deleter>;

class Failure : public std::runtime_error {
 public:
  Failure(clipopt_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  clipopt_status status() const { return status_; }

 private:
  clipopt_status status_;
};

inline void Check(clipopt_status s, const char* where) {
  if (s != CLIPOPT_OK) {
    throw Failure(s, std::string(where) + ": " + clipopt_status_string(s) + ": " + clipopt_last_error());
  }
}

}  // namespace cli
