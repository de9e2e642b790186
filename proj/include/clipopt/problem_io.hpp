#pragma once

#include <string>
#include <string_view>

#include "clipopt/model.hpp"

namespace clipopt {

// A problem file: the Problem itself plus a constant objective offset that is
// only used when reporting (for instance the -n/4 of the subset-sum gadget).
struct ProblemDocument {
  Problem problem;
  double offset = 0.0;
};

// JSON problem format:
//
//   {
//     "n": 2,
//     "base": {
//       "ridge": 0.1,
//       "quad_terms":  [{"c": 1.0, "a": [1, 0], "b": 0.0}],
//       "hinge_terms": [{"c": 1e4, "a": [-1, -1], "b": 1.0}],
//       "box": {"l": [null, 0.0], "u": [null, 1.0]}
//     },
//     "terms": [
//       {"loss": {"kind": "square"}, "a": [1, 0], "b": -1, "weight": 1, "alpha": 0.5},
//       {"loss": {"kind": "huber", "delta": 0.5}, ...},
//       {"loss": {"kind": "logistic", "label": -1}, ...}
//     ],
//     "offset": 0.0
//   }
//
// "base" and everything inside it is optional; "box" null entries mean -inf /
// +inf. "alpha": null means +inf (never clipped). Unknown keys are rejected.
Problem ParseProblem(std::string_view text);
ProblemDocument ParseProblemDocument(std::string_view text);

std::string SerializeProblem(const Problem& p, double offset = 0.0);

ProblemDocument LoadProblemFile(const std::string& path);
void SaveProblemFile(const std::string& path, const Problem& p, double offset = 0.0);

}  // namespace clipopt
