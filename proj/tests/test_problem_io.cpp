#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "clipopt/generators.hpp"
#include "clipopt/problem_io.hpp"
#include "support/instances.hpp"

namespace clipopt {
namespace {

const char* kMinimal = R"({"n": 1, "terms": [{"loss": {"kind": "square"}, "a": [1], "b": 0, "weight": 1, "alpha": 0.25}]})";

ParseErrorKind KindOf(const std::string& text) {
  try {
    ParseProblem(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "document parsed: " << text;
  return ParseErrorKind::kMalformed;
}

TEST(ParseProblem, Minimal) {
  const Problem p = ParseProblem(kMinimal);
  EXPECT_EQ(p.dim(), 1);
  EXPECT_EQ(p.num_terms(), 1);
  EXPECT_EQ(p.term(0).alpha, 0.25);
}

TEST(ParseProblem, UnknownAtom) {
  EXPECT_EQ(KindOf(R"({"n": 1, "terms": [{"loss": {"kind": "cubic"}, "a": [1], "b": 0, "weight": 1, "alpha": 1}]})"),
            ParseErrorKind::kUnknownAtom);
}

TEST(ParseProblem, DistinctErrorKinds) {
  EXPECT_EQ(KindOf("{\"n\": 1, "), ParseErrorKind::kMalformed);
  EXPECT_EQ(KindOf(R"({"terms": []})"), ParseErrorKind::kMissingField);
  EXPECT_EQ(KindOf(R"({"n": "one", "terms": []})"), ParseErrorKind::kWrongType);
  EXPECT_EQ(KindOf(R"({"n": 2, "terms": [{"loss": {"kind": "square"}, "a": [1], "b": 0, "weight": 1, "alpha": 1}]})"),
            ParseErrorKind::kDimensionMismatch);
  EXPECT_EQ(KindOf(R"({"n": 1, "base": {"box": {"l": [2], "u": [1]}},
                       "terms": [{"loss": {"kind": "square"}, "a": [1], "b": 0, "weight": 1, "alpha": 1}]})"),
            ParseErrorKind::kBoundOrder);
  EXPECT_EQ(KindOf(R"({"n": 1, "terms": [{"loss": {"kind": "square"}, "a": [1], "b": 0, "weight": -1, "alpha": 1}]})"),
            ParseErrorKind::kInvalidValue);
}

TEST(ParseProblem, ErrorCarriesLocation) {
  try {
    ParseProblem(R"({"n": 1, "terms": [{"loss": {"kind": "cubic"}, "a": [1], "b": 0, "weight": 1, "alpha": 1}]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(e.location().find("/terms/0"), std::string::npos) << e.location();
  }
}

TEST(ParseProblem, NullsMeanInfinity) {
  const Problem p = ParseProblem(R"({"n": 2, "base": {"box": {"l": [null, 0], "u": [null, 1]}},
      "terms": [{"loss": {"kind": "logistic", "label": -1}, "a": [1, 2], "b": 0, "weight": 1, "alpha": null}]})");
  EXPECT_EQ(p.base().lower[0], -kInf);
  EXPECT_EQ(p.base().upper[0], kInf);
  EXPECT_EQ(p.term(0).alpha, kInf);
  EXPECT_EQ(p.term(0).loss.label, -1.0);
}

TEST(SerializeProblem, SubsetSumRoundTrip) {
  const SubsetSumInstance s = GenSubsetSum({2, 3, -5});
  const ProblemDocument d = ParseProblemDocument(SerializeProblem(s.problem, s.offset));
  EXPECT_TRUE(d.problem == s.problem);
  EXPECT_EQ(d.offset, s.offset);
}

TEST(SerializeProblem, RandomRoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Problem p = testing::RandomInstance(seed);
    const std::string text = SerializeProblem(p);
    const Problem q = ParseProblem(text);
    EXPECT_TRUE(p == q) << "seed " << seed;
    EXPECT_EQ(SerializeProblem(q), text);
  }
}

TEST(ProblemFile, SaveLoad) {
  const auto path = std::filesystem::temp_directory_path() / "clipopt_io_test.json";
  const RegressionData r = GenRegression(3);
  SaveProblemFile(path.string(), r.problem, 1.5);
  const ProblemDocument d = LoadProblemFile(path.string());
  EXPECT_TRUE(d.problem == r.problem);
  EXPECT_EQ(d.offset, 1.5);
  std::filesystem::remove(path);
}

TEST(ProblemFile, MissingFileIsIoError) {
  try {
    LoadProblemFile("/nonexistent/dir/problem.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace clipopt
