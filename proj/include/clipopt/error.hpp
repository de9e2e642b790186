#pragma once

#include <stdexcept>
#include <string>

namespace clipopt {

enum class ErrorCode {
  kInvalidInput,
  kParse,
  kUnsupported,
  kNumerical,
  kLimitExceeded,
  kInfeasible,
  kIo,
};

const char* ToString(ErrorCode code);

// Base exception for everything the library throws on purpose. The C API maps
// `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class ParseErrorKind {
  kMalformed,          // not a well-formed document
  kMissingField,
  kWrongType,
  kUnknownAtom,
  kDimensionMismatch,
  kBoundOrder,         // l > u
  kInvalidValue,       // NaN, non-positive weight, ...
};

const char* ToString(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::string location, const std::string& detail)
      : Error(ErrorCode::kParse, Format(kind, location, detail)),
        kind_(kind),
        location_(std::move(location)) {}

  ParseErrorKind kind() const { return kind_; }
  // JSON pointer of the offending value, or "byte N" for syntax errors.
  const std::string& location() const { return location_; }

 private:
  static std::string Format(ParseErrorKind kind, const std::string& location,
                            const std::string& detail) {
    return std::string(ToString(kind)) + " at " + (location.empty() ? "/" : location) + ": " +
           detail;
  }

  ParseErrorKind kind_;
  std::string location_;
};

}  // namespace clipopt
