#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A base point lies outside the declared chart domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Division by zero or a negative integer power of zero during evaluation.
class SingularEval : public Error {
 public:
  using Error::Error;
};

// The fibre metric failed the positive-definiteness check at a point.
class SingularMetric : public Error {
 public:
  using Error::Error;
};

// A Gram matrix is numerically singular (condition number above threshold).
class DegenerateGram : public Error {
 public:
  DegenerateGram(const std::string& message, double condition)
      : Error(message), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

// A flat-only formula was invoked on a bundle whose flatness residual is
// above tolerance.
class NotFlatError : public Error {
 public:
  NotFlatError(const std::string& message, double residual)
      : Error(message), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// An endomorphism expected to be nilpotent is not.
class NotNilpotentError : public Error {
 public:
  using Error::Error;
};

// Requested fixture name is not in the catalog.
class UnknownFixtureError : public Error {
 public:
  using Error::Error;
};

// Syntax error in an expression string. Reports 1-based line/column of the
// offending token plus the set of token classes that would have been accepted.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column,
             std::vector<std::string> expected)
      : Error(compose(message, line, column, expected)),
        detail_(message),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  // The bare message, without the location/expected decoration that what()
  // carries; lets callers rewrap the error with more context.
  const std::string& detail() const { return detail_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string compose(const std::string& message, int line, int column,
                             const std::vector<std::string>& expected) {
    std::string out = "parse error at " + std::to_string(line) + ":" +
                      std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      out += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
        out += expected[i];
      }
    }
    return out;
  }

  std::string detail_;
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

struct ValidationIssue {
  std::string location;  // e.g. "theta[0][1][2]" or "h[0][1]"
  std::string message;
};

// Aggregated structural problems found while loading or validating a bundle.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues)
      : Error(compose(issues)), issues_(std::move(issues)) {}

  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  static std::string compose(const std::vector<ValidationIssue>& issues) {
    std::string out = "bundle validation failed";
    for (const auto& issue : issues) {
      out += "\n  " + issue.location + ": " + issue.message;
    }
    return out;
  }

  std::vector<ValidationIssue> issues_;
};

}  // namespace hodge
