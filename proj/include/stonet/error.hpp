#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stonet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a matrix or map operation do not have compatible shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A named law failed on a concrete witness.
struct LawViolation {
  std::string law;
  std::string witness;
};

/// Raised when a structure is rejected at construction because one of its
/// defining laws fails.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<LawViolation> violations)
      : Error(describe(violations)), violations_(std::move(violations)) {}

  const std::vector<LawViolation>& violations() const noexcept {
    return violations_;
  }

 private:
  static std::string describe(const std::vector<LawViolation>& vs) {
    std::string out = "validation failed";
    for (const auto& v : vs) {
      out += "; " + v.law + ": " + v.witness;
    }
    return out;
  }

  std::vector<LawViolation> violations_;
};

}  // namespace stonet
