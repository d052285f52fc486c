#pragma once

#include <stdexcept>
#include <string>

namespace visco {

// Base of the library exception hierarchy. kind() is a stable tag suitable
// for matching in diagnostics; what() prepends it to the message.
class Error : public std::runtime_error {
 public:
  Error(const std::string& kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(kind) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Invalid input values, representations, or file contents.
// The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Breakdown inside a numerical procedure on otherwise valid input.
// The CLI maps these to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonpositiveRate : public ValidationError {
 public:
  explicit NonpositiveRate(const std::string& m) : ValidationError("NonpositiveRate", m) {}
};

class NegativeWeight : public ValidationError {
 public:
  explicit NegativeWeight(const std::string& m) : ValidationError("NegativeWeight", m) {}
};

class NonFinite : public ValidationError {
 public:
  explicit NonFinite(const std::string& m) : ValidationError("NonFinite", m) {}
};

class DomainError : public ValidationError {
 public:
  explicit DomainError(const std::string& m) : ValidationError("DomainError", m) {}
};

class GridError : public ValidationError {
 public:
  explicit GridError(const std::string& m) : ValidationError("GridError", m) {}
};

// Input function is identically zero, so it has no reciprocal.
class ZeroFunction : public ValidationError {
 public:
  explicit ZeroFunction(const std::string& m) : ValidationError("ZeroFunction", m) {}
};

// Material file does not match the schema.
class SchemaError : public ValidationError {
 public:
  explicit SchemaError(const std::string& m) : ValidationError("SchemaError", m) {}
};

// A guaranteed sign-change bracket could not be established or a located
// root escaped its bracket; indicates an input outside the representable
// class (or rates closer than double resolution).
class BracketFailure : public NumericalError {
 public:
  explicit BracketFailure(const std::string& m) : NumericalError("BracketFailure", m) {}
};

// A user-supplied transform evaluator returned a nonpositive or non-finite
// value at a node where the inversion needed it.
class SingularTransform : public NumericalError {
 public:
  explicit SingularTransform(const std::string& m) : NumericalError("SingularTransform", m) {}
};

}  // namespace visco
