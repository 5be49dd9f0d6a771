#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace natsu2 {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different coframe dimensions or grades.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A k-form has a component outside the span of the invariant generators.
class OutsideSpan : public Error {
 public:
  explicit OutsideSpan(double residual)
      : Error("form has a component outside the invariant span (residual " +
              std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A solver or constructor input violates one of the defining equations.
/// `label()` is the violated equation written out, e.g. "a3*p>0".
class ConstraintViolation : public Error {
 public:
  ConstraintViolation(std::string label, const std::string& detail)
      : Error(label + ": " + detail), label_(std::move(label)) {}

  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

}  // namespace natsu2
