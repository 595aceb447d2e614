#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twodir {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a mask fails the simple-eigenvalue-one test that every moment
/// recursion depends on.
class ConditionEError : public Error {
public:
  using Error::Error;
};

class SingularSystemError : public Error {
public:
  SingularSystemError(const std::string& what, double pivot)
      : Error(what), pivot_(pivot) {}
  double pivot() const noexcept { return pivot_; }

private:
  double pivot_;
};

class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// Syntax or domain error in a constant expression; position is a 0-based
/// character offset into the source text.
class ExprError : public Error {
public:
  ExprError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class MaskFileError : public Error {
public:
  using Error::Error;
};

}  // namespace twodir
