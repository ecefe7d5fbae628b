#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor was asked for something out of range (size cap, bad modulus, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Input tables or subsets do not have the claimed algebraic structure.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Always a bug, never a math case.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A multiplicative closure reached zero.
class ZeroAbsorbed : public Error {
 public:
  using Error::Error;
};

/// An enumeration ran past its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Preconditions of a transfer statement could not be verified.
class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fcr
