#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a fixed representation or enumeration limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input; `offset()` is the byte where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An iterative numeric method stopped before reaching the requested tolerance.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, double best_err)
      : Error(what), best_err_(best_err) {}
  double best_err() const noexcept { return best_err_; }

 private:
  double best_err_;
};

/// Two spectral radii could be separated neither numerically nor exactly.
class UndecidableComparison : public Error {
 public:
  using Error::Error;
};

}  // namespace splitex
