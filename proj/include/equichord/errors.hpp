#pragma once

#include <stdexcept>
#include <string>

namespace equichord {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation's contract (order mismatch, bad range, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class SingularSeriesError : public Error {
 public:
  using Error::Error;
};

/// Supplied square-root branch does not square to the constant term.
class BranchError : public Error {
 public:
  using Error::Error;
};

class CompositionDomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

/// The multiplier of the unknown coefficient vanished, or the residual was
/// not affine in it.
class SolverDegeneracyError : public Error {
 public:
  SolverDegeneracyError(int order, const std::string& what)
      : Error("order " + std::to_string(order) + ": " + what), order_(order) {}
  int order() const noexcept { return order_; }

 private:
  int order_;
};

/// Two redundant routes to the same mathematical fact disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Point outside U_c (or on the puncture) for the planar map.
class DomainError : public Error {
 public:
  enum class Kind { Puncture, OutsideDisk, AxisRange, NonFinite };
  DomainError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  using Error::Error;
};

class FiberSearchError : public Error {
 public:
  using Error::Error;
};

}  // namespace equichord
