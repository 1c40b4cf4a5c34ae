#pragma once

#include <stdexcept>
#include <string>

namespace trunc_hermite {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A constructed object violates one of its documented invariants.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The working precision is insufficient for the requested computation.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, int index) : Error(what), index_(index) {}
  [[nodiscard]] int index() const { return index_; }

 private:
  int index_;
};

/// A forward nonlinear recursion left its admissible region.
class Blowup : public Error {
 public:
  Blowup(const std::string& what, int index) : Error(what), index_(index) {}
  /// First index whose value left the admissible interval.
  [[nodiscard]] int index() const { return index_; }

 private:
  int index_;
};

/// A finite-difference residual is dominated by truncation error at the
/// chosen step.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

/// The lowering-operator representation is singular at the evaluation point.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

class EigenFailure : public Error {
 public:
  using Error::Error;
};

class NewtonStall : public Error {
 public:
  using Error::Error;
};

class TooCloseToSupport : public Error {
 public:
  using Error::Error;
};

class TailNotConverged : public Error {
 public:
  using Error::Error;
};

}  // namespace trunc_hermite
