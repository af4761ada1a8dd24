#pragma once

#include <stdexcept>
#include <string>

namespace bihcp {

/// Base of every error thrown by the library. The CLI maps all of these to
/// exit status 3; argument-grammar failures never reach the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: vectors of different ambient dimension, coefficient
/// lists of different length.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the value of an argument failed. `defect()` carries the
/// measured violation (e.g. |p| - 1 for a non-unit sphere point).
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double defect = 0.0)
      : Error(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

/// Non-finite data in a jet or sample.
class DataError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Vertical frame member could not be identified unambiguously.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// The order-4 curvature system has no real solution; carries the discriminant.
class NoSolutionError : public Error {
 public:
  NoSolutionError(const std::string& what, double discriminant)
      : Error(what), discriminant_(discriminant) {}
  double discriminant() const noexcept { return discriminant_; }

 private:
  double discriminant_;
};

/// A solution exists algebraically but violates a side constraint
/// (curvature sign, k2^2 range).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

}  // namespace bihcp
