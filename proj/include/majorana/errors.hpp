#pragma once

#include <stdexcept>
#include <string>

namespace majorana {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain (m <= 0, non-normalized SU(2) parameters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// X A = B X has only the trivial solution.
class NoIntertwinerError : public Error {
 public:
  using Error::Error;
};

/// X A = B X has a solution space of dimension > 1; the caller must add constraints.
class AmbiguousIntertwinerError : public Error {
 public:
  AmbiguousIntertwinerError(const std::string& what, std::size_t dimension)
      : Error(what), dimension_(dimension) {}
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

/// Momentum on the -z axis where the U1 rotation is singular.
class CoordinateSingularityError : public Error {
 public:
  using Error::Error;
};

/// Momentum direction requested at |p| = 0.
class DirectionUndefinedError : public Error {
 public:
  using Error::Error;
};

/// Bad suite name, mismatched reports, bad CLI selector.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace majorana
