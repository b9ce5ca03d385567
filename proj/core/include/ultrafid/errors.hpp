#pragma once

#include <stdexcept>
#include <string>

namespace ultrafid {

/// Argument outside the domain of an operation (off the slit plane, n < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a point where the requested quantity is singular (G' at +-2).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solver ran out of iterations before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path continuation could not advance without crossing a forbidden ray.
class ContinuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ultrafid
