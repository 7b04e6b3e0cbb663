#pragma once

#include <stdexcept>

namespace descartes {

/// Input outside an operation's domain: non-positive radii, a circle through
/// the inversion centre, a horocycle tangent at infinity where a finite one is
/// required, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numeric procedure failed one of its own postconditions (bracket
/// expansion ran away, a recursion hit a zero divisor, two independent
/// solvers disagree).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact expansion requested beyond the supported number of variables.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace descartes
