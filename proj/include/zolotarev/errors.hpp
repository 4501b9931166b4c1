#pragma once

#include <stdexcept>
#include <string>

namespace zolotarev {

/// Argument outside the numeric domain of a closed-form expression.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Constraint value outside the regime the solver handles (improper Zolotarev case).
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An iterative method failed to bracket or reach its tolerance.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The norm handed to an alternation scan disagrees with the polynomial's actual maximum.
class DegenerateNorm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zolotarev
