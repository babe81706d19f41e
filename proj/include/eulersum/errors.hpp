#pragma once

#include <stdexcept>
#include <string>

namespace eulersum {

// A summation or acceleration scheme could not reach the requested target
// within its term budget.  Carries the best value reached so callers can
// report it.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(const std::string& what, double best_value, double best_error)
      : std::runtime_error(what), best_value(best_value), best_error(best_error) {}
  double best_value;
  double best_error;
};

// Parameters fall outside the region where a contour-integral formula holds.
class ValidityViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A truncated contour cannot meet the requested tolerance; the a-priori
// remainder bound is attached.
class TruncationTooSmall : public std::runtime_error {
 public:
  TruncationTooSmall(const std::string& what, double bound)
      : std::runtime_error(what), remainder_bound(bound) {}
  double remainder_bound;
};

class UnknownIdentity : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace eulersum
