#pragma once

#include <stdexcept>
#include <string>

#include "gairy/real.hpp"

namespace gairy {

/// Requested accuracy plus the digits actually carried while computing.
struct PrecisionContext {
  int target_digits = 30;
  int working_digits = 50;
  /// Relative quadrature tolerance is 10^-quad_tol_digits.
  int quad_tol_digits = 45;

  /// working = max(target + 20, working_hint); quadrature tolerance = working - 5.
  static PrecisionContext for_target(int target_digits, int working_hint = 0);

  /// Same target, different working precision (quadrature tolerance follows).
  PrecisionContext with_working(int working) const;

  Real quad_rel_tol() const { return pow10(-quad_tol_digits); }
  Real target_tol() const { return pow10(-target_digits); }
};

/// Argument outside an operation's domain (x <= 0, lambda <= -1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The computation could not reach the requested accuracy.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest precision multiple tried by the escalation loop.
inline constexpr int kMaxEscalation = 16;

/// |a - b| / max(|a|, |b|), zero when both vanish.
Real relative_difference(const Real& a, const Real& b);

/// Number of agreeing significant digits implied by relative_difference.
double agreeing_digits(const Real& a, const Real& b);

}  // namespace gairy
