#include "gairy/precision.hpp"

#include <algorithm>
#include <limits>

namespace gairy {

PrecisionContext PrecisionContext::for_target(int target_digits, int working_hint) {
  if (target_digits < 1) throw std::invalid_argument("target_digits must be positive");
  PrecisionContext ctx;
  ctx.target_digits = target_digits;
  ctx.working_digits = std::max(target_digits + 20, working_hint);
  ctx.quad_tol_digits = ctx.working_digits - 5;
  return ctx;
}

PrecisionContext PrecisionContext::with_working(int working) const {
  PrecisionContext ctx = *this;
  ctx.working_digits = std::max(working, target_digits);
  ctx.quad_tol_digits = ctx.working_digits - 5;
  return ctx;
}

Real relative_difference(const Real& a, const Real& b) {
  Real scale = max(abs(a), abs(b));
  if (scale.is_zero()) return Real(0);
  return abs(a - b) / scale;
}

double agreeing_digits(const Real& a, const Real& b) {
  Real rel = relative_difference(a, b);
  if (rel.is_zero()) return std::numeric_limits<double>::infinity();
  return -rel.log10_abs();
}

}  // namespace gairy
