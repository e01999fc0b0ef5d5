#pragma once

#include <string>

#include "gairy/precision.hpp"
#include "gairy/real.hpp"

namespace check {

/// Relative agreement in decimal digits between a computed value and a decimal reference.
inline double digits(const gairy::Real& got, const std::string& want) {
  gairy::PrecisionScope scope(120);
  return gairy::agreeing_digits(got, gairy::Real(want));
}

inline double digits(const gairy::Real& a, const gairy::Real& b) {
  return gairy::agreeing_digits(a, b);
}

/// log10 |x|, -inf for zero.
inline double mag(const gairy::Real& x) { return x.log10_abs(); }

}  // namespace check
