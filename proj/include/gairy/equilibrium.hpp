#pragma once

#include "gairy/moments.hpp"

namespace gairy {

/// Support [a, b] of the Coulomb-fluid density, through X = a + b and Y = sqrt(ab):
///   3X^2 - 4Y^2 - 8t - 8 lambda / Y = 0            (lambda > 0 only)
///   X (5X^2 - 12Y^2 - 8t) - 16 (2n + lambda) = 0
struct EquilibriumSupport {
  Real n;
  WeightParams params;
  Real X;
  Real Y;
  Real a, b;
  Real A_mult;
  Real residual1;  // zero by construction when lambda = 0
  Real residual2;
  int iterations = 0;
};

/// Newton in (X, ln Y) seeded by the large-n series; lambda = 0 solves the cubic
/// 5X^3 - 8tX - 32n = 0 with Y = 0.
EquilibriumSupport solve_endpoints(const Real& n, const WeightParams& params,
                                   const PrecisionContext& ctx);

/// A = X(5X^2 - 12Y^2 - 24t)/48 - lambda ln((X+2Y)/4) - n ln((X^2-4Y^2)/16).
Real lagrange_multiplier(const EquilibriumSupport& support);

}  // namespace gairy
