#pragma once

#include "gairy/precision.hpp"
#include "gairy/real.hpp"

namespace gairy {

/// ln Gamma(x) for x > 0.
Real log_gamma(const Real& x, const PrecisionContext& ctx);

/// ln G(x) for x > 0, G the Barnes G-function (G(1) = G(2) = 1).
///
/// Arguments above 2 are brought down with ln G(x) = ln G(x-1) + ln Gamma(x-1);
/// the rest use the Weierstrass product for G(1+z), z in (-1, 1], whose tail
/// beyond k = N is summed by Euler-Maclaurin.
Real log_barnes_g(const Real& x, const PrecisionContext& ctx);

/// zeta'(-1) = 1/12 - ln A, with ln A the Glaisher-Kinkelin constant obtained
/// from the Euler-Maclaurin expansion of sum_{k<=N} k ln k.
Real zeta_prime_minus_one(const PrecisionContext& ctx);

/// Bernoulli number B_{2j} at working precision, j >= 1.
Real bernoulli_even(unsigned long j);

}  // namespace gairy
