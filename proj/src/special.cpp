#include "gairy/special.hpp"

#include <cmath>

namespace gairy {
namespace {

constexpr int kGuardDigits = 20;

// Asymptotic corrections stop once they fall below this many digits of the result.
Real negligible(int digits) { return pow10(-(digits + 5)); }

// ln G(1+z) for z in (-1, 1] from the Weierstrass product
//   ln G(1+z) = (z/2) ln 2pi - (z + (1+gamma) z^2)/2 + sum_k g(k),
//   g(k) = k ln(1+z/k) - z + z^2/(2k).
Real log_barnes_g_weierstrass(const Real& z, int digits) {
  const long terms = static_cast<long>(0.6 * digits) + 10;
  Real z2 = z * z;

  Real head(0);
  for (long k = 1; k < terms; ++k) {
    head += k * log1p(z / k) - z + z2 / (2 * k);
  }

  // Euler-Maclaurin for sum_{k >= N} g(k).
  Real x(terms);
  Real xz = x + z;
  Real log_x = log(x);
  Real log_xz = log(xz);
  Real antiderivative = (x * x - z2) / 2 * log_xz - x * x / 2 * log_x - z * x / 2 + z2 / 2 * log_x;
  Real g_at_n = x * (log_xz - log_x) - z + z2 / (2 * x);
  Real tail = -z2 / 4 - antiderivative + g_at_n / 2;

  // j = 1 uses g'(x) = ln(x+z) + x/(x+z) - ln x - 1 - z^2/(2x^2).
  Real g1 = log_xz + x / xz - log_x - 1 - z2 / (2 * x * x);
  tail -= bernoulli_even(1) / 2 * g1;

  Real eps = negligible(digits);
  Real previous_mag(0);
  for (unsigned long j = 2;; ++j) {
    const long m = static_cast<long>(2 * j - 1);  // odd derivative order, >= 3
    // g^(m)(x) = (-1)^m (m-2)! [(x+mz)/(x+z)^m - x^(1-m)] + (z^2/2)(-1)^m m!/x^(m+1)
    Real deriv = factorial(static_cast<unsigned long>(m - 2)) *
                     ((x + m * z) / pow(xz, m) - pow(x, 1 - m)) +
                 z2 / 2 * factorial(static_cast<unsigned long>(m)) / pow(x, m + 1);
    deriv = -deriv;  // (-1)^m with m odd
    Real term = bernoulli_even(j) / factorial(2 * j) * deriv;
    tail -= term;
    Real mag = abs(term);
    if (mag <= eps * (abs(head) + abs(tail))) break;
    if (j > 4 && mag > previous_mag) {
      throw PrecisionError("log_barnes_g: Euler-Maclaurin tail diverged");
    }
    previous_mag = mag;
  }

  Real two_pi = 2 * const_pi();
  return z / 2 * log(two_pi) - (z + (1 + const_euler()) * z2) / 2 + head + tail;
}

}  // namespace

Real bernoulli_even(unsigned long j) {
  // B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
  Real two_pi = 2 * const_pi();
  Real b = 2 * factorial(2 * j) * zeta(2 * j) / pow(two_pi, static_cast<long>(2 * j));
  return j % 2 == 1 ? b : -b;
}

Real log_gamma(const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("log_gamma: argument must be positive");
  PrecisionScope scope(ctx.working_digits);
  return lngamma(x);
}

Real log_barnes_g(const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("log_barnes_g: argument must be positive");
  const int digits = ctx.working_digits + kGuardDigits;
  Real result;
  {
    PrecisionScope scope(digits);
    Real arg = x;
    Real shift(0);
    while (arg > 2) {
      arg = arg - 1;
      shift += lngamma(arg);
    }
    result = log_barnes_g_weierstrass(arg - 1, digits) + shift;
  }
  PrecisionScope scope(ctx.working_digits);
  return result + 0;
}

Real zeta_prime_minus_one(const PrecisionContext& ctx) {
  const int digits = ctx.working_digits + kGuardDigits;
  Real result;
  {
    PrecisionScope scope(digits);
    const long n = digits + 10;
    Real sum(0);
    for (long k = 2; k <= n; ++k) {
      Real kk(k);
      sum += kk * log(kk);
    }
    Real nn(n);
    Real log_a = sum - (nn * nn / 2 + nn / 2 + Real(1) / 12) * log(nn) + nn * nn / 4;
    Real eps = negligible(digits);
    for (unsigned long j = 2;; ++j) {
      const long m = static_cast<long>(2 * j);
      Real term = bernoulli_even(j) / (m * (m - 1) * (m - 2)) * pow(nn, 2 - m);
      log_a += term;
      if (abs(term) <= eps) break;
    }
    result = Real(1) / 12 - log_a;
  }
  PrecisionScope scope(ctx.working_digits);
  return result + 0;
}

}  // namespace gairy
