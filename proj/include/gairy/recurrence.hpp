#pragma once

#include <vector>

#include "gairy/moments.hpp"

namespace gairy {

/// Monic orthogonal polynomials for one weight:
///   x P_n = P_{n+1} + alpha_n P_n + beta_n P_{n-1}.
struct RecurrenceTable {
  WeightParams params;
  int nmax = 0;
  int digits = 0;
  std::vector<Real> alpha;  // 0..nmax
  std::vector<Real> beta;   // 0..nmax, beta_0 = 0
  std::vector<Real> h;      // 0..nmax
  std::vector<Real> p;      // 0..nmax+1, p(0) = 0
  /// coeffs[n][k] is the x^k coefficient of P_n; coeffs[n][n] = 1.
  std::vector<std::vector<Real>> coeffs;
  /// sum_R[n] = sum_{j<n} R_j with R_j = alpha_j^2 + beta_j + beta_{j+1} - t; 0..nmax.
  std::vector<Real> sum_R;

  /// ln D_n = sum_{j<n} ln h_j for n = 0..nmax+1.
  std::vector<Real> log_hankel() const;
};

struct HankelSequence {
  int digits = 0;
  std::vector<Real> log_d;   // ln D_0..ln D_{nmax+1}
  std::vector<Real> pivots;  // d_0..d_nmax, D_n = prod_{j<n} d_j

  /// exp(ln D_{n+1} + ln D_{n-1} - 2 ln D_n) for 1 <= n <= nmax.
  Real beta(int n) const;
};

/// Stieltjes procedure with exact coefficient vectors; inner products are
/// expanded through the moment table. Needs moments.jmax() >= 2 nmax + 2.
RecurrenceTable build_recurrence(const MomentTable& moments, int nmax, const PrecisionContext& ctx);

/// LDL factorisation of the (nmax+1) x (nmax+1) Hankel matrix (mu_{i+j}).
HankelSequence hankel_determinants_direct(const MomentTable& moments, int nmax,
                                          const PrecisionContext& ctx);

struct PolyValue {
  Real value, d1, d2;
};

/// P_n(x), P_n'(x), P_n''(x) from the differentiated three-term recurrence.
PolyValue polynomial_eval(const RecurrenceTable& table, int n, const Real& x);

}  // namespace gairy
