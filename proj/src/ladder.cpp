#include "gairy/ladder.hpp"

#include <stdexcept>
#include <string>

#include "gairy/quadrature.hpp"

namespace gairy {
namespace {

void require_interior(const RecurrenceTable& table, int n, int lowest) {
  if (n < lowest || n > table.nmax - 1) {
    throw std::out_of_range("index n = " + std::to_string(n) + " needs " + std::to_string(lowest) +
                            " <= n <= nmax - 1 = " + std::to_string(table.nmax - 1));
  }
}

Real closed_R(const RecurrenceTable& tb, const Real& t, int n) {
  return tb.alpha[n] * tb.alpha[n] + tb.beta[n] + tb.beta[n + 1] - t;
}

Real closed_r(const RecurrenceTable& tb, int n) {
  if (n == 0) return Real(0);
  return (tb.alpha[n] + tb.alpha[n - 1]) * tb.beta[n] - n;
}

}  // namespace

LadderAux aux_closed(const RecurrenceTable& table, int n) {
  require_interior(table, n, 0);
  PrecisionScope scope(table.digits);
  Real t = table.params.t();
  return {n, closed_R(table, t, n), closed_r(table, n), AuxSource::closed_form};
}

LadderAux aux_integral(const RecurrenceTable& table, const MomentTable& moments, int n,
                       const PrecisionContext& ctx) {
  if (n < 0 || n > table.nmax) throw std::out_of_range("aux_integral: need 0 <= n <= nmax");
  PrecisionScope scope(ctx.working_digits);
  Real lambda = table.params.lambda();
  Real t = table.params.t();
  VectorIntegrand f = [&](const Real& y, std::span<Real> out) {
    // P_n and P_{n-1} from the recurrence, sharing one pass.
    Real prev(0), cur(1);
    for (int k = 0; k < n; ++k) {
      Real next = (y - table.alpha[k]) * cur - table.beta[k] * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    Real y2w = exp(lambda * log(y) + t * y - y * y * y / 3) * y * y;
    out[0] = y2w * cur * cur;
    out[1] = y2w * cur * prev;
  };
  HalflineHints hints;
  hints.singular_exponent = moments.params.lambda_double() + 2;
  for (double x : stationary_points(moments.params.t_double(), moments.params.lambda_double() + 2 + 2 * n)) {
    hints.breakpoints.push_back(x);
  }
  hints.breakpoints.push_back(table.alpha[n].to_double());
  auto v = integrate_halfline(f, 2, ctx, hints);
  Real r = n == 0 ? Real(0) : v[1] / table.h[n - 1] - n;
  return {n, v[0] / table.h[n] - t, std::move(r), AuxSource::integral};
}

LadderCoefficients ladder_coefficients(const RecurrenceTable& table, int n) {
  LadderAux aux = aux_closed(table, n);
  return {n, table.alpha[n], aux.R, table.beta[n], aux.r};
}

std::array<Real, 6> check_compatibility(const RecurrenceTable& tb, int n) {
  require_interior(tb, n, 1);
  PrecisionScope scope(tb.digits);
  Real lambda = tb.params.lambda();
  Real t = tb.params.t();
  const Real& a = tb.alpha[n];
  const Real& a1 = tb.alpha[n - 1];
  const Real& b = tb.beta[n];
  Real R = closed_R(tb, t, n);
  Real R1 = closed_R(tb, t, n - 1);
  Real r = closed_r(tb, n);
  Real r_next = closed_r(tb, n + 1);
  Real sum_alpha = -tb.p[n];

  return {
      tb.beta[n + 1] + b - (R - a * a + t),
      r_next + r - (lambda - a * R),
      r + n - b * (a + a1),
      r * r - lambda * r - b * R * R1,
      b * b - t * b + sum_alpha - b * (a * a1 + R + R1),
      2 * b * r - lambda * b - t * r + tb.sum_R[n] - b * (a * R1 + a1 * R),
  };
}

std::array<Real, 2> check_discrete_system(const RecurrenceTable& tb, int n) {
  require_interior(tb, n, 1);
  PrecisionScope scope(tb.digits);
  Real lambda = tb.params.lambda();
  Real t = tb.params.t();
  const Real& a = tb.alpha[n];
  const Real& a0 = tb.alpha[n - 1];
  const Real& a2 = tb.alpha[n + 1];
  const Real& b = tb.beta[n];
  const Real& b2 = tb.beta[n + 1];
  Real first = a * a * a - t * a + (2 * a + a0) * b + (2 * a + a2) * b2 - (2 * n + 1 + lambda);
  Real q = (a + a0) * b - n;
  Real second = q * q - lambda * q -
                b * (a * a + b + b2 - t) * (a0 * a0 + tb.beta[n - 1] + b - t);
  return {first, second};
}

std::array<Real, 2> check_pn_and_H(const RecurrenceTable& tb, int n) {
  require_interior(tb, n, 1);
  PrecisionScope scope(tb.digits);
  Real t = tb.params.t();
  const Real& a = tb.alpha[n];
  const Real& a0 = tb.alpha[n - 1];
  Real bracket = tb.beta[n] *
                 (a0 * a0 + a0 * a + a * a + tb.beta[n - 1] + tb.beta[n] + tb.beta[n + 1] - t);
  Real h_from_p = -tb.p[n];
  return {tb.p[n] + bracket, h_from_p - bracket};
}

Real check_ode(const RecurrenceTable& tb, int n, const Real& x, const PrecisionContext& ctx) {
  require_interior(tb, n, 1);
  if (!(x > 0)) throw DomainError("check_ode: x must be positive");
  PrecisionScope scope(tb.digits);
  Real lambda = tb.params.lambda();
  Real t = tb.params.t();
  LadderCoefficients cn = ladder_coefficients(tb, n);
  LadderCoefficients cm = ladder_coefficients(tb, n - 1);

  Real inv = 1 / x;
  Real A = x + cn.a_const + cn.a_pole * inv;
  if (abs(A) < pow10(-(ctx.target_digits / 2))) {
    throw DomainError("evaluation point too close to A_n zero");
  }
  Real A_prime = 1 - cn.a_pole * inv * inv;
  Real A_prev = x + cm.a_const + cm.a_pole * inv;
  Real B = cn.b_const + cn.b_pole * inv;
  Real B_prime = -cn.b_pole * inv * inv;
  Real vp = x * x - t - lambda * inv;

  PolyValue P = polynomial_eval(tb, n, x);
  Real ratio = A_prime / A;
  Real t1 = P.d2;
  Real t2 = -(vp + ratio) * P.d1;
  Real t3 = (B_prime - B * B - vp * B + tb.beta[n] * A * A_prev - ratio * B) * P.value;
  Real scale = max(abs(t1), max(abs(t2), abs(t3)));
  if (scale.is_zero()) return Real(0);
  return abs(t1 + t2 + t3) / scale;
}

}  // namespace gairy
