#include "gairy/toda.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gairy {
namespace {

struct Snapshot {
  std::vector<Real> alpha, beta, log_h, p, log_d;
};

Snapshot snapshot(const RecurrenceTable& tb) {
  PrecisionScope scope(tb.digits);
  Snapshot s{tb.alpha, tb.beta, {}, tb.p, tb.log_hankel()};
  for (const auto& h : tb.h) s.log_h.push_back(log(h));
  return s;
}

struct Stencil {
  Snapshot minus, centre, plus;
  Real two_h;  // actual (t+h) - (t-h) after decimal round trip
  Real h;
};

Stencil build_stencil(const WeightParams& params, int nmax, const Real& h_step,
                      const PrecisionContext& centre_ctx, const RecurrenceTable& centre) {
  const int digits = centre_ctx.working_digits;
  PrecisionScope scope(digits);
  WeightParams lo = params.shifted_t(-h_step, digits);
  WeightParams hi = params.shifted_t(h_step, digits);
  // The centre run was accepted because it agreed with a run at half its
  // precision, so that precision is already certified for the neighbours.
  PrecisionContext side = centre_ctx.with_working(
      std::max(centre_ctx.target_digits + 20, centre_ctx.working_digits / 2));
  ExactSolution below = solve_exact_at(lo, nmax, side);
  ExactSolution above = solve_exact_at(hi, nmax, side);
  Real two_h = hi.t() - lo.t();
  return {snapshot(below.recurrence), snapshot(centre), snapshot(above.recurrence), two_h, h_step};
}

std::vector<TodaCheckReport> reports_from(const Stencil& s, const std::string& t, int nmax,
                                          int digits) {
  PrecisionScope scope(digits);
  auto d = [&](const std::vector<Real>& lo, const std::vector<Real>& hi, int n) {
    return (hi[n] - lo[n]) / s.two_h;
  };
  const Snapshot& c = s.centre;
  std::vector<TodaCheckReport> out;
  for (int n = 0; n < nmax; ++n) {
    TodaCheckReport r;
    r.n = n;
    r.t = t;
    r.h_step = s.h;
    r.residual_toda_alpha = d(s.minus.alpha, s.plus.alpha, n) - (c.beta[n + 1] - c.beta[n]);
    r.residual_toda_beta =
        n == 0 ? Real(0)
               : d(s.minus.beta, s.plus.beta, n) - c.beta[n] * (c.alpha[n] - c.alpha[n - 1]);
    r.residual_hna = d(s.minus.log_h, s.plus.log_h, n) - c.alpha[n];
    r.residual_dpn = d(s.minus.p, s.plus.p, n) + c.beta[n];
    r.residual_Hn = d(s.minus.log_d, s.plus.log_d, n) + c.p[n];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Real default_toda_step(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working_digits);
  return pow10(-(ctx.target_digits / 4));
}

std::vector<TodaCheckReport> toda_report(const WeightParams& params, int nmax, const Real& h_step,
                                         const PrecisionContext& ctx) {
  if (nmax < 1) throw std::invalid_argument("toda_report: nmax must be at least 1");
  if (!(h_step > 0)) throw std::invalid_argument("toda_report: step must be positive");
  ExactSolution centre = solve_exact(params, nmax, ctx);
  Stencil s = build_stencil(params, nmax, h_step, centre.ctx, centre.recurrence);
  return reports_from(s, params.t_text(), nmax, centre.ctx.working_digits);
}

TodaCheckReport toda_residuals(const WeightParams& params, int n, const Real& h_step,
                               const PrecisionContext& ctx) {
  if (n < 0) throw std::invalid_argument("toda_residuals: n must be non-negative");
  return toda_report(params, n + 1, h_step, ctx).at(n);
}

std::vector<TodaRichardson> toda_richardson(const WeightParams& params, int nmax,
                                            const Real& h_step, const PrecisionContext& ctx) {
  if (nmax < 1) throw std::invalid_argument("toda_richardson: nmax must be at least 1");
  ExactSolution centre = solve_exact(params, nmax, ctx);
  const int digits = centre.ctx.working_digits;
  PrecisionScope scope(digits);
  Real half = h_step / 2;
  Stencil coarse = build_stencil(params, nmax, h_step, centre.ctx, centre.recurrence);
  Stencil fine = build_stencil(params, nmax, half, centre.ctx, centre.recurrence);
  auto rc = reports_from(coarse, params.t_text(), nmax, digits);
  auto rf = reports_from(fine, params.t_text(), nmax, digits);

  std::vector<TodaRichardson> out;
  for (int n = 0; n < nmax; ++n) {
    TodaRichardson r;
    r.n = n;
    auto a = rc[n].residuals();
    auto b = rf[n].residuals();
    for (std::size_t q = 0; q < a.size(); ++q) {
      r.factor[q] = b[q]->is_zero() ? std::nan("") : (abs(*a[q]) / abs(*b[q])).to_double();
    }
    r.coarse = std::move(rc[n]);
    r.fine = std::move(rf[n]);
    out.push_back(std::move(r));
  }
  return out;
}

HankelLogDerivative hankel_logderiv(const RecurrenceTable& tb, int n) {
  if (n < 1 || n > tb.nmax - 1) throw std::out_of_range("hankel_logderiv: need 1 <= n <= nmax - 1");
  PrecisionScope scope(tb.digits);
  Real t = tb.params.t();
  const Real& a = tb.alpha[n];
  const Real& a0 = tb.alpha[n - 1];
  Real bracket = tb.beta[n] *
                 (a0 * a0 + a0 * a + a * a + tb.beta[n - 1] + tb.beta[n] + tb.beta[n + 1] - t);
  Real from_p = -tb.p[n];
  double digits = agreeing_digits(from_p, bracket);
  return {from_p, bracket, digits};
}

HankelLogDerivative hankel_logderiv(const WeightParams& params, int n, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("hankel_logderiv: n must be at least 1");
  ExactSolution s = solve_exact(params, n + 1, ctx);
  HankelLogDerivative out = hankel_logderiv(s.recurrence, n);
  if (out.agreement_digits < ctx.target_digits - 10) {
    throw PrecisionError("the two H_n representations disagree");
  }
  return out;
}

}  // namespace gairy
