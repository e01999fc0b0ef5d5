#include <doctest.h>

#include "../support/check.hpp"
#include "../support/oracles.hpp"
#include "gairy/pipeline.hpp"
#include "gairy/recurrence.hpp"

using namespace gairy;

namespace {

struct Built {
  MomentTable moments;
  RecurrenceTable table;
};

Built build(const char* lambda, const char* t, int nmax, const PrecisionContext& ctx) {
  MomentTable m = moment_table(WeightParams(lambda, t), 2 * nmax + 2, ctx);
  RecurrenceTable r = build_recurrence(m, nmax, ctx);
  return {std::move(m), std::move(r)};
}

// Integral of P_a P_b w by Boost tanh-sinh at 50 digits.
std::string oracle_product(const RecurrenceTable& table, int a, int b, double lambda, double t) {
  auto coef = [&](int n) { return [&table, n](int k) { return table.coeffs[n][k].str(60); }; };
  return oracle::weighted_product(lambda, t, coef(a), a, coef(b), b, 14.0);
}

}  // namespace

TEST_CASE("n = 0 is forced by P_0 = 1") {
  auto ctx = PrecisionContext::for_target(30).with_working(60);
  PrecisionScope scope(ctx.working_digits);
  Built b = build("0.3", "-0.4", 4, ctx);
  const auto& mu = b.moments.mu;
  CHECK(check::digits(b.table.alpha[0], mu[1] / mu[0]) >= 40);
  CHECK(b.table.beta[0].is_zero());
  CHECK(check::digits(b.table.h[0], mu[0]) >= 40);
  CHECK(b.table.p[0].is_zero());
  CHECK(check::digits(b.table.p[1], -b.table.alpha[0]) >= 40);
}

TEST_CASE("alpha_0 at lambda = 0, t = 0") {
  auto ctx = PrecisionContext::for_target(30).with_working(60);
  PrecisionScope scope(ctx.working_digits);
  Built b = build("0", "0", 2, ctx);
  Real ratio = Real(oracle::closed_form_moment(0, 1, 1)) / Real(oracle::closed_form_moment(0, 1, 0));
  CHECK(check::digits(b.table.alpha[0], ratio) >= 30);
  CHECK(check::digits(b.table.alpha[0],
                      cbrt(Real(3)) * exp(lngamma(Real(2) / 3) - lngamma(Real(1) / 3))) >= 30);
  CHECK(b.table.alpha[0].to_double() == doctest::Approx(0.7290).epsilon(1e-4));
}

TEST_CASE("Stieltjes and LDL routes agree") {
  auto ctx = PrecisionContext::for_target(30);
  SUBCASE("lambda 0.5, t 1, n = 5") {
    ExactSolution s = solve_exact(WeightParams("0.5", "1"), 8, ctx);
    PrecisionScope scope(s.ctx.working_digits);
    CHECK(check::digits(s.recurrence.beta[5], s.hankel.beta(5)) >= 30);
    CHECK(check::digits(s.recurrence.h[5], s.hankel.pivots[5]) >= 30);
  }
  SUBCASE("grid up to n = 12") {
    for (const char* l : {"-0.5", "0", "0.5", "1.5"}) {
      for (const char* t : {"-2", "0", "2"}) {
        ExactSolution s = solve_exact(WeightParams(l, t), 13, ctx);
        PrecisionScope scope(s.ctx.working_digits);
        for (int n = 1; n <= 12; ++n) {
          CHECK_MESSAGE(check::digits(s.recurrence.beta[n], s.hankel.beta(n)) >= ctx.target_digits - 5,
                        "lambda " << l << " t " << t << " n " << n);
        }
      }
    }
  }
}

TEST_CASE("small Hankel determinants") {
  auto ctx = PrecisionContext::for_target(30).with_working(60);
  PrecisionScope scope(ctx.working_digits);
  Built b = build("0.8", "0.6", 3, ctx);
  HankelSequence d = hankel_determinants_direct(b.moments, 3, ctx);
  const auto& mu = b.moments.mu;
  CHECK(d.log_d[0].is_zero());
  CHECK(check::digits(exp(d.log_d[1]), mu[0]) >= 40);
  CHECK(check::digits(exp(d.log_d[2]), mu[0] * mu[2] - mu[1] * mu[1]) >= 40);
}

TEST_CASE("ln D_6 at lambda = 0, t = 0 from both routes") {
  auto ctx = PrecisionContext::for_target(30).with_working(70);
  PrecisionScope scope(ctx.working_digits);
  Built b = build("0", "0", 6, ctx);
  HankelSequence d = hankel_determinants_direct(b.moments, 6, ctx);
  auto log_d = b.table.log_hankel();
  CHECK(check::digits(log_d[6], d.log_d[6]) >= 30);
  Real sum(0);
  for (int j = 0; j < 6; ++j) sum += log(b.table.h[j]);
  CHECK(check::digits(log_d[6], sum) >= 30);
}

TEST_CASE("table invariants") {
  auto ctx = PrecisionContext::for_target(30).with_working(110);
  PrecisionScope scope(ctx.working_digits);
  for (const char* l : {"-0.5", "1.5"}) {
    for (const char* t : {"-2", "2"}) {
      Built b = build(l, t, 12, ctx);
      const auto& r = b.table;
      HankelSequence d = hankel_determinants_direct(b.moments, 12, ctx);
      Real alpha_sum(0);
      for (int n = 0; n <= 12; ++n) {
        CHECK(r.h[n] > 0);
        if (n >= 1) {
          CHECK(r.beta[n] > 0);
          CHECK(check::digits(r.beta[n], r.h[n] / r.h[n - 1]) >= 60);
          CHECK(check::digits(d.beta(n), r.beta[n]) >= 60);
        }
        CHECK(abs(r.alpha[n] - (r.p[n] - r.p[n + 1])) <= pow10(-60) * abs(r.alpha[n]));
        CHECK(abs(alpha_sum + r.p[n]) <= pow10(-60) * (1 + abs(alpha_sum)));
        alpha_sum += r.alpha[n];
      }
    }
  }
}

TEST_CASE("polynomial evaluation") {
  auto ctx = PrecisionContext::for_target(30).with_working(60);
  PrecisionScope scope(ctx.working_digits);
  Built b = build("0.5", "1", 6, ctx);
  const auto& r = b.table;
  Real x("1.7");
  CHECK(check::digits(polynomial_eval(r, 1, x).value, x - r.alpha[0]) >= 50);
  CHECK(polynomial_eval(r, 4, Real(0)).value == r.coeffs[4][0]);
  // value and derivatives from the coefficient vector
  Real v(0), d1(0), d2(0);
  for (int k = 5; k >= 0; --k) {
    d2 = d2 * x + 2 * d1;
    d1 = d1 * x + v;
    v = v * x + r.coeffs[5][k];
  }
  PolyValue pv = polynomial_eval(r, 5, x);
  CHECK(check::digits(pv.value, v) >= 45);
  CHECK(check::digits(pv.d1, d1) >= 45);
  CHECK(check::digits(pv.d2, d2) >= 45);
}

TEST_CASE("orthogonality and norms by an independent quadrature") {
  auto ctx = PrecisionContext::for_target(30).with_working(80);
  PrecisionScope scope(ctx.working_digits);
  Built b = build("0.5", "0.5", 10, ctx);
  const auto& r = b.table;
  Real cross(oracle_product(r, 3, 2, 0.5, 0.5));
  CHECK(abs(cross) <= pow10(-30) * sqrt(r.h[2] * r.h[3]));
  for (int n : {1, 4, 9}) {
    CHECK_MESSAGE(check::digits(Real(oracle_product(r, n, n, 0.5, 0.5)), r.h[n]) >= 30, "n " << n);
  }
}

TEST_CASE("insufficient moments are rejected") {
  auto ctx = PrecisionContext::for_target(20);
  PrecisionScope scope(ctx.working_digits);
  MomentTable m = moment_table(WeightParams("0", "0"), 6, ctx);
  CHECK_THROWS(build_recurrence(m, 5, ctx));
}
