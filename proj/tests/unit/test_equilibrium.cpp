#include <doctest.h>

#include "../support/check.hpp"
#include "gairy/compare.hpp"
#include "gairy/equilibrium.hpp"

using namespace gairy;

namespace {

const PrecisionContext kCtx = PrecisionContext::for_target(40);

void check_support(const EquilibriumSupport& s) {
  CHECK(s.X > 0);
  CHECK(s.Y >= 0);
  CHECK(s.X > 2 * s.Y);
  CHECK(s.a >= 0);
  CHECK(s.a < s.b);
  CHECK(check::digits(s.a + s.b, s.X) >= 35);
  CHECK(abs(s.residual1) < pow10(-(kCtx.target_digits - 5)));
  CHECK(abs(s.residual2) < pow10(-(kCtx.target_digits - 5)));
}

}  // namespace

TEST_CASE("lambda = 0 is the cubic") {
  PrecisionScope scope(kCtx.working_digits);
  for (const char* n_text : {"1", "10", "137.5"}) {
    Real n(n_text);
    EquilibriumSupport s = solve_endpoints(n, WeightParams("0", "0"), kCtx);
    CHECK(s.Y.is_zero());
    CHECK(check::digits(s.X, cbrt(32 * n / 5)) >= 40);
    CHECK(check::digits(s.X, 4 * cbrt(n) / cbrt(Real(10))) >= 40);
    Real A = 5 * s.X * s.X * s.X / 48 - n * log(s.X * s.X / 16);
    CHECK(check::digits(lagrange_multiplier(s), A) >= 38);
    check_support(s);
  }
  EquilibriumSupport ten = solve_endpoints(Real(10), WeightParams("0", "0"), kCtx);
  CHECK(check::digits(ten.X, Real(4)) >= 40);
}

TEST_CASE("lambda = 0 with t != 0 still solves the cubic") {
  PrecisionScope scope(kCtx.working_digits);
  Real n(50), t("1.5");
  EquilibriumSupport s = solve_endpoints(n, WeightParams("0", "1.5"), kCtx);
  CHECK(abs(5 * pow(s.X, 3) - 8 * t * s.X - 32 * n) < pow10(-30));
  check_support(s);
}

TEST_CASE("positive lambda against the series") {
  PrecisionScope scope(kCtx.working_digits);
  WeightParams p("1", "0");
  Real n(100);
  EquilibriumSupport s = solve_endpoints(n, p, kCtx);
  check_support(s);
  Real nx = pow(n, Real(-8) / 3);
  CHECK(abs(s.X - series_largeN(Quantity::X, n, p, 0, kCtx).value) < 10 * nx);
  CHECK(abs(s.Y - series_largeN(Quantity::Y, n, p, 0, kCtx).value) < 10 * pow(n, Real(-10) / 3));
  CHECK(abs(lagrange_multiplier(s) - series_largeN(Quantity::A_mult, n, p, 0, kCtx).value) <
        10 * pow(n, -2L));

  WeightParams q("0.5", "1");
  EquilibriumSupport s2 = solve_endpoints(Real(200), q, kCtx);
  check_support(s2);
  CHECK(abs(lagrange_multiplier(s2) - series_largeN(Quantity::A_mult, Real(200), q, 0, kCtx).value) <
        10 * pow(Real(200), -2L));
}

TEST_CASE("A decreases in n") {
  PrecisionScope scope(kCtx.working_digits);
  for (const char* l : {"0", "1"}) {
    WeightParams p(l, "0");
    Real a100 = lagrange_multiplier(solve_endpoints(Real(100), p, kCtx));
    Real a200 = lagrange_multiplier(solve_endpoints(Real(200), p, kCtx));
    CHECK(a200 < a100);
  }
}

TEST_CASE("solver-vs-series exponent for X") {
  PrecisionScope scope(kCtx.working_digits);
  for (const char* l : {"0.5", "1", "2"}) {
    for (const char* t : {"-1", "0", "1"}) {
      WeightParams p(l, t);
      std::vector<Real> ns, errs;
      for (int n : {50, 100, 200, 400}) {
        Real nn(n);
        EquilibriumSupport s = solve_endpoints(nn, p, kCtx);
        check_support(s);
        ns.push_back(nn);
        errs.push_back(s.X - series_largeN(Quantity::X, nn, p, 0, kCtx).value);
      }
      double slope = fit_exponent(ns, errs);
      CHECK_MESSAGE(slope == doctest::Approx(-8.0 / 3).epsilon(0.5 / (8.0 / 3)),
                    "lambda " << l << " t " << t << " slope " << slope);
    }
  }
}

TEST_CASE("domain") {
  PrecisionScope scope(kCtx.working_digits);
  CHECK_THROWS_AS(solve_endpoints(Real(10), WeightParams("-0.5", "0"), kCtx), DomainError);
  CHECK_THROWS_AS(solve_endpoints(Real(0), WeightParams("1", "0"), kCtx), DomainError);
  EquilibriumSupport s = solve_endpoints(Real(10), WeightParams("1", "0"), kCtx);
  s.Y = s.X;
  CHECK_THROWS_AS(lagrange_multiplier(s), DomainError);
}
