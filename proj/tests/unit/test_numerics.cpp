#include <doctest.h>

#include <cmath>
#include <cstring>

#include "../support/check.hpp"
#include "../support/oracles.hpp"
#include "gairy/quadrature.hpp"
#include "gairy/special.hpp"

using namespace gairy;

namespace {

bool bit_identical(const Real& a, const Real& b) {
  return a.bits() == b.bits() && mpfr_equal_p(a.raw(), b.raw()) != 0;
}

}  // namespace

TEST_CASE("gamma integrals on the half line") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);

  SUBCASE("e^-x") {
    Real v = integrate_halfline([](const Real& x) { return exp(-x); }, ctx);
    CHECK(check::digits(v, Real(1)) >= 30);
  }
  SUBCASE("x^-1/2 e^-x") {
    HalflineHints hints{-0.5, {}};
    Real v = integrate_halfline([](const Real& x) { return exp(-x) / sqrt(x); }, ctx, hints);
    CHECK(check::digits(v, sqrt(const_pi())) >= 30);
  }
  SUBCASE("x^(s-1) e^-x for several s") {
    for (const char* s : {"0.5", "1", "2", "3.5"}) {
      Real sv(s);
      HalflineHints hints{sv.to_double() - 1, {}};
      Real v = integrate_halfline([&](const Real& x) { return pow(x, sv - 1) * exp(-x); }, ctx, hints);
      CHECK_MESSAGE(check::digits(v, exp(lngamma(sv))) >= 30, "s = " << s);
    }
  }
  SUBCASE("e^(-x^3/3) against the substitution formula and Boost Gauss-Kronrod") {
    Real v = integrate_halfline([](const Real& x) { return exp(-(x * x * x) / 3); }, ctx);
    CHECK(check::digits(v, oracle::closed_form_moment(0, 1, 0)) >= 30);
    CHECK(check::digits(v, oracle::gauss_kronrod_moment(0, 0, 0, 12)) >= 30);
  }
}

TEST_CASE("finite interval with an endpoint singularity") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  Real v = integrate_interval([](const Real& x) { return log(x); }, Real(0), Real(1), ctx);
  CHECK(check::digits(v, Real(-1)) >= 30);
}

TEST_CASE("non-decaying integrand is rejected") {
  auto ctx = PrecisionContext::for_target(20);
  CHECK_THROWS_AS(integrate_halfline([](const Real&) { return Real(1); }, ctx), QuadratureError);
  CHECK_THROWS_AS(integrate_halfline([](const Real& x) { return x; }, ctx, HalflineHints{-1.5, {}}),
                  DomainError);
}

TEST_CASE("log_gamma") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  CHECK(log_gamma(Real(1), ctx).is_zero());
  CHECK(check::digits(log_gamma(Real(5), ctx), log(Real(24))) >= 30);
  Real third = log_gamma(Real(1) / 3, ctx);
  CHECK(check::digits(third, log(Real(std::string(oracle::gamma(1, 3))))) >= 30);
  CHECK(check::digits(exp(third), "2.678938534707747633") >= 18);
  CHECK_THROWS_AS(log_gamma(Real(0), ctx), DomainError);
  CHECK_THROWS_AS(log_gamma(Real(-2), ctx), DomainError);
}

TEST_CASE("log_barnes_g") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  CHECK(abs(log_barnes_g(Real(1), ctx)) < pow10(-40));
  CHECK(abs(log_barnes_g(Real(2), ctx)) < pow10(-40));
  CHECK(check::digits(log_barnes_g(Real(4), ctx), log(Real(2))) >= 30);

  Real g32 = log_barnes_g(Real(3) / 2, ctx);
  CHECK(check::digits(g32, oracle::log_barnes_g(3, 2)) >= 30);
  Real g12 = log_barnes_g(Real(1) / 2, ctx);
  CHECK(check::digits(g12, oracle::log_barnes_g(1, 2)) >= 30);
  // G(3/2) = Gamma(1/2) G(1/2)
  CHECK(check::digits(g32, g12 + lngamma(Real(1) / 2)) >= 30);

  for (const char* s : {"0.3", "1.0", "2.5"}) {
    Real x(s);
    Real r = log_barnes_g(x + 1, ctx) - log_gamma(x, ctx) - log_barnes_g(x, ctx);
    CHECK_MESSAGE(abs(r) <= pow10(-(ctx.target_digits - 2)), "x = " << s);
  }
  CHECK_THROWS_AS(log_barnes_g(Real(0), ctx), DomainError);
}

TEST_CASE("zeta'(-1)") {
  SUBCASE("15 digits") {
    auto ctx = PrecisionContext::for_target(15);
    PrecisionScope scope(ctx.working_digits);
    CHECK(check::digits(zeta_prime_minus_one(ctx), oracle::kZetaPrimeMinusOne) >= 15);
  }
  SUBCASE("against the Glaisher constant oracle") {
    auto ctx = PrecisionContext::for_target(40);
    PrecisionScope scope(ctx.working_digits);
    Real z = zeta_prime_minus_one(ctx);
    CHECK(check::digits(z, oracle::kZetaPrimeMinusOne) >= 39);
    Real log_a(oracle::log_glaisher());
    CHECK(check::digits(z, Real(1) / 12 - log_a) >= 40);
    // exp(12 (1/12 - zeta'(-1))) = A^12
    CHECK(check::digits(exp(12 * (Real(1) / 12 - z)), exp(12 * log_a)) >= 40);
  }
}

TEST_CASE("special functions are pure and stable under doubling") {
  auto ctx = PrecisionContext::for_target(30);
  auto wide = PrecisionContext::for_target(60);
  PrecisionScope scope(wide.working_digits);
  Real x("2.7");

  CHECK(bit_identical(log_gamma(x, ctx), log_gamma(x, ctx)));
  CHECK(bit_identical(log_barnes_g(x, ctx), log_barnes_g(x, ctx)));
  CHECK(bit_identical(zeta_prime_minus_one(ctx), zeta_prime_minus_one(ctx)));

  CHECK(check::digits(log_gamma(x, ctx), log_gamma(x, wide)) >= 30);
  CHECK(check::digits(log_barnes_g(x, ctx), log_barnes_g(x, wide)) >= 30);
  CHECK(check::digits(zeta_prime_minus_one(ctx), zeta_prime_minus_one(wide)) >= 30);
}

TEST_CASE("precision context") {
  auto ctx = PrecisionContext::for_target(30);
  CHECK(ctx.working_digits >= ctx.target_digits + 20);
  CHECK(ctx.quad_tol_digits == ctx.working_digits - 5);
  auto hinted = PrecisionContext::for_target(30, 200);
  CHECK(hinted.working_digits == 200);
  CHECK(ctx.with_working(90).quad_tol_digits == 85);
}
