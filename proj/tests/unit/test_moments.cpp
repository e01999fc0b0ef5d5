#include <doctest.h>

#include "../support/check.hpp"
#include "../support/oracles.hpp"
#include "gairy/moments.hpp"

using namespace gairy;

TEST_CASE("weight and potential") {
  PrecisionScope scope(50);
  Real one(1);
  CHECK(check::digits(weight_eval(one, WeightParams("0", "0")), exp(Real(-1) / 3)) >= 45);
  CHECK(check::digits(weight_eval(one, WeightParams("2", "3")), exp(Real(8) / 3)) >= 45);
  CHECK(check::digits(weight_eval(Real(2), WeightParams("-0.5", "1")),
                      exp(Real(-2) / 3) / sqrt(Real(2))) >= 45);

  Potential a = potential_eval(one, WeightParams("0", "0"));
  CHECK(check::digits(a.v, Real(1) / 3) >= 45);
  CHECK(check::digits(a.v_prime, Real(1)) >= 45);
  Potential b = potential_eval(one, WeightParams("1", "1"));
  CHECK(check::digits(b.v, Real(-2) / 3) >= 45);
  CHECK(check::digits(b.v_prime, Real(-1)) >= 45);

  WeightParams p("0.7", "-1.3");
  for (const char* xs : {"0.1", "1", "2.5", "4"}) {
    Real x(xs);
    CHECK(check::digits(exp(-potential_eval(x, p).v), weight_eval(x, p)) >= 45);
  }
}

TEST_CASE("parameters keep their decimal text") {
  auto p = WeightParams::from_double(0.1, -2.0);
  CHECK(p.lambda_text() == "0.1");
  CHECK(p.t_text() == "-2");
  CHECK_THROWS_AS(WeightParams("abc", "0"), std::invalid_argument);
  CHECK_THROWS_AS(moment_table(WeightParams("-1", "0"), 4, PrecisionContext::for_target(20)),
                  DomainError);
}

TEST_CASE("seed moments against closed forms") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  SeedMoments s = seed_moments(WeightParams("0", "0"), ctx);
  CHECK(check::digits(s.mu0, oracle::closed_form_moment(0, 1, 0)) >= 30);
  CHECK(check::digits(s.mu2, Real(1)) >= 30);
  SeedMoments s1 = seed_moments(WeightParams("1", "0"), ctx);
  CHECK(check::digits(s1.mu0, oracle::closed_form_moment(1, 1, 0)) >= 30);
  CHECK(check::digits(s1.mu0, pow(Real(3), Real(-1) / 3) * exp(lngamma(Real(2) / 3))) >= 30);
}

TEST_CASE("t = 0 moments match the closed form up to j = 20") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  const std::pair<int, int> lambdas[] = {{-1, 2}, {0, 1}, {1, 2}, {3, 2}};
  for (auto [num, den] : lambdas) {
    std::string text = std::to_string(static_cast<double>(num) / den);
    MomentTable table = moment_table(WeightParams(text, "0"), 20, ctx);
    for (int j = 0; j <= 20; ++j) {
      CHECK_MESSAGE(check::digits(table.mu[j], oracle::closed_form_moment(num, den, j)) >= 30,
                    "lambda " << text << " j " << j);
    }
  }
}

TEST_CASE("recursion examples") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  MomentTable a = moment_table(WeightParams("0.37", "0"), 8, ctx);
  CHECK(check::digits(a.mu[3], Real("1.37") * a.mu[0]) >= 30);
  MomentTable b = moment_table(WeightParams("0", "0"), 8, ctx);
  CHECK(check::digits(b.mu[6], 4 * b.mu[3]) >= 30);
  CHECK(check::digits(b.mu[6], 4 * b.mu[0]) >= 30);
}

TEST_CASE("negative t: recursion against direct quadrature") {
  auto ctx = PrecisionContext::for_target(40);
  PrecisionScope scope(ctx.working_digits);
  MomentTable table = moment_table(WeightParams("0.5", "-1"), 12, ctx);
  CHECK(check::digits(table.mu[7], oracle::tanh_sinh_moment(1, 2, -1, 7, 12)) >= 40);
  CHECK(check::digits(table.mu[7], moment_by_quadrature(WeightParams("0.5", "-1"), 7, ctx)) >= 40);
  CHECK(table.verified_index >= 3);
  CHECK(table.verified_index <= table.jmax());
}

TEST_CASE("strongly negative t escalates and stays accurate") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  WeightParams p("1.5", "-6");
  MomentTable table = moment_table(p, 30, ctx);
  CHECK(check::digits(table.mu[30], moment_by_quadrature(p, 30, ctx)) >= 30);
}

TEST_CASE("table invariants over a grid") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  for (const char* l : {"-0.5", "0", "0.5", "1.5"}) {
    for (const char* t : {"-2", "0", "2"}) {
      MomentTable table = moment_table(WeightParams(l, t), 24, ctx);
      for (const auto& m : table.mu) CHECK(m > 0);
      CHECK(recursion_residual(table) <= pow10(-(table.digits - 2)));
    }
  }
}

TEST_CASE("moments increase with t") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  MomentTable lo = moment_table(WeightParams("0.5", "-0.1"), 10, ctx);
  MomentTable hi = moment_table(WeightParams("0.5", "0.1"), 10, ctx);
  for (int j = 0; j <= 10; ++j) CHECK(lo.mu[j] < hi.mu[j]);
}

TEST_CASE("deterministic") {
  auto ctx = PrecisionContext::for_target(30);
  PrecisionScope scope(ctx.working_digits);
  WeightParams p("0.2", "-1.5");
  MomentTable a = moment_table(p, 14, ctx);
  MomentTable b = moment_table(p, 14, ctx);
  CHECK(a.verified_index == b.verified_index);
  for (int j = 0; j <= 14; ++j) CHECK(a.mu[j] == b.mu[j]);
}

TEST_CASE("stationary points") {
  auto pts = stationary_points(0.0, 1.0);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == doctest::Approx(1.0));
  auto two = stationary_points(3.0, -1.0);  // x^3 - 3x + 1 has two positive roots
  REQUIRE(two.size() == 2);
  for (double x : two) CHECK(x * x * x - 3 * x + 1 == doctest::Approx(0.0).epsilon(1e-12));
}
