#include <doctest.h>

#include <cmath>

#include "../support/check.hpp"
#include "gairy/compare.hpp"
#include "gairy/pipeline.hpp"

using namespace gairy;

TEST_CASE("least-squares exponent") {
  PrecisionScope scope(40);
  std::vector<Real> x, y;
  for (int n : {10, 20, 40, 80}) {
    x.emplace_back(n);
    y.push_back(Real(3) / (Real(n) * n));
  }
  CHECK(fit_exponent(x, y) == doctest::Approx(-2.0));
  y[1] = -y[1];  // sign changes do not matter
  CHECK(fit_exponent(x, y) == doctest::Approx(-2.0));
  x.pop_back(), x.pop_back();
  y.pop_back(), y.pop_back();
  CHECK_THROWS(fit_exponent(x, y));
}

TEST_CASE("large-n comparison rows") {
  auto ctx = PrecisionContext::for_target(30);
  WeightParams p("0.5", "1");
  Comparison c = compare_asymptotics(Quantity::alpha, p, {6, 8, 10}, 0, ctx);
  REQUIRE(c.rows.size() == 3);
  CHECK_FALSE(c.long_time);
  CHECK(c.order == 7);
  CHECK(c.truncation_order == doctest::Approx(-3));
  CHECK(std::isnan(c.rows[0].local_exponent));
  CHECK(std::isfinite(c.rows[2].local_exponent));
  CHECK(std::isfinite(c.fitted_exponent));

  ExactSolution s = solve_exact(p, 11, ctx);
  PrecisionScope scope(s.ctx.working_digits);
  CHECK(check::digits(c.rows[1].exact, s.recurrence.alpha[8]) >= 30);
  CHECK(c.rows[1].error == c.rows[1].exact - c.rows[1].series);

  Comparison neg = compare_asymptotics(Quantity::beta, WeightParams("-0.5", "1"), {4, 5, 6}, 0, ctx);
  CHECK(neg.outside_regime);
}

TEST_CASE("equilibrium quantities compare against the solver") {
  auto ctx = PrecisionContext::for_target(30);
  Comparison c = compare_asymptotics(Quantity::X, WeightParams("1", "0"), {50, 100, 200, 400}, 0, ctx);
  CHECK(c.exponent_matches());
  CHECK(c.fitted_exponent == doctest::Approx(-8.0 / 3).epsilon(0.2));
}

TEST_CASE("long-time comparison") {
  auto ctx = PrecisionContext::for_target(30);
  WeightParams p("0.5", "0");
  Comparison c = compare_longtime(Quantity::beta, 3, p, {"25", "50", "100"}, 0, ctx);
  CHECK(c.long_time);
  CHECK(c.direction == Direction::plus);
  CHECK(c.truncation_order == doctest::Approx(-5));
  REQUIRE(c.rows.size() == 3);
  PrecisionScope scope(60);
  CHECK(c.rows[2].grid == Real(100));
  CHECK(c.exponent_matches());

  CHECK_THROWS(compare_longtime(Quantity::beta, 3, p, {"25", "-25", "50"}, 0, ctx));
  CHECK_THROWS(compare_longtime(Quantity::beta, 3, p, {}, 0, ctx));
}

TEST_CASE("tolerance of the exponent match") {
  Comparison c;
  c.truncation_order = -3;
  c.fitted_exponent = -3.4;
  CHECK(c.exponent_matches());
  c.fitted_exponent = -2.4;
  CHECK_FALSE(c.exponent_matches());
  c.fitted_exponent = std::nan("");
  CHECK_FALSE(c.exponent_matches());
}
