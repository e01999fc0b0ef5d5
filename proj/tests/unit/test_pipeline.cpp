#include <doctest.h>

#include "../support/check.hpp"
#include "gairy/pipeline.hpp"

using namespace gairy;

TEST_CASE("guard digits grow with nmax") {
  CHECK(initial_working_digits(30, 0) == 50);
  CHECK(initial_working_digits(30, 5) == 60);
  CHECK(initial_working_digits(60, 20) == 150);
}

TEST_CASE("escalation certifies the requested digits") {
  auto ctx = PrecisionContext::for_target(30);
  ExactSolution s = solve_exact(WeightParams("-0.5", "-2"), 10, ctx);
  CHECK(s.runs >= 2);
  CHECK(s.self_agreement_digits >= 30);
  CHECK(s.cross_route_digits >= 30);
  CHECK(s.ctx.working_digits >= initial_working_digits(30, 10));

  // a much more precise run agrees to the target
  ExactSolution ref = solve_exact(WeightParams("-0.5", "-2"), 10, PrecisionContext::for_target(80));
  PrecisionScope scope(ref.ctx.working_digits);
  for (int n = 0; n <= 10; ++n) {
    CHECK(check::digits(s.recurrence.alpha[n], ref.recurrence.alpha[n]) >= 30);
    CHECK(check::digits(s.recurrence.h[n], ref.recurrence.h[n]) >= 30);
    if (n > 0) CHECK(check::digits(s.recurrence.beta[n], ref.recurrence.beta[n]) >= 30);
  }
}

TEST_CASE("single pass reports route agreement") {
  auto ctx = PrecisionContext::for_target(30).with_working(90);
  ExactSolution s = solve_exact_at(WeightParams("1", "0.5"), 8, ctx);
  CHECK(s.runs == 1);
  CHECK(s.cross_route_digits > 60);
  CHECK(s.moments.jmax() == 18);
  CHECK(s.recurrence.nmax == 8);
}

TEST_CASE("identical inputs give identical tables") {
  auto ctx = PrecisionContext::for_target(25);
  ExactSolution a = solve_exact(WeightParams("0.25", "1.5"), 6, ctx);
  ExactSolution b = solve_exact(WeightParams("0.25", "1.5"), 6, ctx);
  for (int n = 0; n <= 6; ++n) {
    CHECK(a.recurrence.alpha[n] == b.recurrence.alpha[n]);
    CHECK(a.recurrence.beta[n] == b.recurrence.beta[n]);
  }
}
