#include "gairy/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace gairy {
namespace {

double min_agreement(const std::vector<Real>& a, const std::vector<Real>& b, std::size_t from) {
  double digits = std::numeric_limits<double>::infinity();
  for (std::size_t i = from; i < std::min(a.size(), b.size()); ++i) {
    digits = std::min(digits, agreeing_digits(a[i], b[i]));
  }
  return digits;
}

double table_agreement(const RecurrenceTable& a, const RecurrenceTable& b) {
  return std::min({min_agreement(a.alpha, b.alpha, 0), min_agreement(a.beta, b.beta, 1),
                   min_agreement(a.h, b.h, 0), min_agreement(a.p, b.p, 1)});
}

}  // namespace

int initial_working_digits(int target_digits, int nmax) {
  return std::max(target_digits + 10 + 4 * nmax, target_digits + 20);
}

ExactSolution solve_exact_at(const WeightParams& params, int nmax, const PrecisionContext& ctx) {
  MomentTable moments = moment_table(params, 2 * nmax + 2, ctx);
  // The moment stage may have raised the precision to absorb recursion loss.
  PrecisionContext used = ctx.with_working(std::max(ctx.working_digits, moments.digits));
  RecurrenceTable rec = build_recurrence(moments, nmax, used);
  HankelSequence hankel = hankel_determinants_direct(moments, nmax, used);

  double cross = std::numeric_limits<double>::infinity();
  {
    PrecisionScope scope(used.working_digits);
    for (int n = 1; n <= nmax; ++n) cross = std::min(cross, agreeing_digits(rec.beta[n], hankel.beta(n)));
    for (int n = 0; n <= nmax; ++n) cross = std::min(cross, agreeing_digits(rec.h[n], hankel.pivots[n]));
  }
  return ExactSolution{std::move(moments), std::move(rec), std::move(hankel), used, 0.0, cross, 1};
}

ExactSolution solve_exact(const WeightParams& params, int nmax, const PrecisionContext& ctx) {
  const int base = std::max(ctx.working_digits, initial_working_digits(ctx.target_digits, nmax));
  std::optional<ExactSolution> previous;
  int runs = 0;
  std::string last_failure = "no run completed";
  for (int factor = 1; factor <= kMaxEscalation; factor *= 2) {
    PrecisionContext run = ctx.with_working(base * factor);
    std::optional<ExactSolution> current;
    try {
      current = solve_exact_at(params, nmax, run);
      ++runs;
    } catch (const PrecisionError& e) {
      last_failure = e.what();
      previous.reset();
      continue;
    }
    if (previous) {
      double self = table_agreement(previous->recurrence, current->recurrence);
      double cross = current->cross_route_digits;
      if (self >= ctx.target_digits && cross >= ctx.target_digits) {
        current->self_agreement_digits = self;
        current->runs = runs;
        return std::move(*current);
      }
      last_failure = "runs agree to " + std::to_string(self) + " digits, routes to " +
                     std::to_string(cross);
    }
    previous = std::move(current);
  }
  throw PrecisionError("exact pipeline did not converge within 16x working precision: " +
                       last_failure);
}

}  // namespace gairy
