#pragma once

#include "gairy/recurrence.hpp"

namespace gairy {

/// Everything the exact side needs at one (lambda, t).
struct ExactSolution {
  MomentTable moments;
  RecurrenceTable recurrence;
  HankelSequence hankel;
  /// Context the accepted tables were computed with.
  PrecisionContext ctx;
  /// Digits on which the accepted run agreed with the previous one.
  double self_agreement_digits = 0.0;
  /// Minimum agreement of beta_n between the Stieltjes and LDL routes.
  double cross_route_digits = 0.0;
  int runs = 0;
};

/// Guard digits for nmax polynomials: target + 10 + 4 nmax.
int initial_working_digits(int target_digits, int nmax);

/// One pass at ctx.working_digits with no escalation.
ExactSolution solve_exact_at(const WeightParams& params, int nmax, const PrecisionContext& ctx);

/// Runs at W, 2W, 4W, ... (W from initial_working_digits) until two consecutive
/// runs and the two routes agree to ctx.target_digits; gives up past 16 W.
ExactSolution solve_exact(const WeightParams& params, int nmax, const PrecisionContext& ctx);

}  // namespace gairy
