#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gairy/pipeline.hpp"

namespace gairy {

struct VerifyRow {
  std::string identity;
  int n = 0;
  Real residual;
  Real tolerance;

  bool ok() const { return residual <= tolerance; }
};

struct VerifyOptions {
  bool toda = false;
  /// Finite-difference step; default 10^(-target/4).
  std::optional<std::string> h_step;
};

/// Points where the ODE is sampled: k/3 (alpha_n + 2 sqrt(beta_n)), k = 1..5.
std::vector<Real> ode_sample_points(const RecurrenceTable& table, int n);

/// Every identity residual for n = 1..nmax-1 at one (lambda, t).
///
/// Tolerances: 10^-(target-10) for the algebraic identities and the relative
/// ODE residual, 10^-(target-5) for Stieltjes vs LDL; with `toda`, raw
/// central-difference residuals must stay under 10^8 h^2 and every
/// Richardson factor (residual at h over residual at h/2) within 0.5 of 4.
std::vector<VerifyRow> verify_suite(const WeightParams& params, int nmax,
                                    const PrecisionContext& ctx, const VerifyOptions& options = {});

}  // namespace gairy
