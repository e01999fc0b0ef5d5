#pragma once

#include <array>
#include <vector>

#include "gairy/pipeline.hpp"

namespace gairy {

/// Central-difference check of the t-flow at one n:
///   d alpha_n/dt = beta_{n+1} - beta_n,  d beta_n/dt = beta_n (alpha_n - alpha_{n-1}),
///   d ln h_n/dt = alpha_n,  d p(n)/dt = -beta_n,  d ln D_n/dt = -p(n).
struct TodaCheckReport {
  int n = 0;
  std::string t;
  Real h_step;
  Real residual_toda_alpha;
  Real residual_toda_beta;
  Real residual_hna;
  Real residual_dpn;
  Real residual_Hn;

  std::array<const Real*, 5> residuals() const {
    return {&residual_toda_alpha, &residual_toda_beta, &residual_hna, &residual_dpn, &residual_Hn};
  }
};

inline constexpr std::array<const char*, 5> kTodaNames = {"toda_alpha", "toda_beta", "hna", "dpn",
                                                          "Hn"};

/// Default step 10^(-target/4).
Real default_toda_step(const PrecisionContext& ctx);

/// Reports for n = 0..nmax-1 from pipelines at t - h, t, t + h.
std::vector<TodaCheckReport> toda_report(const WeightParams& params, int nmax, const Real& h_step,
                                         const PrecisionContext& ctx);

TodaCheckReport toda_residuals(const WeightParams& params, int n, const Real& h_step,
                               const PrecisionContext& ctx);

/// |residual(h)| / |residual(h/2)| per quantity, for n = 0..nmax-1.
struct TodaRichardson {
  int n = 0;
  std::array<double, 5> factor{};
  TodaCheckReport coarse;
  TodaCheckReport fine;
};

std::vector<TodaRichardson> toda_richardson(const WeightParams& params, int nmax,
                                            const Real& h_step, const PrecisionContext& ctx);

struct HankelLogDerivative {
  Real from_p;        // -p(n)
  Real from_bracket;  // beta_n (alpha_{n-1}^2 + ... - t)
  double agreement_digits = 0.0;
};

/// H_n(t) = d/dt ln D_n(t), computed as -p(n) and through the beta_n bracket.
HankelLogDerivative hankel_logderiv(const WeightParams& params, int n, const PrecisionContext& ctx);

/// Same, reading an existing table (1 <= n <= nmax - 1).
HankelLogDerivative hankel_logderiv(const RecurrenceTable& table, int n);

}  // namespace gairy
