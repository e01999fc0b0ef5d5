#include "gairy/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "gairy/ladder.hpp"
#include "gairy/toda.hpp"

namespace gairy {

std::vector<Real> ode_sample_points(const RecurrenceTable& table, int n) {
  PrecisionScope scope(table.digits);
  Real edge = table.alpha[n] + 2 * sqrt(table.beta[n]);
  std::vector<Real> xs;
  for (int k = 1; k <= 5; ++k) xs.push_back(edge * k / 3);
  return xs;
}

std::vector<VerifyRow> verify_suite(const WeightParams& params, int nmax,
                                    const PrecisionContext& ctx, const VerifyOptions& options) {
  if (nmax < 2) throw std::invalid_argument("verify needs nmax >= 2");
  ExactSolution s = solve_exact(params, nmax, ctx);
  const RecurrenceTable& tb = s.recurrence;
  PrecisionScope scope(s.ctx.working_digits);
  Real tol_identity = pow10(-(ctx.target_digits - 10));
  Real tol_route = pow10(-(ctx.target_digits - 5));

  std::vector<VerifyRow> rows;
  for (int n = 1; n <= nmax - 1; ++n) {
    auto comp = check_compatibility(tb, n);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      rows.push_back({kCompatibilityNames[i], n, abs(comp[i]), tol_identity});
    }
    auto disc = check_discrete_system(tb, n);
    rows.push_back({"dieq1", n, abs(disc[0]), tol_identity});
    rows.push_back({"dieq2", n, abs(disc[1]), tol_identity});
    auto ph = check_pn_and_H(tb, n);
    rows.push_back({"pn", n, abs(ph[0]), tol_identity});
    rows.push_back({"Hn", n, abs(ph[1]), tol_identity});
    int k = 1;
    for (Real x : ode_sample_points(tb, n)) {
      Real residual;
      for (int attempt = 0;; ++attempt) {
        try {
          residual = check_ode(tb, n, x, s.ctx);
          break;
        } catch (const DomainError&) {
          if (attempt == 3) throw;
          x = x * Real("1.01");
        }
      }
      rows.push_back({"ode_x" + std::to_string(k++), n, residual, tol_identity});
    }
  }
  for (int n = 1; n <= nmax; ++n) {
    rows.push_back({"beta_ldl", n, relative_difference(tb.beta[n], s.hankel.beta(n)), tol_route});
  }

  if (options.toda) {
    Real h = options.h_step ? Real(*options.h_step) : default_toda_step(ctx);
    Real tol_fd = pow10(8) * h * h;
    Real tol_factor("0.5");
    auto rich = toda_richardson(params, nmax, h, ctx);
    for (const auto& r : rich) {
      if (r.n == 0) continue;
      auto coarse = r.coarse.residuals();
      for (std::size_t q = 0; q < coarse.size(); ++q) {
        rows.push_back({kTodaNames[q], r.n, abs(*coarse[q]), tol_fd});
        Real deviation = std::isfinite(r.factor[q]) ? abs(Real(r.factor[q]) - 4) : Real(1000);
        rows.push_back({std::string("richardson_") + kTodaNames[q], r.n, deviation, tol_factor});
      }
    }
  }
  return rows;
}

}  // namespace gairy
