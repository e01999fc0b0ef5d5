#pragma once

#include <array>
#include <string>

#include "gairy/recurrence.hpp"

namespace gairy {

enum class AuxSource { closed_form, integral };

/// The 1/x residues of A_n(x) = x + alpha_n + R_n/x and B_n(x) = beta_n + r_n/x.
struct LadderAux {
  int n = 0;
  Real R;
  Real r;
  AuxSource source = AuxSource::closed_form;
};

/// Coefficient form of A_n and B_n.
struct LadderCoefficients {
  int n = 0;
  Real a_const, a_pole;  // A_n = x + a_const + a_pole / x
  Real b_const, b_pole;  // B_n = b_const + b_pole / x
};

/// R_n = alpha_n^2 + beta_n + beta_{n+1} - t, r_n = (alpha_n + alpha_{n-1}) beta_n - n.
/// Valid for 0 <= n <= nmax - 1.
LadderAux aux_closed(const RecurrenceTable& table, int n);

/// R_n = (1/h_n) int y^2 P_n^2 w - t and r_n = (1/h_{n-1}) int y^2 P_n P_{n-1} w - n
/// (r_0 = 0), for 0 <= n <= nmax.
LadderAux aux_integral(const RecurrenceTable& table, const MomentTable& moments, int n,
                       const PrecisionContext& ctx);

LadderCoefficients ladder_coefficients(const RecurrenceTable& table, int n);

inline constexpr std::array<const char*, 6> kCompatibilityNames = {
    "s11", "s12", "s21", "s22", "s23", "sum_rule"};

/// Signed residuals (lhs - rhs) of the six compatibility identities at n,
/// 1 <= n <= nmax - 1.
std::array<Real, 6> check_compatibility(const RecurrenceTable& table, int n);

/// Residuals of the two string equations at n, 1 <= n <= nmax - 1.
std::array<Real, 2> check_discrete_system(const RecurrenceTable& table, int n);

/// residual_p = p(n) + bracket, residual_H = -p(n) - bracket, where bracket is
/// beta_n (alpha_{n-1}^2 + alpha_{n-1} alpha_n + alpha_n^2 + beta_{n-1} + beta_n + beta_{n+1} - t).
std::array<Real, 2> check_pn_and_H(const RecurrenceTable& table, int n);

/// Residual of the second-order ODE for P_n at x, relative to its largest term.
Real check_ode(const RecurrenceTable& table, int n, const Real& x, const PrecisionContext& ctx);

}  // namespace gairy
