#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gairy/moments.hpp"

namespace gairy {

enum class Quantity { alpha, beta, p, lnD, lnh, A_mult, X, Y };
enum class Direction { plus, minus };

std::string_view to_string(Quantity q);
Quantity parse_quantity(std::string_view name);
std::string_view to_string(Direction d);
Direction parse_direction(std::string_view name);

/// Constant terms that need special functions.
enum class SpecialConstant { none, c0, C1_tilde, C2_tilde, C1_hat, C2_hat };

/// coef(n, l, t) * kappa^kappa_power * v^(num/den) [* ln v] with v = n, t or -t.
///
/// `coef` is a small arithmetic expression in n, l (lambda) and t with
/// rational literals, ln(.) and pi; kappa = 10^(1/3).
struct SeriesTerm {
  const char* coef;
  int kappa_power;
  int num;
  int den;
  bool log_var = false;
  SpecialConstant special = SpecialConstant::none;

  double exponent() const { return static_cast<double>(num) / den; }
};

struct SeriesTable {
  std::vector<SeriesTerm> terms;
  int remainder_num;
  int remainder_den;
};

const SeriesTable& large_n_table(Quantity q);
const SeriesTable& long_time_table(Quantity q, Direction d);

struct SeriesValue {
  Quantity quantity;
  Real n;
  WeightParams params;
  int order = 0;
  Real value;
  /// Power of the first dropped term (n for large n, t for long time).
  double truncation_order = 0.0;
  /// Set when lambda < 0, where the large-n expansions were not derived.
  bool outside_regime = false;
};

/// Truncated large-n expansion with `order` terms (0 = all printed terms).
SeriesValue series_largeN(Quantity q, const Real& n, const WeightParams& params, int order,
                          const PrecisionContext& ctx);

/// Truncated t -> +inf / t -> -inf expansion at integer n.
SeriesValue series_longtime(Quantity q, int n, const WeightParams& params, Direction d, int order,
                            const PrecisionContext& ctx);

/// Evaluates a coefficient expression; exposed for tests.
Real eval_coefficient(std::string_view expr, const Real& n, const Real& lambda, const Real& t);

/// c0 = t^3/90 + 2 zeta'(-1) - ln G(l+1) + (l/2) ln 2pi - ln3/24 - ((4l^2-1)/8) ln(5/3).
Real constant_c0(const WeightParams& params, const PrecisionContext& ctx);

}  // namespace gairy
