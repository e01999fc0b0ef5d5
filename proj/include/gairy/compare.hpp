#pragma once

#include <vector>

#include "gairy/series.hpp"

namespace gairy {

struct ComparisonRow {
  Real grid;  // n or t
  Real exact;
  Real series;
  Real error;  // exact - series
  /// log|e_i / e_{i-1}| / log|g_i / g_{i-1}|; NaN on the first row.
  double local_exponent;
};

struct Comparison {
  Quantity quantity;
  bool long_time = false;
  Direction direction = Direction::plus;
  int order = 0;
  double truncation_order = 0.0;
  std::vector<ComparisonRow> rows;
  /// Least-squares slope of log|error| against log|grid|.
  double fitted_exponent = 0.0;
  bool outside_regime = false;

  bool exponent_matches(double tolerance = 0.5) const;
};

/// Least-squares slope of log|y| against log|x|; needs at least three points.
double fit_exponent(const std::vector<Real>& x, const std::vector<Real>& y);

/// Exact values at each n (one pipeline run up to max n, or the endpoint solver
/// for X, Y, A_mult) against series_largeN.
Comparison compare_asymptotics(Quantity q, const WeightParams& params, const std::vector<int>& n_list,
                               int order, const PrecisionContext& ctx);

/// Exact values at each t (one pipeline run per t) against series_longtime.
Comparison compare_longtime(Quantity q, int n, const WeightParams& params,
                            const std::vector<std::string>& t_list, int order,
                            const PrecisionContext& ctx);

}  // namespace gairy
