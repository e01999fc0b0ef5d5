#include "gairy/compare.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "gairy/equilibrium.hpp"
#include "gairy/pipeline.hpp"

namespace gairy {
namespace {

Real exact_from(const ExactSolution& s, Quantity q, int n) {
  PrecisionScope scope(s.ctx.working_digits);
  const RecurrenceTable& tb = s.recurrence;
  switch (q) {
    case Quantity::alpha: return tb.alpha.at(n);
    case Quantity::beta: return tb.beta.at(n);
    case Quantity::p: return tb.p.at(n);
    case Quantity::lnD: return tb.log_hankel().at(n);
    case Quantity::lnh: return log(tb.h.at(n));
    default: throw std::invalid_argument("no exact pipeline value for this quantity");
  }
}

void fill_exponents(Comparison& c) {
  std::vector<Real> g, e;
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    auto& row = c.rows[i];
    g.push_back(row.grid);
    e.push_back(row.error);
    row.local_exponent = std::nan("");
    if (i > 0) {
      const auto& prev = c.rows[i - 1];
      double num = abs(row.error).log10_abs() - abs(prev.error).log10_abs();
      double den = abs(row.grid).log10_abs() - abs(prev.grid).log10_abs();
      row.local_exponent = num / den;
    }
  }
  c.fitted_exponent = c.rows.size() >= 3 ? fit_exponent(g, e) : std::nan("");
}

}  // namespace

bool Comparison::exponent_matches(double tolerance) const {
  return std::isfinite(fitted_exponent) && std::fabs(fitted_exponent - truncation_order) <= tolerance;
}

double fit_exponent(const std::vector<Real>& x, const std::vector<Real>& y) {
  if (x.size() != y.size() || x.size() < 3) {
    throw std::invalid_argument("exponent fit needs at least three points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = abs(x[i]).log10_abs();
    double ly = abs(y[i]).log10_abs();
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

Comparison compare_asymptotics(Quantity q, const WeightParams& params, const std::vector<int>& n_list,
                               int order, const PrecisionContext& ctx) {
  if (n_list.empty()) throw std::invalid_argument("empty n grid");
  for (int n : n_list) {
    if (n < 1) throw std::invalid_argument("n grid values must be at least 1");
  }
  Comparison c;
  c.quantity = q;
  c.order = order;
  c.outside_regime = params.lambda_double() < 0;

  const bool solver = q == Quantity::X || q == Quantity::Y || q == Quantity::A_mult;
  std::optional<ExactSolution> exact;
  PrecisionContext run = ctx;
  if (!solver) {
    int nmax = *std::max_element(n_list.begin(), n_list.end()) + 1;
    exact = solve_exact(params, nmax, ctx);
    run = exact->ctx;
  }
  PrecisionScope scope(run.working_digits);
  for (int n : n_list) {
    Real value;
    if (solver) {
      EquilibriumSupport s = solve_endpoints(Real(n), params, run);
      value = q == Quantity::X ? s.X : q == Quantity::Y ? s.Y : s.A_mult;
    } else {
      value = exact_from(*exact, q, n);
    }
    SeriesValue sv = series_largeN(q, Real(n), params, order, run);
    c.truncation_order = sv.truncation_order;
    c.order = sv.order;
    c.rows.push_back({Real(n), value, sv.value, value - sv.value, 0.0});
  }
  fill_exponents(c);
  return c;
}

Comparison compare_longtime(Quantity q, int n, const WeightParams& params,
                            const std::vector<std::string>& t_list, int order,
                            const PrecisionContext& ctx) {
  if (t_list.empty()) throw std::invalid_argument("empty t grid");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Comparison c;
  c.quantity = q;
  c.long_time = true;
  c.order = order;
  for (const auto& t : t_list) {
    WeightParams at(params.lambda_text(), t);
    Direction d = at.t_double() > 0 ? Direction::plus : Direction::minus;
    if (!c.rows.empty() && d != c.direction) {
      throw std::invalid_argument("t grid must not change sign");
    }
    c.direction = d;
    ExactSolution s = solve_exact(at, n + 1, ctx);
    PrecisionScope scope(s.ctx.working_digits);
    Real value = exact_from(s, q, n);
    SeriesValue sv = series_longtime(q, n, at, d, order, s.ctx);
    c.truncation_order = sv.truncation_order;
    c.order = sv.order;
    c.rows.push_back({at.t(), value, sv.value, value - sv.value, 0.0});
  }
  fill_exponents(c);
  return c;
}

}  // namespace gairy
