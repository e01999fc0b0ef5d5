#include "gairy/moments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gairy/quadrature.hpp"

namespace gairy {
namespace {

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void check_lambda(const WeightParams& params) {
  if (!(params.lambda() > -1)) throw DomainError("lambda must exceed -1");
}

HalflineHints hints_for(const WeightParams& params, std::initializer_list<int> powers) {
  HalflineHints hints;
  double lambda = params.lambda_double();
  double t = params.t_double();
  hints.singular_exponent = lambda + *std::min_element(powers.begin(), powers.end());
  for (int j : powers) {
    for (double x : stationary_points(t, lambda + j)) hints.breakpoints.push_back(x);
  }
  return hints;
}

// log of x^lambda e^{-x^3/3 + t x}
Real log_weight(const Real& x, const Real& lambda, const Real& t) {
  return lambda * log(x) + t * x - x * x * x / 3;
}

// The seed for the pseudo-random re-check depends only on the inputs.
std::uint64_t recheck_seed(const WeightParams& params, int jmax) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    h = (h ^ 0xff) * 1099511628211ULL;
  };
  mix(params.lambda_text());
  mix(params.t_text());
  mix(std::to_string(jmax));
  return h;
}

}  // namespace

WeightParams::WeightParams(std::string lambda, std::string t)
    : lambda_(std::move(lambda)), t_(std::move(t)) {
  PrecisionScope scope(30);
  Real check_lambda_text(lambda_);
  Real check_t_text(t_);
  if (!check_lambda_text.is_finite() || !check_t_text.is_finite()) {
    throw std::invalid_argument("weight parameters must be finite");
  }
}

WeightParams WeightParams::from_double(double lambda, double t) {
  return WeightParams(shortest(lambda), shortest(t));
}

double WeightParams::lambda_double() const { return std::stod(lambda_); }
double WeightParams::t_double() const { return std::stod(t_); }

WeightParams WeightParams::shifted_t(const Real& dt, int digits) const {
  Real shifted = t() + dt;
  return WeightParams(lambda_, shifted.str(digits));
}

std::vector<double> stationary_points(double t, double c) {
  auto f = [&](double x) { return x * x * x - t * x - c; };
  auto bisect = [&](double lo, double hi) {
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
      double mid = 0.5 * (lo + hi);
      ((f(lo) < 0) == (f(mid) < 0) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  std::vector<double> roots;
  double upper = 1.0;
  while (f(upper) < 0) upper *= 2;
  if (t > 0) {
    // f decreases on (0, sqrt(t/3)) and increases afterwards.
    double xc = std::sqrt(t / 3);
    if ((f(0) < 0) != (f(xc) < 0)) roots.push_back(bisect(0, xc));
    if (f(xc) < 0) roots.push_back(bisect(xc, std::max(upper, xc)));
  } else if (f(0) < 0) {
    roots.push_back(bisect(0, upper));
  }
  return roots;
}

Real weight_eval(const Real& x, const WeightParams& params) {
  if (!(x > 0)) throw DomainError("weight_eval: x must be positive");
  return exp(log_weight(x, params.lambda(), params.t()));
}

Potential potential_eval(const Real& x, const WeightParams& params) {
  if (!(x > 0)) throw DomainError("potential_eval: x must be positive");
  Real lambda = params.lambda();
  Real t = params.t();
  Real x2 = x * x;
  return {x2 * x / 3 - t * x - lambda * log(x), x2 - t - lambda / x};
}

SeedMoments seed_moments(const WeightParams& params, const PrecisionContext& ctx) {
  check_lambda(params);
  PrecisionScope scope(ctx.working_digits);
  Real lambda = params.lambda();
  Real t = params.t();
  VectorIntegrand f = [&](const Real& x, std::span<Real> out) {
    Real w = exp(log_weight(x, lambda, t));
    out[0] = w;
    out[1] = w * x;
    out[2] = out[1] * x;
  };
  auto mu = integrate_halfline(f, 3, ctx, hints_for(params, {0, 1, 2}));
  return {mu[0], mu[1], mu[2]};
}

Real moment_by_quadrature(const WeightParams& params, int j, const PrecisionContext& ctx) {
  check_lambda(params);
  if (j < 0) throw std::invalid_argument("moment index must be non-negative");
  PrecisionScope scope(ctx.working_digits);
  Real c = params.lambda() + j;
  Real t = params.t();
  Integrand f = [&](const Real& x) { return exp(log_weight(x, c, t)); };
  return integrate_halfline(f, ctx, hints_for(params, {j}));
}

MomentTable moment_table(const WeightParams& params, int jmax, const PrecisionContext& ctx) {
  if (jmax < 2) throw std::invalid_argument("jmax must be at least 2");
  check_lambda(params);

  PrecisionContext run = ctx;
  for (int attempt = 0; attempt < 4; ++attempt) {
    PrecisionScope scope(run.working_digits);
    Real lambda = params.lambda();
    Real t = params.t();
    SeedMoments seeds = seed_moments(params, run);

    MomentTable table{params, run.working_digits, {}, 0.0, 0};
    table.mu.reserve(jmax + 1);
    table.mu.push_back(seeds.mu0);
    table.mu.push_back(seeds.mu1);
    table.mu.push_back(seeds.mu2);

    // Relative error bound carried through the recursion.
    const double seed_err = std::pow(10.0, -run.quad_tol_digits);
    std::vector<double> err(jmax + 1, seed_err);
    double worst = seed_err;
    for (int j = 0; j + 3 <= jmax; ++j) {
      Real a = (lambda + (j + 1)) * table.mu[j];
      Real b = t * table.mu[j + 1];
      Real next = a + b;
      if (!(next > 0)) {
        throw PrecisionError("moment recursion lost positivity at j = " + std::to_string(j + 3));
      }
      double scale = (abs(a).to_double() * err[j] + abs(b).to_double() * err[j + 1]) /
                     next.to_double();
      // Ratios can leave double range for very large tables; fall back to logs.
      if (!std::isfinite(scale)) {
        double la = abs(a).log10_abs() + std::log10(err[j]);
        double lb = b.is_zero() ? -1e9 : abs(b).log10_abs() + std::log10(err[j + 1]);
        scale = std::pow(10.0, std::max(la, lb) + 0.31 - next.log10_abs());
      }
      err[j + 3] = scale;
      worst = std::max(worst, scale);
      table.mu.push_back(std::move(next));
    }
    table.recursion_loss_digits = std::max(0.0, std::log10(worst / seed_err));

    // Keep at least target + 20 digits after the loss; otherwise redo the seeds.
    double kept = -std::log10(worst);
    if (kept < run.target_digits + 20 && attempt < 3) {
      int extra = static_cast<int>(std::ceil(run.target_digits + 25 - kept));
      run = run.with_working(run.working_digits + extra);
      continue;
    }

    if (jmax >= 3) {
      std::mt19937_64 rng(recheck_seed(params, jmax));
      std::uniform_int_distribution<int> pick(3, jmax);
      int j = pick(rng);
      Real direct = moment_by_quadrature(params, j, run);
      Real rel = relative_difference(direct, table.mu[j]);
      if (rel > pow10(-run.target_digits)) {
        throw PrecisionError("moment recursion disagrees with quadrature at j = " +
                             std::to_string(j) + " (relative difference " + rel.str(3) + ")");
      }
      table.verified_index = j;
    }
    return table;
  }
  throw PrecisionError("moment recursion loses too many digits");
}

Real recursion_residual(const MomentTable& table) {
  PrecisionScope scope(table.digits);
  Real lambda = table.params.lambda();
  Real t = table.params.t();
  Real worst(0);
  for (int j = 0; j + 3 <= table.jmax(); ++j) {
    Real r = table.mu[j + 3] - (lambda + (j + 1)) * table.mu[j] - t * table.mu[j + 1];
    worst = max(worst, abs(r) / table.mu[j + 3]);
  }
  return worst;
}

}  // namespace gairy
