#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gairy/precision.hpp"
#include "gairy/real.hpp"

namespace gairy {

/// Parameters of w(x) = x^lambda exp(-x^3/3 + t x) on (0, inf).
///
/// Kept as decimal text so they can be re-read exactly at any precision.
class WeightParams {
 public:
  WeightParams(std::string lambda, std::string t);
  /// Shortest round-trip decimal of each double.
  static WeightParams from_double(double lambda, double t);

  const std::string& lambda_text() const { return lambda_; }
  const std::string& t_text() const { return t_; }

  /// Values at the calling thread's working precision.
  Real lambda() const { return Real(lambda_); }
  Real t() const { return Real(t_); }

  double lambda_double() const;
  double t_double() const;

  /// Same lambda, t moved to t + dt (dt at working precision, kept to `digits`).
  WeightParams shifted_t(const Real& dt, int digits) const;

 private:
  std::string lambda_;
  std::string t_;
};

Real weight_eval(const Real& x, const WeightParams& params);

struct Potential {
  Real v;
  Real v_prime;
};

/// v = x^3/3 - t x - lambda ln x and v'.
Potential potential_eval(const Real& x, const WeightParams& params);

struct SeedMoments {
  Real mu0, mu1, mu2;
};

SeedMoments seed_moments(const WeightParams& params, const PrecisionContext& ctx);

/// mu_j by one direct quadrature of x^j w(x).
Real moment_by_quadrature(const WeightParams& params, int j, const PrecisionContext& ctx);

struct MomentTable {
  WeightParams params;
  /// Working digits the moments are carried at.
  int digits = 0;
  std::vector<Real> mu;
  /// Estimated decimal digits lost in the upward recursion.
  double recursion_loss_digits = 0.0;
  /// Index re-checked against direct quadrature (0 when loaded from file).
  int verified_index = 0;

  int jmax() const { return static_cast<int>(mu.size()) - 1; }
};

/// mu_0..mu_jmax: three quadrature seeds, then
///   mu_{j+3} = (j+1+lambda) mu_j + t mu_{j+1}.
/// Cancellation for t < 0 is tracked and the seeds are recomputed with more
/// digits when it would eat into the working precision. One pseudo-randomly
/// chosen index in [3, jmax] is re-checked by direct quadrature.
MomentTable moment_table(const WeightParams& params, int jmax, const PrecisionContext& ctx);

/// Maximum of |mu_{j+3} - (j+1+lambda) mu_j - t mu_{j+1}| / mu_{j+3}.
Real recursion_residual(const MomentTable& table);

/// Positive roots of x^3 - t x - c, i.e. the stationary points of x^c e^{-x^3/3 + t x}.
std::vector<double> stationary_points(double t, double c);

}  // namespace gairy
