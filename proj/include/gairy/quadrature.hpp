#pragma once

// Double-exponential quadrature on (0, inf) at arbitrary precision.
//
// The half line is cut at 1 and at any caller-supplied breakpoints (peaks of
// the integrand), then truncated at X* where the integrand has fallen below
// 10^-(working+10) of its size at the breakpoints. Every panel is integrated
// with tanh-sinh, so an x^s singularity at 0 needs no special handling.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gairy/precision.hpp"
#include "gairy/real.hpp"

namespace gairy {

struct HalflineHints {
  /// f(x) ~ x^s as x -> 0; must exceed -1.
  double singular_exponent = 0.0;
  /// Interior points worth splitting at, e.g. the maxima of f.
  std::vector<double> breakpoints;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, Real last, Real previous);
  const Real& last_estimate() const { return last_; }
  const Real& previous_estimate() const { return previous_; }

 private:
  Real last_;
  Real previous_;
};

using Integrand = std::function<Real(const Real&)>;
/// Writes `out.size()` integrand components at x.
using VectorIntegrand = std::function<void(const Real&, std::span<Real>)>;

Real integrate_halfline(const Integrand& f, const PrecisionContext& ctx,
                        const HalflineHints& hints = {});

std::vector<Real> integrate_halfline(const VectorIntegrand& f, std::size_t components,
                                     const PrecisionContext& ctx, const HalflineHints& hints = {});

/// Tanh-sinh on a finite interval; tolerates integrable endpoint singularities.
Real integrate_interval(const Integrand& f, const Real& a, const Real& b,
                        const PrecisionContext& ctx);

}  // namespace gairy
