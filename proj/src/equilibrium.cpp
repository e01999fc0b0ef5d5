#include "gairy/equilibrium.hpp"

#include <string>

#include "gairy/series.hpp"

namespace gairy {
namespace {

constexpr int kMaxNewton = 200;

struct System {
  Real f1, f2;
};

System residuals(const Real& X, const Real& Y, const Real& n, const Real& lambda, const Real& t) {
  Real y2 = Y * Y;
  Real f1 = lambda.is_zero() ? Real(0) : 3 * X * X - 4 * y2 - 8 * t - 8 * lambda / Y;
  Real f2 = X * (5 * X * X - 12 * y2 - 8 * t) - 16 * (2 * n + lambda);
  return {f1, f2};
}

Real norm(const System& s, const Real& scale1, const Real& scale2) {
  return max(abs(s.f1) / scale1, abs(s.f2) / scale2);
}

Real solve_cubic(const Real& n, const Real& t, const Real& tol, int& iterations) {
  // 5X^3 - 8tX - 32n is convex for X > 0 and negative at 0, so Newton from the
  // right of the root converges monotonically.
  Real X = max(cbrt(32 * n / 5), sqrt(max(8 * t / 5, Real(0)))) * 2;
  for (iterations = 1; iterations <= kMaxNewton; ++iterations) {
    Real f = 5 * X * X * X - 8 * t * X - 32 * n;
    Real step = f / (15 * X * X - 8 * t);
    X -= step;
    if (abs(step) <= tol * abs(X)) return X;
  }
  throw PrecisionError("equilibrium cubic: Newton did not converge, last X = " + X.str(20));
}

}  // namespace

EquilibriumSupport solve_endpoints(const Real& n, const WeightParams& params,
                                   const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working_digits);
  Real lambda = params.lambda();
  Real t = params.t();
  if (lambda < 0) throw DomainError("equilibrium solver requires lambda >= 0");
  if (!(n >= 1)) throw DomainError("equilibrium solver requires n >= 1");
  Real tol = pow10(-(ctx.working_digits - 5));

  EquilibriumSupport out{n, params, {}, {}, {}, {}, {}, {}, {}, 0};
  if (lambda.is_zero()) {
    out.X = solve_cubic(n, t, tol, out.iterations);
    out.Y = Real(0);
  } else {
    Real X = series_largeN(Quantity::X, n, params, 0, ctx).value;
    Real Y = series_largeN(Quantity::Y, n, params, 0, ctx).value;
    // Small n can push the series outside the admissible region.
    if (!(X > 0) || !(Y > 0) || !(X > 2 * Y)) {
      X = cbrt(32 * n / 5) + 1;
      Y = lambda / (lambda + 1);
    }
    Real u = log(Y);
    Real scale1 = 8 * (abs(t) + lambda) + 1;
    Real scale2 = 16 * (2 * n + lambda);
    System s = residuals(X, Y, n, lambda, t);
    bool converged = false;
    for (int it = 1; it <= kMaxNewton && !converged; ++it) {
      out.iterations = it;
      Real y2 = Y * Y;
      Real j11 = 6 * X;
      Real j12 = -8 * y2 + 8 * lambda / Y;
      Real j21 = 15 * X * X - 12 * y2 - 8 * t;
      Real j22 = -24 * X * y2;
      Real det = j11 * j22 - j12 * j21;
      if (det.is_zero()) throw PrecisionError("equilibrium solver: singular Jacobian");
      Real dX = (s.f1 * j22 - s.f2 * j12) / det;
      Real du = (j11 * s.f2 - j21 * s.f1) / det;

      // Damped step: halve until the scaled residual decreases.
      Real current = norm(s, scale1, scale2);
      Real damping(1);
      for (int k = 0; k < 60; ++k) {
        Real Xn = X - damping * dX;
        Real un = u - damping * du;
        Real Yn = exp(un);
        if (Xn > 2 * Yn) {
          System sn = residuals(Xn, Yn, n, lambda, t);
          if (norm(sn, scale1, scale2) < current || k == 59) {
            X = std::move(Xn), u = std::move(un), Y = std::move(Yn), s = std::move(sn);
            break;
          }
        }
        damping = damping / 2;
      }
      converged = abs(damping * dX) <= tol * abs(X) && abs(damping * du) <= tol * (1 + abs(u));
    }
    if (!converged) {
      throw PrecisionError("equilibrium solver: Newton did not converge, last X = " + X.str(20) +
                           ", Y = " + Y.str(20));
    }
    out.X = X;
    out.Y = Y;
  }
  System s = residuals(out.X, out.Y, n, lambda, t);
  out.residual1 = s.f1;
  out.residual2 = s.f2;
  Real disc = sqrt(out.X * out.X - 4 * out.Y * out.Y);
  out.a = (out.X - disc) / 2;
  out.b = (out.X + disc) / 2;
  out.A_mult = lagrange_multiplier(out);
  return out;
}

Real lagrange_multiplier(const EquilibriumSupport& s) {
  if (!(s.X > 2 * s.Y)) throw DomainError("lagrange_multiplier: needs X > 2Y");
  PrecisionScope scope(static_cast<int>((s.X.bits() - 16) / 3.321928094887362));
  Real lambda = s.params.lambda();
  Real t = s.params.t();
  Real A = s.X * (5 * s.X * s.X - 12 * s.Y * s.Y - 24 * t) / 48 -
           s.n * log((s.X * s.X - 4 * s.Y * s.Y) / 16);
  if (!lambda.is_zero()) A -= lambda * log((s.X + 2 * s.Y) / 4);
  return A;
}

}  // namespace gairy
