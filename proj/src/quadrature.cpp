#include "gairy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gairy {
namespace {

constexpr int kMaxLevels = 13;
constexpr int kMinLevels = 3;
constexpr int kMaxScanSteps = 24;  // |s| <= 12
constexpr double kMaxCutoff = 1e7;

// h at level 0; level l uses h0 / 2^l.
const long kLevelZeroInvStep = 2;

struct PanelResult {
  std::vector<Real> value;
  std::vector<Real> last;
  std::vector<Real> previous;
  bool converged = false;
};

class TanhSinhPanel {
 public:
  TanhSinhPanel(const VectorIntegrand& f, std::size_t m, Real a, Real b)
      : f_(f), m_(m), a_(std::move(a)), b_(std::move(b)), length_(b_ - a_),
        pi_(const_pi()), buffer_(m) {}

  PanelResult integrate(const Real& tol, const Real& tail_eps) {
    std::vector<Real> sum(m_), l1(m_), peak(m_);
    add_node(Real(0), sum, l1, &peak);

    // Level-0 sweep outward decides how far each side needs to go.
    long right = scan_side(+1, sum, l1, peak, tail_eps);
    long left = scan_side(-1, sum, l1, peak, tail_eps);

    PanelResult out;
    Real h = Real(1) / kLevelZeroInvStep;
    std::vector<Real> estimate = scaled(sum, h);
    for (int level = 1; level <= kMaxLevels; ++level) {
      h = h / 2;
      long denom = kLevelZeroInvStep << level;
      long kmax_right = right << level;
      long kmax_left = left << level;
      for (long k = 1; k < kmax_right; k += 2) add_node(Real(k) / denom, sum, l1, nullptr);
      for (long k = 1; k < kmax_left; k += 2) add_node(-Real(k) / denom, sum, l1, nullptr);

      std::vector<Real> next = scaled(sum, h);
      std::vector<Real> norm = scaled(l1, h);
      bool done = level >= kMinLevels;
      for (std::size_t i = 0; i < m_ && done; ++i) {
        if (abs(next[i] - estimate[i]) > tol * norm[i]) done = false;
      }
      out.previous = std::move(estimate);
      estimate = std::move(next);
      if (done) {
        out.converged = true;
        break;
      }
    }
    out.last = estimate;
    out.value = std::move(estimate);
    return out;
  }

 private:
  // Adds w(s) f(x(s)) to the running sums.
  void add_node(const Real& s, std::vector<Real>& sum, std::vector<Real>& l1,
                std::vector<Real>* terms) {
    Real es = exp(abs(s));
    Real inv_es = 1 / es;
    Real sinh_s = (es - inv_es) / 2;
    Real cosh_s = (es + inv_es) / 2;
    Real q = exp(-(pi_ * sinh_s));  // exp(-2u), u = (pi/2) sinh|s|
    Real one_plus_q = 1 + q;
    Real delta = length_ * q / one_plus_q;
    Real weight = length_ * pi_ * cosh_s * q / (one_plus_q * one_plus_q);
    Real x = s.sign() >= 0 ? b_ - delta : a_ + delta;
    if (s.is_zero()) x = a_ + length_ / 2;
    f_(x, buffer_);
    for (std::size_t i = 0; i < m_; ++i) {
      Real term = weight * buffer_[i];
      if (!term.is_finite()) {
        throw QuadratureError("integrand not finite at x = " + x.str(20), Real(0), Real(0));
      }
      Real mag = abs(term);
      sum[i] += term;
      l1[i] += mag;
      if (terms != nullptr) (*terms)[i] = std::move(mag);
    }
  }

  long scan_side(int direction, std::vector<Real>& sum, std::vector<Real>& l1,
                 std::vector<Real>& peak, const Real& tail_eps) {
    std::vector<Real> terms(m_);
    int quiet = 0;
    long k = 1;
    for (; k <= kMaxScanSteps; ++k) {
      add_node(Real(direction * k) / kLevelZeroInvStep, sum, l1, &terms);
      bool small = true;
      for (std::size_t i = 0; i < m_; ++i) {
        if (terms[i] > peak[i]) peak[i] = terms[i];
        if (terms[i] > tail_eps * peak[i]) small = false;
      }
      quiet = small ? quiet + 1 : 0;
      if (quiet >= 2) break;
    }
    return std::min<long>(k, kMaxScanSteps) + 1;
  }

  std::vector<Real> scaled(const std::vector<Real>& v, const Real& h) const {
    std::vector<Real> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x * h);
    return out;
  }

  const VectorIntegrand& f_;
  std::size_t m_;
  Real a_, b_, length_, pi_;
  std::vector<Real> buffer_;
};

std::string describe(const Real& last, const Real& previous) {
  std::ostringstream os;
  os << "quadrature failed to converge: last estimate " << last.str(25) << ", previous "
     << previous.str(25);
  return os.str();
}

Real sup_norm(const VectorIntegrand& f, std::vector<Real>& buffer, const Real& x) {
  f(x, buffer);
  Real m(0);
  for (const auto& v : buffer) m = max(m, abs(v));
  return m;
}

}  // namespace

QuadratureError::QuadratureError(const std::string& what, Real last, Real previous)
    : std::runtime_error(what), last_(std::move(last)), previous_(std::move(previous)) {}

std::vector<Real> integrate_halfline(const VectorIntegrand& f, std::size_t components,
                                     const PrecisionContext& ctx, const HalflineHints& hints) {
  if (!(hints.singular_exponent > -1.0)) {
    throw DomainError("integrate_halfline: singular exponent must exceed -1");
  }
  PrecisionScope scope(ctx.working_digits);

  std::vector<double> cuts{1.0};
  for (double c : hints.breakpoints) {
    if (std::isfinite(c) && c > 0.0) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> distinct;
  for (double c : cuts) {
    if (distinct.empty() || c > distinct.back() * (1 + 1e-6) + 1e-12) distinct.push_back(c);
  }

  std::vector<Real> buffer(components);
  Real reference(0);
  for (double c : distinct) reference = max(reference, sup_norm(f, buffer, Real(c)));
  for (double probe = 2.0; reference.is_zero() && probe < 1e3; probe *= 2) {
    reference = max(reference, sup_norm(f, buffer, Real(probe)));
  }

  // Doubling search for the truncation point X*.
  Real negligible = reference * pow10(-(ctx.working_digits + 10));
  double last = distinct.back();
  double step = 1.0;
  double cutoff = last + step;
  while (true) {
    Real x(cutoff);
    if (sup_norm(f, buffer, x) * x <= negligible) break;
    step *= 2;
    cutoff = last + step;
    if (cutoff > kMaxCutoff) {
      throw QuadratureError("integrand does not decay on the half line", Real(0), Real(0));
    }
  }
  distinct.push_back(cutoff);

  Real tol = ctx.quad_rel_tol();
  Real tail_eps = tol * pow10(-5);
  std::vector<Real> total(components);
  Real lower(0);
  for (double upper_value : distinct) {
    Real upper(upper_value);
    TanhSinhPanel panel(f, components, lower, upper);
    PanelResult r = panel.integrate(tol, tail_eps);
    if (!r.converged) {
      throw QuadratureError(describe(r.last[0], r.previous[0]), r.last[0], r.previous[0]);
    }
    for (std::size_t i = 0; i < components; ++i) total[i] += r.value[i];
    lower = upper;
  }
  return total;
}

Real integrate_halfline(const Integrand& f, const PrecisionContext& ctx,
                        const HalflineHints& hints) {
  VectorIntegrand g = [&f](const Real& x, std::span<Real> out) { out[0] = f(x); };
  return integrate_halfline(g, 1, ctx, hints).front();
}

Real integrate_interval(const Integrand& f, const Real& a, const Real& b,
                        const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working_digits);
  VectorIntegrand g = [&f](const Real& x, std::span<Real> out) { out[0] = f(x); };
  Real tol = ctx.quad_rel_tol();
  TanhSinhPanel panel(g, 1, a, b);
  PanelResult r = panel.integrate(tol, tol * pow10(-5));
  if (!r.converged) {
    throw QuadratureError(describe(r.last[0], r.previous[0]), r.last[0], r.previous[0]);
  }
  return r.value[0];
}

}  // namespace gairy
