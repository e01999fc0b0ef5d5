#pragma once

// Value-semantic wrapper over an MPFR float.
//
// New values (constructors, arithmetic results) are created at the calling
// thread's working precision, set through PrecisionScope. Copies keep the
// precision of their source. Mixed-precision arithmetic is exact MPFR
// semantics: operands at any precision, result correctly rounded to the
// working precision.

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace gairy {

/// Decimal digits -> MPFR bits (with a few guard bits).
mpfr_prec_t digits_to_bits(int digits);

/// Working precision of the calling thread.
mpfr_prec_t working_bits() noexcept;
int working_digits() noexcept;

class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(unsigned long v);
  explicit Real(double v);
  /// Parses a decimal literal ("0.7", "-1e-3") correctly rounded.
  explicit Real(std::string_view decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr raw() noexcept { return value_; }
  mpfr_srcptr raw() const noexcept { return value_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  Real operator-() const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Approximate log10(|x|); -inf for zero.
  double log10_abs() const noexcept;

  /// Scientific notation with `digits` significant digits.
  std::string str(int digits) const;

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
namespace detail {
Real add_si(const Real& a, long b);
Real sub_si(const Real& a, long b);
Real si_sub(long a, const Real& b);
Real mul_si(const Real& a, long b);
Real div_si(const Real& a, long b);
Real si_div(long a, const Real& b);
int cmp_si(const Real& a, long b);
}  // namespace detail

template <std::integral I>
Real operator+(const Real& a, I b) { return detail::add_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator-(const Real& a, I b) { return detail::sub_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator*(const Real& a, I b) { return detail::mul_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator/(const Real& a, I b) { return detail::div_si(a, static_cast<long>(b)); }
template <std::integral I>
Real operator+(I a, const Real& b) { return detail::add_si(b, static_cast<long>(a)); }
template <std::integral I>
Real operator-(I a, const Real& b) { return detail::si_sub(static_cast<long>(a), b); }
template <std::integral I>
Real operator*(I a, const Real& b) { return detail::mul_si(b, static_cast<long>(a)); }
template <std::integral I>
Real operator/(I a, const Real& b) { return detail::si_div(static_cast<long>(a), b); }

// Binary floats are never silently mixed in.
template <std::floating_point F> Real operator+(const Real&, F) = delete;
template <std::floating_point F> Real operator-(const Real&, F) = delete;
template <std::floating_point F> Real operator*(const Real&, F) = delete;
template <std::floating_point F> Real operator/(const Real&, F) = delete;
template <std::floating_point F> Real operator+(F, const Real&) = delete;
template <std::floating_point F> Real operator-(F, const Real&) = delete;
template <std::floating_point F> Real operator*(F, const Real&) = delete;
template <std::floating_point F> Real operator/(F, const Real&) = delete;

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);
template <std::integral I>
bool operator==(const Real& a, I b) { return detail::cmp_si(a, static_cast<long>(b)) == 0; }
template <std::integral I>
std::partial_ordering operator<=>(const Real& a, I b) {
  if (mpfr_nan_p(a.raw())) return std::partial_ordering::unordered;
  return detail::cmp_si(a, static_cast<long>(b)) <=> 0;
}
template <std::floating_point F> bool operator==(const Real&, F) = delete;
template <std::floating_point F> std::partial_ordering operator<=>(const Real&, F) = delete;

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real expm1(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
template <std::floating_point F> Real pow(const Real&, F) = delete;
Real ldexp(const Real& x, long k);
Real lngamma(const Real& x);
Real zeta(unsigned long s);
Real factorial(unsigned long k);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real const_pi();
Real const_euler();
Real const_log2();

/// 10^k at working precision.
Real pow10(long k);

}  // namespace gairy
