#include "gairy/real.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gairy {
namespace {

constexpr int kDefaultDigits = 50;

thread_local mpfr_prec_t t_working_bits = 0;

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

mpfr_prec_t working_bits() noexcept {
  if (t_working_bits == 0) t_working_bits = digits_to_bits(kDefaultDigits);
  return t_working_bits;
}

int working_digits() noexcept {
  return static_cast<int>((working_bits() - 16) / 3.321928094887362);
}

PrecisionScope::PrecisionScope(int digits) : saved_(working_bits()) {
  t_working_bits = digits_to_bits(digits);
}

PrecisionScope::~PrecisionScope() { t_working_bits = saved_; }

Real::Real() {
  mpfr_init2(value_, working_bits());
  mpfr_set_zero(value_, 1);
}

Real::Real(int v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(long v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(unsigned long v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_ui(value_, v, MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(std::string_view decimal) {
  mpfr_init2(value_, working_bits());
  std::string text(decimal);
  char* end = nullptr;
  if (!text.empty()) mpfr_strtofr(value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == text.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (bits() != other.bits()) mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

// Compound assignment rounds to the working precision, like the binary ops.
Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

double Real::log10_abs() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log10(std::fabs(mantissa)) + static_cast<double>(exponent) * 0.30102999566398120;
}

std::string Real::str(int digits) const {
  if (digits < 1) digits = 1;
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", digits - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

#define GAIRY_BINARY(op, fn)                          \
  Real operator op(const Real& a, const Real& b) {    \
    Real r;                                           \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);         \
    return r;                                         \
  }
GAIRY_BINARY(+, mpfr_add)
GAIRY_BINARY(-, mpfr_sub)
GAIRY_BINARY(*, mpfr_mul)
GAIRY_BINARY(/, mpfr_div)
#undef GAIRY_BINARY

namespace detail {
Real add_si(const Real& a, long b) { Real r; mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real sub_si(const Real& a, long b) { Real r; mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real si_sub(long a, const Real& b) { Real r; mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
Real mul_si(const Real& a, long b) { Real r; mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real div_si(const Real& a, long b) { Real r; mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real si_div(long a, const Real& b) { Real r; mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
int cmp_si(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b); }
}  // namespace detail

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  return mpfr_cmp(a.raw(), b.raw()) <=> 0;
}

#define GAIRY_UNARY(name, fn)         \
  Real name(const Real& x) {          \
    Real r;                           \
    fn(r.raw(), x.raw(), MPFR_RNDN);  \
    return r;                         \
  }
GAIRY_UNARY(abs, mpfr_abs)
GAIRY_UNARY(sqrt, mpfr_sqrt)
GAIRY_UNARY(cbrt, mpfr_cbrt)
GAIRY_UNARY(exp, mpfr_exp)
GAIRY_UNARY(log, mpfr_log)
GAIRY_UNARY(log1p, mpfr_log1p)
GAIRY_UNARY(expm1, mpfr_expm1)
GAIRY_UNARY(sinh, mpfr_sinh)
GAIRY_UNARY(cosh, mpfr_cosh)
GAIRY_UNARY(lngamma, mpfr_lngamma)
#undef GAIRY_UNARY

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long k) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long k) {
  Real r;
  mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

Real zeta(unsigned long s) {
  Real r;
  mpfr_zeta_ui(r.raw(), s, MPFR_RNDN);
  return r;
}

Real factorial(unsigned long k) {
  Real r;
  mpfr_fac_ui(r.raw(), k, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real const_pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real const_euler() {
  Real r;
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

Real const_log2() {
  Real r;
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

Real pow10(long k) {
  Real r;
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
  if (k < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

}  // namespace gairy
