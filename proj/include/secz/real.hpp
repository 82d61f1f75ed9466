// Multiprecision real number built on MPFR.
//
// Every new value is created at the calling thread's working precision,
// which is set with PrecisionGuard. Copies keep the precision of their
// source; compound assignment rounds to the destination's precision.
#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace secz {

mpfr_prec_t digits_to_bits(long digits);
long bits_to_digits(mpfr_prec_t bits);

mpfr_prec_t working_bits();
long working_digits();

// Scoped change of the thread-local working precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(long digits);
  static PrecisionGuard bits(mpfr_prec_t b);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  struct BitsTag {};
  PrecisionGuard(BitsTag, mpfr_prec_t b);
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(unsigned long v);
  Real(double v);
  explicit Real(std::string_view decimal);
  explicit Real(const mpz_class& z);
  explicit Real(const mpq_class& q);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Round in place to the current working precision.
  Real& rebase();

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  Real& operator/=(long k);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // log10|x| as a double, -inf for zero.
  double log10_abs() const;

  // Round-to-nearest decimal with `sig` significant digits, "d.ddd...e<exp>".
  std::string to_sci(long sig) const;
  // Fixed-point decimal truncated (toward zero) after `decimals` places.
  std::string to_fixed(long decimals) const;

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long k);
Real operator*(long k, const Real& a);
Real operator/(const Real& a, long k);

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real floor(const Real& x);
Real ceil(const Real& x);
Real round(const Real& x);
// Multiply by 2^k exactly.
Real ldexp(const Real& x, long k);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

// MPFR-backed; arguments must avoid poles.
Real mpfr_gamma_fn(const Real& x);
Real mpfr_lngamma_fn(const Real& x);
Real mpfr_digamma_fn(const Real& x);

Real const_pi();
Real const_euler();
Real const_log2();
Real const_catalan();

Real factorial(unsigned long n);
Real binomial(unsigned long n, unsigned long k);
bool is_integer(const Real& x);

// Exact rational value of a binary float, used to hash/compare node keys.
mpq_class to_rational(const Real& x);

}  // namespace secz
