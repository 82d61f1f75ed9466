#include "secz/real.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "secz/errors.hpp"

namespace secz {

namespace {
thread_local mpfr_prec_t g_bits = 0;

mpfr_prec_t current_bits() {
  if (g_bits == 0) g_bits = digits_to_bits(50);
  return g_bits;
}
}  // namespace

mpfr_prec_t digits_to_bits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

long bits_to_digits(mpfr_prec_t bits) {
  return static_cast<long>(std::floor((bits - 8) * 0.30102999566398120));
}

mpfr_prec_t working_bits() { return current_bits(); }
long working_digits() { return bits_to_digits(current_bits()); }

PrecisionGuard::PrecisionGuard(long digits) : saved_(current_bits()) {
  g_bits = digits_to_bits(digits);
}
PrecisionGuard::PrecisionGuard(BitsTag, mpfr_prec_t b) : saved_(current_bits()) {
  g_bits = b;
}
PrecisionGuard PrecisionGuard::bits(mpfr_prec_t b) { return PrecisionGuard(BitsTag{}, b); }
PrecisionGuard::~PrecisionGuard() { g_bits = saved_; }

Real::Real() {
  mpfr_init2(v_, current_bits());
  mpfr_set_zero(v_, 1);
}
Real::Real(int v) : Real(static_cast<long>(v)) {}
Real::Real(long v) {
  mpfr_init2(v_, current_bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(unsigned long v) {
  mpfr_init2(v_, current_bits());
  mpfr_set_ui(v_, v, MPFR_RNDN);
}
Real::Real(double v) {
  mpfr_init2(v_, current_bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(std::string_view decimal) {
  mpfr_init2(v_, current_bits());
  std::string s(decimal);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw Error(ErrorKind::parse, "not a decimal number: '" + s + "'");
  }
}
Real::Real(const mpz_class& z) {
  mpfr_init2(v_, current_bits());
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}
Real::Real(const mpq_class& q) {
  mpfr_init2(v_, current_bits());
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real& Real::rebase() {
  mpfr_prec_round(v_, current_bits(), MPFR_RNDN);
  return *this;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}
Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

double Real::log10_abs() const {
  if (is_zero()) return -INFINITY;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + e * 0.30102999566398120;
}

std::string Real::to_sci(long sig) const {
  if (is_zero()) return "0";
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string out;
  if (digits[0] == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  out += digits[0];
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

std::string Real::to_fixed(long decimals) const {
  if (!is_finite()) return to_sci(10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  mpfr_t y;
  mpfr_init2(y, mpfr_get_prec(v_) + static_cast<mpfr_prec_t>(mpz_sizeinbase(scale.get_mpz_t(), 2)) + 2);
  mpfr_mul_z(y, v_, scale.get_mpz_t(), MPFR_RNDN);  // exact at this precision
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), y, MPFR_RNDZ);
  mpfr_clear(y);
  bool neg = sign() < 0;
  std::string digits = mpz_class(abs(z)).get_str();
  if (static_cast<long>(digits.size()) <= decimals)
    digits.insert(0, static_cast<size_t>(decimals + 1 - static_cast<long>(digits.size())), '0');
  std::string out = neg ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<size_t>(decimals));
  if (decimals > 0) out += "." + digits.substr(digits.size() - static_cast<size_t>(decimals));
  return out;
}

#define SECZ_BINOP(op, fn)                           \
  Real operator op(const Real& a, const Real& b) {   \
    Real r;                                          \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);        \
    return r;                                        \
  }
SECZ_BINOP(+, mpfr_add)
SECZ_BINOP(-, mpfr_sub)
SECZ_BINOP(*, mpfr_mul)
SECZ_BINOP(/, mpfr_div)
#undef SECZ_BINOP

Real operator*(const Real& a, long k) {
  Real r;
  mpfr_mul_si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}
Real operator*(long k, const Real& a) { return a * k; }
Real operator/(const Real& a, long k) {
  Real r;
  mpfr_div_si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.raw(), b.raw());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_sci(std::max<long>(6, bits_to_digits(x.precision())));
}

#define SECZ_UNARY(name, fn)          \
  Real name(const Real& x) {          \
    Real r;                           \
    fn(r.raw(), x.raw(), MPFR_RNDN);  \
    return r;                         \
  }
SECZ_UNARY(abs, mpfr_abs)
SECZ_UNARY(sqrt, mpfr_sqrt)
SECZ_UNARY(exp, mpfr_exp)
SECZ_UNARY(expm1, mpfr_expm1)
SECZ_UNARY(log, mpfr_log)
SECZ_UNARY(log1p, mpfr_log1p)
SECZ_UNARY(sin, mpfr_sin)
SECZ_UNARY(cos, mpfr_cos)
SECZ_UNARY(tan, mpfr_tan)
SECZ_UNARY(atan, mpfr_atan)
SECZ_UNARY(sinh, mpfr_sinh)
SECZ_UNARY(cosh, mpfr_cosh)
SECZ_UNARY(tanh, mpfr_tanh)
SECZ_UNARY(mpfr_gamma_fn, mpfr_gamma)
SECZ_UNARY(mpfr_digamma_fn, mpfr_digamma)
#undef SECZ_UNARY

Real mpfr_lngamma_fn(const Real& x) {
  Real r;
  mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}
Real ceil(const Real& x) {
  Real r;
  mpfr_ceil(r.raw(), x.raw());
  return r;
}
Real round(const Real& x) {
  Real r;
  mpfr_round(r.raw(), x.raw());
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
Real ldexp(const Real& x, long k) {
  Real r;
  mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}
Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

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
Real const_catalan() {
  Real r;
  mpfr_const_catalan(r.raw(), MPFR_RNDN);
  return r;
}

Real factorial(unsigned long n) {
  Real r;
  mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
  return r;
}
Real binomial(unsigned long n, unsigned long k) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Real(z);
}
bool is_integer(const Real& x) { return mpfr_integer_p(x.raw()) != 0; }

mpq_class to_rational(const Real& x) {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
  mpq_class q(m);
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return q;
}

}  // namespace secz
