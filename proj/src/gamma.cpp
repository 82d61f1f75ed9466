#include "secz/gamma.hpp"

#include <cmath>

#include "secz/errors.hpp"
#include "secz/zeta.hpp"

namespace secz {

namespace {

Real exp_integral_e1(const Real& x) {
  // E_1(x) = -gamma - log x - sum_{n>=1} (-x)^n / (n n!); cancellation of
  // about x/ln 10 digits is absorbed by the caller's guard.
  Real sum(0), term(1), eps = pow(Real(10), -(working_digits() + 5));
  for (long n = 1;; ++n) {
    term *= -x;
    term /= n;
    Real t = term / n;
    sum += t;
    if (abs(t) < eps * (abs(sum) + Real(1))) break;
  }
  return -const_euler() - log(x) - sum;
}

// Legendre continued fraction by modified Lentz; valid for all s if x > 0.
Real incgamma_cf(const Real& s, const Real& x) {
  const Real tiny = pow(Real(10), -(4 * working_digits()));
  const Real eps = pow(Real(10), -(working_digits() + 3));
  Real b = x + Real(1) - s;
  Real c = Real(1) / tiny;
  Real d = Real(1) / b;
  Real h = d;
  for (long i = 1; i < 2000000; ++i) {
    Real an = -(Real(i) * (Real(i) - s));
    b += Real(2);
    d = an * d + b;
    if (abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (abs(c) < tiny) c = tiny;
    d = Real(1) / d;
    Real del = d * c;
    h *= del;
    if (abs(del - Real(1)) < eps) return exp(s * log(x) - x) * h;
  }
  throw Error(ErrorKind::convergence, "incomplete gamma continued fraction did not converge");
}

// Gamma(s) - x^s e^{-x} sum x^n / (s)_{n+1}; s not a nonpositive integer.
Real incgamma_series(const Real& s, const Real& x, double& loss_digits) {
  const Real eps = pow(Real(10), -(working_digits() + 3));
  Real term = Real(1) / s;
  Real sum = term;
  for (long n = 1; n < 10000000; ++n) {
    term *= x;
    term /= s + Real(n);
    sum += term;
    if (abs(term) < eps * abs(sum)) break;
  }
  Real lower = exp(s * log(x) - x) * sum;
  Real g = gamma(s);
  Real r = g - lower;
  double big = std::max(g.log10_abs(), lower.log10_abs());
  loss_digits = r.is_zero() ? static_cast<double>(working_digits()) : std::max(0.0, big - r.log10_abs());
  return r;
}

}  // namespace

bool is_nonpositive_integer(const Real& x) { return x <= Real(0) && is_integer(x); }

Real gamma(const Real& x) {
  if (is_nonpositive_integer(x)) throw Error(ErrorKind::pole, "Gamma has a pole at a non-positive integer");
  return mpfr_gamma_fn(x);
}

Real recip_gamma(const Real& x) {
  if (is_nonpositive_integer(x)) return Real(0);
  return Real(1) / mpfr_gamma_fn(x);
}

Real upper_incomplete_gamma(const Real& s, const Real& x) {
  if (!(x > Real(0))) throw Error(ErrorKind::domain, "incomplete gamma needs x > 0");
  const long D = working_digits();
  if (is_nonpositive_integer(s)) {
    long k = -s.to_long();
    PrecisionGuard g(D + static_cast<long>(x.to_double() / 2.3) + 10);
    Real xx = x;
    xx.rebase();
    Real v = x.to_double() > 2.0 ? incgamma_cf(Real(0), xx) : exp_integral_e1(xx);
    // Gamma(s, x) = (Gamma(s+1, x) - x^s e^{-x}) / s, stepping down from s = 0.
    for (long j = 1; j <= k; ++j) v = (v - exp(-(Real(j) * log(xx)) - xx)) / Real(-j);
    return v;
  }
  const double xd = x.to_double();
  const double bits10 = D * 2.302585;
  const double cf_iters = bits10 * bits10 / (16.0 * xd) + 10.0;
  double n = std::max(2.0, 2.0 * xd);
  while (n * std::log(n / (2.718281828 * xd)) < bits10 + xd) n *= 1.2;
  const double series_cost = n * (1.0 + xd / 2.302585 / D);
  if (cf_iters <= series_cost) return incgamma_cf(s, x);
  double loss = 0;
  long guard = static_cast<long>(xd / 2.302585) + 10;
  for (int attempt = 0; attempt < 3; ++attempt) {
    PrecisionGuard g(D + guard);
    Real ss = s, xx = x;
    ss.rebase();
    xx.rebase();
    Real r = incgamma_series(ss, xx, loss);
    if (loss + 5 < static_cast<double>(guard)) return r;
    guard = static_cast<long>(loss) + 15;
  }
  throw Error(ErrorKind::precision, "incomplete gamma series lost too many digits");
}

RealValue gamma(const Real& x, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx.internal_digits());
  return {gamma(x), ctx.working_digits};
}

RealValue recip_gamma(const Real& x, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx.internal_digits());
  return {recip_gamma(x), ctx.working_digits};
}

RealValue upper_incomplete_gamma(const Real& s, const Real& x, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx.internal_digits());
  return {upper_incomplete_gamma(s, x), ctx.working_digits};
}

Jet log_gamma_jet(const Real& z0, const Real& scale, int order) {
  if (!(z0 > Real(0))) throw Error(ErrorKind::domain, "log-gamma jet needs a positive expansion point");
  Jet r(order);
  r[0] = mpfr_lngamma_fn(z0);
  if (order >= 1) r[1] = mpfr_digamma_fn(z0) * scale;
  Real sp = scale;
  for (int k = 2; k <= order; ++k) {
    sp *= scale;
    Real t = hurwitz_zeta(Real(k), z0) * sp / k;
    r[static_cast<std::size_t>(k)] = (k % 2 == 0) ? t : -t;
  }
  return r;
}

Jet recip_gamma_jet(const Real& z0, const Real& scale, int order) {
  if (z0 > Real(0)) return exp(-log_gamma_jet(z0, scale, order));
  // 1/Gamma(z) = Gamma(1 - z) sin(pi z) / pi.
  Jet g = exp(log_gamma_jet(Real(1) - z0, -scale, order));
  Real pi = const_pi();
  Jet arg(order, pi * z0);
  if (order >= 1) arg[1] = pi * scale;
  Jet s, c;
  sincos(arg, s, c);
  Jet r = g * s;
  r /= pi;
  return r;
}

}  // namespace secz
