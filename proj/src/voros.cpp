#include "secz/voros.hpp"

#include <algorithm>
#include <cmath>

#include "secz/bernoulli.hpp"
#include "secz/diff.hpp"
#include "secz/errors.hpp"
#include "secz/gamma.hpp"
#include "secz/zeta.hpp"

namespace secz {

namespace {

// Decimal places carried by a value known to `sig` significant digits.
long decimals_for(const Real& v, long sig) {
  if (v.is_zero()) return sig;
  return std::max(0L, sig - 1 - static_cast<long>(std::floor(v.log10_abs())));
}

// m-th derivative of log(s - 1) at c, i.e. (-1)^{m-1} (m-1)!/(c-1)^m.
Real log_pole_deriv(int m, const Real& c) {
  Real v = factorial(static_cast<unsigned long>(m - 1)) / pow(c - Real(1), static_cast<long>(m));
  return m % 2 == 1 ? v : -v;
}

PrecisionContext raised(const PrecisionContext& ctx, long digits) {
  PrecisionContext c = ctx;
  c.working_digits = digits;
  c.quadrature_target_digits = digits;
  return c;
}

// Extra digits lost to the 1/(c-1)^m and m! scale of the pole part.
long pole_scale_digits(int m, const Real& c) {
  double r = std::fabs(c.to_double() - 1.0);
  double d = std::lgamma(static_cast<double>(m)) / std::log(10.0) - m * std::log10(r);
  return static_cast<long>(std::ceil(std::max(0.0, d)));
}

RealValue via_jet(int m, const Real& c, const PrecisionContext& ctx) {
  RealValue out;
  {
    PrecisionGuard g(ctx.internal_digits() + pole_scale_digits(m, c) + 5);
    Real cc = c;
    cc.rebase();
    Jet l = log_xi_factor_jet(cc, m);
    out.value = l.derivative(m) - log_pole_deriv(m, cc);
  }
  out.value.rebase();
  out.certified_digits = decimals_for(out.value, ctx.working_digits);
  return out;
}

RealValue via_numeric(int m, const Real& c, const PrecisionContext& ctx) {
  double cd = c.to_double();
  DiffOptions opt;
  opt.radius = std::min(std::fabs(cd - 1.0), cd + 2.0);
  long scale = pole_scale_digits(m, c);
  opt.target_digits = ctx.working_digits + scale + 2;
  RealFn f = [](const Real& s) { return log(abs(riemann_zeta(s))); };
  PrecisionContext big = raised(ctx, ctx.working_digits + scale);
  RealValue r = derivative_num(f, c, m, big, opt);
  r.certified_digits = std::min(r.certified_digits, decimals_for(r.value, ctx.working_digits));
  return r;
}

RealValue via_primes(int m, const Real& c, const PrimeTable& table, const PrecisionContext& ctx, Real* tail) {
  PrecisionGuard g(ctx.internal_digits());
  const Real eps = pow(Real(10), -ctx.internal_digits());
  Real sum(0);
  for (std::uint32_t p : table.primes()) {
    Real L = log(Real(static_cast<unsigned long>(p)));
    Real Lm = pow(L, static_cast<long>(m));
    Real q = exp(-(c * L));
    Real pn = q;
    for (long n = 1;; ++n) {
      Real t = pn * Lm;
      if (m > 1) t *= pow(Real(n), static_cast<long>(m - 1));
      sum += t;
      if (abs(t) < eps * abs(sum) || n > 100000) break;
      pn *= q;
    }
  }
  if (m % 2 == 1) sum = -sum;
  // Prime powers beyond the table: integral of log^{m-1} t / t^c.
  Real cm1 = c - Real(1);
  Real X(static_cast<unsigned long>(std::max<std::uint64_t>(table.limit(), 2)));
  Real tb = upper_incomplete_gamma(Real(m), cm1 * log(X)) / pow(cm1, static_cast<long>(m));
  if (tail) *tail = tb;
  // The tail integral estimates the error rather than bounding it.
  long cert = static_cast<long>(std::floor(-tb.log10_abs())) - 1;
  return {sum, std::clamp(cert, 0L, ctx.working_digits)};
}

// Number of k terms for (c-2)^k/k! [log f]^{(k+m)}(2) to fall below 10^{-digits}.
int shift_terms(double dist, long digits) {
  double rate = std::log10(4.0 / std::max(dist, 1e-3));
  return std::min(400, static_cast<int>(std::ceil((digits + 5) / rate)) + 10);
}

RealValue via_shift(int m, const Real& c, const PrecisionContext& ctx) {
  const double dist = std::fabs(c.to_double() - 2.0);
  if (dist >= 4.0) throw Error(ErrorKind::domain, "shift series about 2 diverges beyond distance 4");
  RealValue out;
  {
    long scale = pole_scale_digits(m, c);
    int K = shift_terms(dist, ctx.internal_digits() + scale);
    // (c-2)^k amplifies the noise in high jet coefficients.
    long amp = static_cast<long>(std::ceil(K * std::log10(std::max(dist, 1.0))));
    PrecisionGuard g(ctx.internal_digits() + scale + amp + 5);
    Real cc = c;
    cc.rebase();
    Jet l = log_xi_factor_jet(Real(2), m + K);
    // sum_k (c-2)^k/k! (k+m)! l_{k+m} = sum_k C(k+m, k) m! (c-2)^k l_{k+m}
    Real h = cc - Real(2), hk(1), sum(0), binom(1);
    for (int k = 0; k <= K; ++k) {
      sum += binom * hk * l[static_cast<std::size_t>(k + m)];
      hk *= h;
      binom *= static_cast<long>(k + m + 1);
      binom /= static_cast<long>(k + 1);
    }
    out.value = sum * factorial(static_cast<unsigned long>(m)) - log_pole_deriv(m, cc);
  }
  out.value.rebase();
  out.certified_digits = decimals_for(out.value, ctx.working_digits);
  return out;
}

}  // namespace

Jet log_xi_factor_jet(const Real& center, int order) {
  ZetaJetOptions opt;
  opt.times_s_minus_1 = true;
  return log(hurwitz_zeta_jet(center, Real(1), order, opt));
}

RealValue logzeta_deriv(int m, const Real& center, LogZetaMethod method, const PrecisionContext& ctx,
                        const PrimeTable* primes) {
  if (m < 1) throw Error(ErrorKind::domain, "log zeta derivative order must be >= 1");
  if (center == Real(1)) throw Error(ErrorKind::pole, "log zeta is singular at s = 1");
  switch (method) {
    case LogZetaMethod::taylor_jet:
      if (!(center > Real(-2))) throw Error(ErrorKind::domain, "jet route needs center > -2");
      return via_jet(m, center, ctx);
    case LogZetaMethod::numeric_diff:
      if (!(center > Real(0))) throw Error(ErrorKind::domain, "numeric_diff needs center in (0,1) or (1,inf)");
      return via_numeric(m, center, ctx);
    case LogZetaMethod::prime_sum:
      if (!(center > Real(1))) throw Error(ErrorKind::domain, "prime_sum needs center > 1");
      if (!primes) throw Error(ErrorKind::domain, "prime_sum needs a prime table");
      return via_primes(m, center, *primes, ctx, nullptr);
    case LogZetaMethod::shift_series:
      return via_shift(m, center, ctx);
  }
  throw Error(ErrorKind::domain, "unknown log zeta method");
}

LogZetaDerivs logzeta_derivs(int order_max, const Real& center, LogZetaMethod method, const PrecisionContext& ctx,
                             const PrimeTable* primes) {
  LogZetaDerivs out;
  out.center = center;
  out.method = method;
  if (method == LogZetaMethod::taylor_jet && order_max >= 1 && center > Real(-2) && center != Real(1)) {
    // One jet serves every order.
    PrecisionGuard g(ctx.internal_digits() + pole_scale_digits(order_max, center) + 5);
    Real cc = center;
    cc.rebase();
    Jet l = log_xi_factor_jet(cc, order_max);
    for (int m = 1; m <= order_max; ++m) {
      Real v = l.derivative(m) - log_pole_deriv(m, cc);
      out.values.push_back({v, decimals_for(v, ctx.working_digits)});
    }
    return out;
  }
  for (int m = 1; m <= order_max; ++m) {
    if (method == LogZetaMethod::prime_sum) {
      if (!(center > Real(1))) throw Error(ErrorKind::domain, "prime_sum needs center > 1");
      if (!primes) throw Error(ErrorKind::domain, "prime_sum needs a prime table");
      Real tail;
      out.values.push_back(via_primes(m, center, *primes, ctx, &tail));
      out.tail_estimate = tail;
    } else {
      out.values.push_back(logzeta_deriv(m, center, method, ctx, primes));
    }
  }
  return out;
}

ShiftBracket logzeta_shift_bracket(int m, int K, const PrecisionContext& ctx) {
  if (m < 1) throw Error(ErrorKind::domain, "m must be >= 1");
  ShiftBracket r;
  const long target = ctx.working_digits;
  // C(k+2m, k) grows like k^{2m}; leave room for it.
  const int Kmax = K < 0 ? shift_terms(1.5, target + 5 + static_cast<long>(std::ceil(2.0 * m * 2.5))) : K;
  {
    // (3/2)^k amplifies the noise in high jet coefficients.
    PrecisionGuard g(ctx.internal_digits() + 5 + static_cast<long>(std::ceil(Kmax * std::log10(1.5))));
    Jet l = log_xi_factor_jet(Real(2), 2 * m + Kmax);
    const Real tol = pow(Real(10), -(target + 5));
    // term_k = (-3/2)^k/k! (k+2m)! l_{k+2m} / (2m-1)!
    //        = (-3/2)^k C(k+2m, k) 2m l_{k+2m}
    Real coef(2 * m), sum(0), t;
    const Real h(-1.5);
    int k = 0;
    for (; k <= Kmax; ++k) {
      t = coef * l[static_cast<std::size_t>(k + 2 * m)];
      sum += t;
      if (K < 0 && k > 2 && abs(t) < tol) break;
      coef *= h;
      coef *= static_cast<long>(k + 2 * m + 1);
      coef /= static_cast<long>(k + 1);
    }
    r.terms = std::min(k, Kmax) + 1;
    r.last_term = abs(t);
    r.converged = r.last_term < tol;
    r.value.value = -sum;
  }
  r.value.value.rebase();
  r.last_term.rebase();
  long cert = r.converged ? target : static_cast<long>(std::floor(-r.last_term.log10_abs()));
  r.value.certified_digits = std::clamp(cert, 0L, target);
  return r;
}

RealValue Z_even(int m, const PrecisionContext& ctx, VorosForm form, LogZetaMethod method) {
  if (m < 1) throw Error(ErrorKind::domain, "Z_even needs m >= 1");
  const long D = ctx.working_digits;
  // Z(2m) ~ t_1^{-2m}: the bracket cancels down to that size, and the
  // zeta/beta form adds terms of size 2^{2m}.
  long extra = static_cast<long>(std::ceil(2.0 * m * std::log10(14.1347))) + 5;
  if (form == VorosForm::zeta_beta) extra += static_cast<long>(std::ceil(2.0 * m * std::log10(2.0)));
  const long digits = ctx.internal_digits() + extra;
  PrecisionContext big = raised(ctx, digits);
  RealValue out;
  {
    PrecisionGuard g(digits + 5);
    const Real half = Real(1) / 2;
    const Real two_m(2 * m);
    mpz_class f_exact;
    mpz_fac_ui(f_exact.get_mpz_t(), static_cast<unsigned long>(2 * m - 1));
    const Real fact(f_exact);
    Real p2 = ldexp(Real(1), 2 * m);
    Real sign = m % 2 == 0 ? Real(1) : Real(-1);
    if (form == VorosForm::hurwitz) {
      Real bracket;
      if (method == LogZetaMethod::taylor_jet) {
        Jet l = log_xi_factor_jet(half, 2 * m);
        bracket = -two_m * l[static_cast<std::size_t>(2 * m)];
      } else if (method == LogZetaMethod::shift_series) {
        bracket = logzeta_shift_bracket(m, -1, big).value.value;
      } else {
        Real d = logzeta_deriv(2 * m, half, method, big).value;
        bracket = p2 - d / fact;
      }
      Real hz = hurwitz_zeta(two_m, Real(5) / 4) / p2;
      out.value = sign / 2 * (bracket - hz);
    } else {
      Real d = method == LogZetaMethod::taylor_jet ? via_jet(2 * m, half, big).value
                                                   : logzeta_deriv(2 * m, half, method, big).value;
      Real zb = (p2 - Real(1)) * riemann_zeta(two_m) + p2 * dirichlet_beta(two_m);
      out.value = sign * (-d / (Real(2) * fact) - zb / 4 + p2);
    }
  }
  PrecisionGuard g(D + ctx.guard_digits + extra);
  out.value.rebase();
  out.certified_digits = decimals_for(out.value, D);
  return out;
}

PrimesEstimate Z_even_via_primes(int m, int K, int J, const PrimeTable& primes, const PrecisionContext& ctx) {
  if (m < 1) throw Error(ErrorKind::domain, "m must be >= 1");
  if (K < 0 || J < 0) throw Error(ErrorKind::domain, "truncations must be non-negative");
  PrimesEstimate r;
  r.K = K;
  r.J = J;
  r.cutoff = primes.limit();
  PrecisionGuard g(ctx.internal_digits());
  const int qmin = 2 * m, qmax = 2 * m + K;
  const Real eps = pow(Real(10), -ctx.internal_digits());
  // S[q] = sum_{j<=J} j^{q-1} P^{(q)}(2j), the prime form of [log zeta(2)]^{(q)}.
  std::vector<Real> S(static_cast<std::size_t>(K + 1), Real(0));
  for (std::uint32_t p : primes.primes()) {
    Real L = log(Real(static_cast<unsigned long>(p)));
    Real w2 = exp(-(Real(2) * L));
    Real w = w2;
    for (int j = 1; j <= J; ++j) {
      Real jL = Real(j) * L;
      // j^{q-1} L^q w = (jL)^q w / j
      Real t = pow(jL, static_cast<long>(qmin)) * w / Real(j);
      if (t * pow(max(jL, Real(1)), static_cast<long>(K)) < eps) break;
      for (int k = 0; k <= K; ++k) {
        S[static_cast<std::size_t>(k)] += t;
        t *= jL;
      }
      w *= w2;
    }
  }
  for (int k = 0; k <= K; ++k)
    if ((k + qmin) % 2 == 1) S[static_cast<std::size_t>(k)] = -S[static_cast<std::size_t>(k)];
  mpz_class f_exact;
  mpz_fac_ui(f_exact.get_mpz_t(), static_cast<unsigned long>(2 * m - 1));
  const Real fact(f_exact);
  Real sum(0), c(1);  // c = (3/2)^k / k!
  Real trunc(0);
  const Real logX = log(Real(static_cast<unsigned long>(std::max<std::uint64_t>(primes.limit(), 2))));
  for (int k = 0; k <= K; ++k) {
    const int q = k + qmin;
    Real fq = factorial(static_cast<unsigned long>(q - 1));
    Real inner = S[static_cast<std::size_t>(k)] - (k % 2 == 0 ? fq : -fq);
    Real term = c * inner;
    sum += k % 2 == 0 ? -term : term;
    // Missing prime powers above the cutoff: all k contributions share a sign.
    trunc += c * upper_incomplete_gamma(Real(q), logX);
    c *= Real(1.5);
    c /= static_cast<long>(k + 1);
  }
  // The j-sum remainder, dominated by p = 2 at j = J+1.
  Real jtail(0);
  {
    const Real L2 = const_log2();
    Real cc(1);
    for (int k = 0; k <= K; ++k) {
      const int q = k + qmin;
      Real jj(J + 1);
      jtail += cc * pow(jj, static_cast<long>(q - 1)) * pow(L2, static_cast<long>(q)) * exp(-(Real(2 * (J + 1)) * L2));
      cc *= Real(1.5);
      cc /= static_cast<long>(k + 1);
    }
  }
  Real hz = hurwitz_zeta(Real(2 * m), Real(5) / 4) / ldexp(Real(1), 2 * m);
  Real sign = m % 2 == 0 ? Real(1) : Real(-1);
  r.value.value = sign / 2 * (sum / fact - hz);
  r.truncation_estimate = (trunc + jtail) / (Real(2) * fact);
  // First omitted k term with exact log zeta data.
  {
    Jet l = log_xi_factor_jet(Real(2), qmax + 1);
    Real coef = pow(Real(1.5), static_cast<long>(K + 1)) / factorial(static_cast<unsigned long>(K + 1));
    r.k_tail_estimate = abs(coef * l.derivative(qmax + 1)) / (Real(2) * fact);
  }
  Real err = max(r.truncation_estimate, r.k_tail_estimate);
  long cert = err.is_zero() ? ctx.working_digits : static_cast<long>(std::floor(-err.log10_abs()));
  r.value.certified_digits = std::clamp(cert, 0L, ctx.working_digits);
  return r;
}

PrimesEstimate Z_even_via_primes(int m, int K, int J, std::uint64_t cutoff, const PrecisionContext& ctx) {
  return Z_even_via_primes(m, K, J, PrimeTable(cutoff), ctx);
}

mpq_class Z_neg_even(int m) {
  if (m < 1) throw Error(ErrorKind::domain, "Z_neg_even needs m >= 1");
  mpz_class p4;
  mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(m));
  mpq_class v = (mpq_class(1) - mpq_class(euler_number(static_cast<unsigned>(2 * m)), 8)) / mpq_class(p4);
  v.canonicalize();
  return m % 2 == 0 ? v : mpq_class(-v);
}

mpq_class Z_at_zero() { return mpq_class(7, 8); }

RealValue Z_prime_at_zero(const PrecisionContext& ctx) {
  RealValue out;
  {
    PrecisionGuard g(ctx.internal_digits());
    Real num = exp(Real(11) / 4 * const_log2()) * sqrt(const_pi());
    Real den = gamma(Real(1) / 4) * abs(riemann_zeta(Real(1) / 2));
    out.value = log(num / den) / 2;
  }
  out.value.rebase();
  out.certified_digits = ctx.working_digits;
  return out;
}

}  // namespace secz
