#include "secz/mellin.hpp"

#include <algorithm>
#include <cmath>

#include "secz/errors.hpp"
#include "secz/gamma.hpp"
#include "secz/jet.hpp"
#include "secz/quadrature.hpp"
#include "secz/zeta.hpp"

namespace secz {

void MellinConfig::validate() const {
  if (!(split_point > Real(1) && split_point < Real(4)))
    throw Error(ErrorKind::domain, "split point must lie in (1, 4)");
  // The eta series about t = 1/2 has radius 3.
  if (!(split_point < Real(3.5))) throw Error(ErrorKind::domain, "split point beyond the eta-series radius");
  if (eta_terms < -1) throw Error(ErrorKind::domain, "eta term count must be >= -1");
  if (tail_upper_limit < 0) throw Error(ErrorKind::domain, "negative tail limit");
  for (std::size_t i = 0; i < pv_epsilon_schedule.size(); ++i) {
    if (!(pv_epsilon_schedule[i] > 0 && pv_epsilon_schedule[i] < 0.5))
      throw Error(ErrorKind::domain, "epsilon schedule entries must lie in (0, 1/2)");
    if (i > 0 && !(pv_epsilon_schedule[i] < pv_epsilon_schedule[i - 1]))
      throw Error(ErrorKind::domain, "epsilon schedule must decrease");
  }
  if (pv_epsilon_schedule.size() < 2) throw Error(ErrorKind::domain, "epsilon schedule needs two entries");
}

namespace {

long cert_of(const Real& err, long cap) {
  if (err.is_zero()) return cap;
  return std::clamp(static_cast<long>(std::floor(-err.log10_abs())), 0L, cap);
}

// Digits lost expanding (t-1/2)^n binomially on (0, a).
long binomial_loss(int n, const Real& a) {
  double ad = a.to_double();
  return static_cast<long>(std::ceil(n * std::log10((ad + 0.5) / std::max(ad - 0.5, 0.5)))) + 5;
}

void require_s_below_one(const Real& s) {
  if (!(s < Real(1))) throw Error(ErrorKind::domain, "the split integrals need s < 1");
}

// d[n][k] = int_0^a (t-1/2)^n t^{-s} (-log t)^k dt, by the moments
// J_j^{(k)} = int_0^a t^{j-s} (-log t)^k dt and
// J^{(k)} = a^sig (-log a)^k / sig + (k/sig) J^{(k-1)}, sig = j + 1 - s.
std::vector<std::vector<Real>> delta_table(int n_max, int m_max, const Real& s, const Real& a) {
  PrecisionGuard g(working_digits() + binomial_loss(n_max, a));
  const Real la = log(a), mla = -la, half = Real(1) / 2;
  std::vector<std::vector<Real>> J(static_cast<std::size_t>(n_max + 1));
  for (int j = 0; j <= n_max; ++j) {
    Real sig = Real(j + 1) - s;
    Real as = exp(sig * la) / sig, pw(1);
    auto& row = J[static_cast<std::size_t>(j)];
    row.push_back(as);
    for (int k = 1; k <= m_max; ++k) {
      pw *= mla;
      row.push_back(as * pw + row.back() * static_cast<long>(k) / sig);
    }
  }
  std::vector<std::vector<Real>> d(static_cast<std::size_t>(n_max + 1), std::vector<Real>(static_cast<std::size_t>(m_max + 1)));
  // Binomial rows C(n,j) (-1/2)^{n-j}, built by Pascal's rule.
  std::vector<Real> c{Real(1)};
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      std::vector<Real> nc(static_cast<std::size_t>(n + 1), Real(0));
      for (int j = 0; j < n; ++j) {
        nc[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j)] * half;
        nc[static_cast<std::size_t>(j + 1)] += c[static_cast<std::size_t>(j)];
      }
      c.swap(nc);
    }
    for (int k = 0; k <= m_max; ++k) {
      Real acc(0);
      for (int j = 0; j <= n; ++j) acc += c[static_cast<std::size_t>(j)] * J[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      d[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = acc;
    }
  }
  return d;
}

int auto_eta_terms(const Real& a, long digits) {
  double r = (a.to_double() - 0.5) / 3.0;
  return static_cast<int>(std::ceil((digits + 5.0) / -std::log10(r))) + 10;
}

// -(zeta'/zeta)(x) ~ log 2 * 2^{-x}: neglected tail of the log^k weighted
// integral beyond U, with a factor 2 of headroom.
double tail_log10(double U, double s, int k) {
  return std::log10(2.0 * 0.6931) - (U + 0.5) * 0.30103 - s * std::log10(U) + k * std::log10(std::log(U));
}

Jet strip_first_part(const Real& s0, int order) {
  Jet z = hurwitz_zeta_jet(s0, Real(5) / 4, order);
  Jet p = power_neg(order, Real(2), s0 + Real(1));
  Jet x(order);
  x[0] = const_pi() * s0 / 2;
  if (order >= 1) x[1] = const_pi() / 2;
  Jet sn, cs;
  sincos(x, sn, cs);
  return -(z * p * reciprocal(cs));
}

}  // namespace

RealValue delta_term(int n, int m, const Real& s, const MellinConfig& cfg, const PrecisionContext& ctx) {
  cfg.validate();
  require_s_below_one(s);
  if (n < 0 || m < 0) throw Error(ErrorKind::domain, "negative index");
  PrecisionGuard g(ctx.internal_digits());
  auto d = delta_table(n, m, s, cfg.split_point);
  Real v = d[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
  v.rebase();
  return {v, ctx.working_digits};
}

std::vector<RealValue> I1_derivs(int m_max, const Real& s, const MellinConfig& cfg, const StieltjesStore& store,
                                 const PrecisionContext& ctx) {
  cfg.validate();
  require_s_below_one(s);
  if (m_max < 0) throw Error(ErrorKind::domain, "negative order");
  PrecisionGuard g(ctx.internal_digits());
  int N = cfg.eta_terms;
  if (N < 0) {
    N = auto_eta_terms(cfg.split_point, ctx.internal_digits());
    // Short stores cap the series; the truncation estimate accounts for it.
    N = std::min(N, static_cast<int>(store.values.size()) - 1);
  }
  if (N < 0 || static_cast<std::size_t>(N) >= store.values.size())
    throw Error(ErrorKind::data, "eta shortfall: " + std::to_string(N + 1) + " coefficients requested, " +
                                     std::to_string(store.values.size()) + " Stieltjes constants available");
  std::vector<RealValue> eta = eta_coeffs(N, store, ctx);
  auto d = delta_table(N, m_max, s, cfg.split_point);
  const double r = (cfg.split_point.to_double() - 0.5) / 3.0;
  std::vector<RealValue> out;
  for (int k = 0; k <= m_max; ++k) {
    Real sum(0), last(0);
    long cert = ctx.working_digits;
    for (int n = 0; n <= N; ++n) {
      Real t = eta[static_cast<std::size_t>(n)].value * d[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      sum -= t;
      if (n >= N - 2) last = max(last, abs(t));
      cert = std::min(cert, eta[static_cast<std::size_t>(n)].certified_digits -
                                static_cast<long>(std::ceil(std::max(0.0, abs(d[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]).log10_abs()))));
    }
    sum.rebase();
    Real tail = last * Real(r / (1.0 - r));
    out.push_back({sum, std::min(cert, cert_of(tail, ctx.working_digits))});
  }
  return out;
}

RealValue I1_deriv(int m, const Real& s, const MellinConfig& cfg, const StieltjesStore& store,
                   const PrecisionContext& ctx) {
  return I1_derivs(m, s, cfg, store, ctx)[static_cast<std::size_t>(m)];
}

std::vector<RealValue> I2_derivs(int m_max, const Real& s, const MellinConfig& cfg, const PrecisionContext& ctx,
                                 TailReport* report) {
  cfg.validate();
  if (!(s > Real(0))) throw Error(ErrorKind::domain, "the tail integral needs s > 0");
  if (m_max < 0) throw Error(ErrorKind::domain, "negative order");
  PrecisionGuard g(ctx.internal_digits());
  const long D = ctx.internal_digits();
  const double sd = s.to_double();
  const Real a = cfg.split_point;

  // Upper limit: the configured one, else the level where the integrand
  // is below 10^{-(D+5)}; doubled while the tail estimate is too large.
  double U = cfg.tail_upper_limit;
  if (U <= 0) {
    U = 50;
    for (int it = 0; it < 20; ++it)
      U = ((D + 5) * 2.302585 + m_max * std::log(std::log(U)) - sd * std::log(U)) / 0.693147 - 0.5;
    U = std::max(U, a.to_double() * 2);
  }
  TailReport rep;
  while (tail_log10(U, sd, m_max) > -(D + 5.0)) {
    U *= 2;
    rep.tail_too_short = cfg.tail_upper_limit > 0;
  }
  rep.upper_limit = U;
  rep.tail_estimate = pow(Real(10), Real(tail_log10(U, sd, m_max)));

  const std::size_t count = static_cast<std::size_t>(m_max + 1);
  std::vector<Real> acc(count, Real(0));
  std::vector<long> cert(count, ctx.working_digits);
  VectorFn f = [&](const Real& t, std::vector<Real>& out) {
    Real w = exp(-(s * log(t))) * zeta_log_derivative(Real(1) / 2 + t);
    Real ml = -log(t);
    for (std::size_t k = 0; k < count; ++k) {
      out[k] = w;
      w *= ml;
    }
  };
  QuadratureOptions qo;
  qo.target_digits = D;
  Real lo = a;
  const Real hi_end(U);
  while (lo < hi_end) {
    Real hi = min(lo * 2, hi_end);
    auto part = integrate_finite_many(f, count, lo, hi, ctx, qo);
    for (std::size_t k = 0; k < count; ++k) {
      acc[k] += part[k].value;
      cert[k] = std::min(cert[k], part[k].certified_digits);
    }
    lo = hi;
  }

  // 1/(t-1/2) = sum_j 2^{-j} t^{-j-1} on t > a, with
  // int_a^inf t^{-tau-1} log^k t dt = Gamma(k+1, tau log a) / tau^{k+1}.
  const Real L = log(a), half = Real(1) / 2;
  const double ratio = 1.0 / (2.0 * a.to_double());
  const int J = static_cast<int>(std::ceil((D + 5.0 + m_max) / -std::log10(ratio))) + 5;
  std::vector<Real> pole(count, Real(0));
  Real hj(1);
  for (int j = 0; j <= J; ++j) {
    Real tau = s + Real(j), x = tau * L, ex = exp(-x) / tau;
    // G_k = int_L^inf e^{-tau u} u^k du = (L^k e^{-x} + k G_{k-1}) / tau.
    Real G = ex, Lk(1);
    for (int k = 0; k <= m_max; ++k) {
      if (k > 0) {
        Lk *= L;
        G = (Lk * exp(-x) + G * static_cast<long>(k)) / tau;
      }
      pole[static_cast<std::size_t>(k)] += hj * G;
    }
    hj *= half;
  }
  std::vector<RealValue> out;
  for (std::size_t k = 0; k < count; ++k) {
    Real p = k % 2 == 0 ? pole[k] : -pole[k];
    Real v = acc[k] + p;
    v.rebase();
    out.push_back({v, std::min(cert[k], cert_of(rep.tail_estimate, ctx.working_digits))});
  }
  if (report) *report = rep;
  return out;
}

RealValue I2_deriv(int m, const Real& s, const MellinConfig& cfg, const PrecisionContext& ctx) {
  return I2_derivs(m, s, cfg, ctx)[static_cast<std::size_t>(m)];
}

RealValue Z_strip(const Real& s, const MellinConfig& cfg, const StieltjesStore& store, const PrecisionContext& ctx) {
  if (!(s > Real(0) && s < Real(1))) throw Error(ErrorKind::domain, "the strip representation needs 0 < s < 1");
  CoefficientTable t = Z_strip_derivs(s, 0, cfg, store, ctx);
  return t.values[0];
}

RealValue Z_pv(const Real& s, const MellinConfig& cfg, const PrecisionContext& ctx) {
  cfg.validate();
  if (!(s < Real(1))) throw Error(ErrorKind::domain, "the principal-value form needs s < 1");
  PrecisionGuard g(ctx.internal_digits());
  Real c = cos(const_pi() * s / 2);
  if (abs(c) < pow(Real(10), -(working_digits() - 5))) throw Error(ErrorKind::pole, "simple pole at negative odd integer");
  const Real half = Real(1) / 2;
  RealFn f = [&](const Real& t) { return exp(-(s * log(t))) * zeta_log_derivative(half + t); };
  QuadratureOptions qo;
  qo.target_digits = ctx.internal_digits();
  std::vector<Real> eps, val;
  long cert = ctx.working_digits;
  for (double e : cfg.pv_epsilon_schedule) {
    Real E(e);
    RealValue left = integrate_finite(f, Real(0), half - E, ctx, qo);
    RealValue right = integrate_semi_infinite(f, half + E, ctx, qo);
    cert = std::min({cert, left.certified_digits, right.certified_digits});
    eps.push_back(E);
    val.push_back(left.value + right.value);
  }
  // Neville extrapolation to eps = 0; the last correction estimates the error.
  const std::size_t n = eps.size();
  std::vector<Real> p = val;
  Real prev_est = p[n - 1], est = p[n - 1];
  for (std::size_t lvl = 1; lvl < n; ++lvl) {
    for (std::size_t i = n - 1; i >= lvl; --i) {
      p[i] = (eps[i - lvl] * p[i] - eps[i] * p[i - 1]) / (eps[i - lvl] - eps[i]);
      if (i == lvl) break;
    }
    prev_est = est;
    est = p[n - 1];
  }
  Real err = abs(est - prev_est);
  long ecert = cert_of(err, ctx.working_digits);
  if (ecert < 3) throw Error(ErrorKind::convergence, "epsilon extrapolation did not converge");
  Real sn = sin(const_pi() * s / 2);
  Real z = (-hurwitz_zeta(s, Real(5) / 4) + pow(Real(2), Real(2) * s) * cos(const_pi() * s)) /
               (pow(Real(2), s + Real(1)) * c) +
           sn / const_pi() * est;
  z.rebase();
  return {z, std::min(cert, ecert)};
}

Real strip_trig_weight(int m, int n, const Real& s) {
  if (n < 0 || n > m) return Real(0);
  const int k = m - n;
  Real x = const_pi() * s / 2;
  // sin(x + k pi/2) by k mod 4.
  Real trig;
  switch (k % 4) {
    case 0: trig = sin(x); break;
    case 1: trig = cos(x); break;
    case 2: trig = -sin(x); break;
    default: trig = -cos(x); break;
  }
  return binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(n)) * pow(const_pi() / 2, static_cast<long>(k)) *
         trig / const_pi();
}

CoefficientTable Z_strip_derivs(const Real& s0, int m_max, const MellinConfig& cfg, const StieltjesStore& store,
                                const PrecisionContext& ctx) {
  if (!(s0 > Real(0) && s0 < Real(1))) throw Error(ErrorKind::domain, "the strip representation needs 0 < s < 1");
  auto i1 = I1_derivs(m_max, s0, cfg, store, ctx);
  auto i2 = I2_derivs(m_max, s0, cfg, ctx);
  PrecisionGuard g(ctx.internal_digits());
  Jet z1 = strip_first_part(s0, m_max);
  CoefficientTable tbl;
  tbl.kind = CoeffKind::Zderiv;
  tbl.center = s0;
  tbl.provenance = Provenance::mellin;
  Real fact(1);
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) fact *= static_cast<long>(m);
    Real v = z1[static_cast<std::size_t>(m)] * fact;
    Real err(0);
    for (int n = 0; n <= m; ++n) {
      Real w = strip_trig_weight(m, n, s0);
      const RealValue& a = i1[static_cast<std::size_t>(n)];
      const RealValue& b = i2[static_cast<std::size_t>(n)];
      v += w * (a.value + b.value);
      err += abs(w) * (pow(Real(10), -a.certified_digits) + pow(Real(10), -b.certified_digits));
    }
    v.rebase();
    tbl.values.push_back({v, cert_of(err, ctx.working_digits)});
  }
  return tbl;
}

CoefficientTable Z_half_derivs(int m_max, const MellinConfig& cfg, const StieltjesStore& store,
                               const PrecisionContext& ctx) {
  return Z_strip_derivs(Real(1) / 2, m_max, cfg, store, ctx);
}

CoefficientTable B_coeffs_from_derivs(const CoefficientTable& zd, const PrecisionContext& ctx) {
  if (zd.kind != CoeffKind::Zderiv) throw Error(ErrorKind::domain, "expected a Zderiv table");
  if (zd.center == Real(1)) throw Error(ErrorKind::pole, "derivatives cannot be centered at the double pole");
  const int N = zd.count() - 1;
  PrecisionGuard g(ctx.internal_digits());
  const Real& c = zd.center;
  Jet sq(N);
  sq[0] = (c - Real(1)) * (c - Real(1));
  if (N >= 1) sq[1] = Real(2) * (c - Real(1));
  if (N >= 2) sq[2] = Real(1);
  Jet w = sq * recip_gamma_jet((c + Real(1)) / 2, Real(1) / 2, N);
  std::vector<Real> fact(static_cast<std::size_t>(N + 1));
  fact[0] = Real(1);
  for (int k = 1; k <= N; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * static_cast<long>(k);
  CoefficientTable tbl;
  tbl.kind = CoeffKind::B;
  tbl.center = c;
  tbl.provenance = zd.provenance;
  for (int n = 0; n <= N; ++n) {
    Real acc(0), err(0);
    for (int k = 0; k <= n; ++k) {
      const RealValue& z = zd.values[static_cast<std::size_t>(k)];
      Real wk = w[static_cast<std::size_t>(n - k)] / fact[static_cast<std::size_t>(k)];
      acc += z.value * wk;
      err += pow(Real(10), -z.certified_digits) * abs(wk);
    }
    acc *= fact[static_cast<std::size_t>(n)];
    err *= fact[static_cast<std::size_t>(n)];
    tbl.values.push_back({acc, cert_of(err, ctx.working_digits)});
  }
  return tbl;
}

CoefficientTable B_coeffs_at_half(int n_max, const MellinConfig& cfg, const StieltjesStore& store,
                                  const PrecisionContext& ctx) {
  return B_coeffs_from_derivs(Z_half_derivs(n_max, cfg, store, ctx), ctx);
}

RealValue H_from_B(const CoefficientTable& B, const PrecisionContext& ctx) {
  if (B.kind != CoeffKind::B) throw Error(ErrorKind::domain, "expected a B table");
  if (B.count() < 4) throw Error(ErrorKind::domain, "B table too short");
  PrecisionGuard g(ctx.internal_digits());
  const Real h = Real(1) - B.center;
  const int N = B.count() - 1;
  // b[k] = B^{(k)}(1)/k!, k = 0..2.
  Jet b(2);
  Real err(0), last(0);
  for (int k = 0; k <= 2; ++k) {
    Real sum(0), hn(1), nf(1);
    for (int n = 0; n + k <= N; ++n) {
      if (n > 0) {
        hn *= h;
        nf *= static_cast<long>(n);
      }
      const RealValue& v = B.values[static_cast<std::size_t>(n + k)];
      Real t = v.value * hn / nf;
      sum += t;
      err += pow(Real(10), -v.certified_digits) * abs(hn) / nf;
      if (n + k == N) last = max(last, abs(t));
    }
    b[static_cast<std::size_t>(k)] = sum / factorial(static_cast<unsigned long>(k));
  }
  Jet a = exp(log_gamma_jet(Real(1), Real(1) / 2, 2)) * b;  // (s-1)^2 Z(s) about 1
  RealValue c0{a[2], cert_of(err + last * 10, ctx.working_digits)};
  return harmonic_H_from_C0(c0);
}

RealValue H_via_mellin(const MellinConfig& cfg, const StieltjesStore& store, const PrecisionContext& ctx, int orders) {
  if (orders <= 0) orders = 40;
  return H_from_B(B_coeffs_at_half(orders, cfg, store, ctx), ctx);
}

}  // namespace secz
