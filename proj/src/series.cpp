#include "secz/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "secz/diff.hpp"
#include "secz/errors.hpp"
#include "secz/gamma.hpp"
#include "secz/jet.hpp"

namespace secz {

const char* to_string(CoeffKind k) {
  switch (k) {
    case CoeffKind::Zderiv: return "Zderiv";
    case CoeffKind::A: return "A";
    case CoeffKind::B: return "B";
    case CoeffKind::C: return "C";
  }
  return "?";
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::adr: return "adr";
    case Provenance::zeros: return "zeros";
    case Provenance::mellin: return "mellin";
    case Provenance::file: return "file";
  }
  return "?";
}

CoeffKind parse_coeff_kind(const std::string& s) {
  if (s == "Zderiv" || s == "Z" || s == "zderiv") return CoeffKind::Zderiv;
  if (s == "A" || s == "a") return CoeffKind::A;
  if (s == "B" || s == "b") return CoeffKind::B;
  if (s == "C" || s == "c") return CoeffKind::C;
  throw Error(ErrorKind::parse, "unknown coefficient kind '" + s + "'");
}

namespace {

// Distance to the nearest simple pole -1, -3, ...
double odd_pole_distance(double a) {
  if (a >= -1.0) return a + 1.0;
  double odd = 2.0 * std::round((a - 1.0) / 2.0) + 1.0;
  return std::fabs(a - odd);
}

// Turns Taylor coefficients into derivatives with per-entry certification.
std::vector<RealValue> to_derivatives(const TaylorResult& tr, long working) {
  std::vector<RealValue> out;
  PrecisionGuard g(tr.internal_digits);
  Real f(1);
  for (std::size_t k = 0; k < tr.coeffs.size(); ++k) {
    if (k > 0) f *= static_cast<long>(k);
    RealValue v;
    v.value = tr.coeffs[k] * f;
    long lost = static_cast<long>(std::ceil(f.log10_abs()));
    v.certified_digits = std::clamp(tr.certified[k] - lost, 0L, working);
    out.push_back(std::move(v));
  }
  return out;
}

long cert_of(const Real& err, long cap) {
  if (err.is_zero()) return cap;
  return std::clamp(static_cast<long>(std::floor(-err.log10_abs())), 0L, cap);
}

SeriesValue sum_series(const Real& h, const CoefficientTable& tbl, int terms) {
  const int n = terms < 0 ? tbl.count() : std::min(terms, tbl.count());
  if (n == 0) throw Error(ErrorKind::domain, "empty coefficient table");
  SeriesValue out;
  Real sum(0), hp(1), fact(1), err(0);
  std::vector<Real> mags;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      hp *= h;
      fact *= static_cast<long>(k);
    }
    const RealValue& c = tbl.values[static_cast<std::size_t>(k)];
    Real t = c.value * hp / fact;
    sum += t;
    mags.push_back(abs(t));
    // Coefficient uncertainty propagated through the term.
    err += pow(Real(10), -c.certified_digits) * abs(hp) / fact;
  }
  out.terms = n;
  out.last_term = mags.back();
  if (n > 10) {
    Real recent = max(mags[static_cast<std::size_t>(n - 1)], mags[static_cast<std::size_t>(n - 2)]);
    Real before = max(mags[static_cast<std::size_t>(n - 11)], mags[static_cast<std::size_t>(n - 12 >= 0 ? n - 12 : 0)]);
    out.diverging = !(recent < before);
  }
  out.value.value = sum;
  out.value.certified_digits = cert_of(err + out.last_term, working_digits());
  return out;
}

void require_kind(const CoefficientTable& t, CoeffKind k) {
  if (t.kind != k)
    throw Error(ErrorKind::domain, std::string("expected a ") + to_string(k) + " table, got " + to_string(t.kind));
}

}  // namespace

CoefficientTable Z_derivs_from_zeros(const Real& a, int m_max, const ZerosDatabase& zeros, const PrecisionContext& ctx) {
  if (!(a > Real(1))) throw Error(ErrorKind::domain, "the zero sum converges only for a > 1");
  if (m_max < 0) throw Error(ErrorKind::domain, "negative order");
  if (zeros.size() == 0) throw Error(ErrorKind::data, "no zeros");
  CoefficientTable tbl;
  tbl.kind = CoeffKind::Zderiv;
  tbl.center = a;
  tbl.provenance = Provenance::zeros;
  PrecisionGuard g(ctx.internal_digits());
  std::vector<Real> sums(static_cast<std::size_t>(m_max + 1), Real(0));
  for (const auto& tv : zeros.t) {
    Real lt = log(tv.value), w = exp(-(a * lt));
    for (int m = 0; m <= m_max; ++m) {
      sums[static_cast<std::size_t>(m)] += w;
      w *= lt;
    }
  }
  // Beyond t_K the zeros have density log(t/2pi)/(2pi).
  const Real U = log(zeros.t.back().value), am1 = a - Real(1), l2p = log(Real(2) * const_pi());
  for (int m = 0; m <= m_max; ++m) {
    Real x = am1 * U;
    Real tail = (upper_incomplete_gamma(Real(m + 2), x) / pow(am1, static_cast<long>(m + 2)) -
                 l2p * upper_incomplete_gamma(Real(m + 1), x) / pow(am1, static_cast<long>(m + 1))) /
                (Real(2) * const_pi());
    RealValue v;
    v.value = m % 2 == 0 ? sums[static_cast<std::size_t>(m)] : -sums[static_cast<std::size_t>(m)];
    v.certified_digits = std::min(cert_of(abs(tail), ctx.working_digits), zeros.min_certified_digits);
    tbl.values.push_back(std::move(v));
  }
  return tbl;
}

CoefficientTable Z_derivs_adr(const Real& a, int m_max, const AdrEvaluator& ev, const PrecisionContext& ctx) {
  DiffOptions opt;
  opt.radius = adr_pole_distance(a.to_double());
  if (opt.radius <= 0) throw Error(ErrorKind::pole, "center is a pole of Z");
  RealFn f = [&ev](const Real& x) { return ev(x); };
  CoefficientTable tbl;
  tbl.kind = CoeffKind::Zderiv;
  tbl.center = a;
  tbl.values = to_derivatives(taylor_coefficients(f, a, m_max, ctx, opt), ctx.working_digits);
  return tbl;
}

CoefficientTable A_coeffs(const Real& a, int m_max, const CoefficientTable& zd) {
  require_kind(zd, CoeffKind::Zderiv);
  if (!(a > Real(1))) throw Error(ErrorKind::domain, "A coefficients from derivatives need a > 1");
  if (zd.center != a) throw Error(ErrorKind::domain, "derivative table centered elsewhere");
  if (zd.count() < m_max + 1) throw Error(ErrorKind::domain, "derivative table too short");
  CoefficientTable tbl;
  tbl.kind = CoeffKind::A;
  tbl.center = a;
  tbl.provenance = zd.provenance;
  const Real am1 = a - Real(1);
  auto Z = [&](int k) -> const RealValue& { return zd.values[static_cast<std::size_t>(k)]; };
  for (int m = 0; m <= m_max; ++m) {
    Real v = am1 * am1 * Z(m).value;
    long cert = Z(m).certified_digits - static_cast<long>(std::ceil(std::max(0.0, 2 * std::log10(am1.to_double()))));
    if (m >= 1) {
      v += Real(2 * m) * am1 * Z(m - 1).value;
      cert = std::min(cert, Z(m - 1).certified_digits - static_cast<long>(std::ceil(std::log10(2.0 * m * am1.to_double()))));
    }
    if (m >= 2) {
      v += Real(static_cast<long>(m) * (m - 1)) * Z(m - 2).value;
      cert = std::min(cert, Z(m - 2).certified_digits - static_cast<long>(std::ceil(std::log10(m * (m - 1.0)))));
    }
    tbl.values.push_back({v, std::max(0L, cert)});
  }
  return tbl;
}

CoefficientTable A_coeffs_adr(const Real& a, int m_max, const AdrEvaluator& ev, const PrecisionContext& ctx) {
  DiffOptions opt;
  opt.radius = odd_pole_distance(a.to_double());
  if (opt.radius <= 0) throw Error(ErrorKind::pole, "center is a pole of (s-1)^2 Z(s)");
  RealFn f = [&ev](const Real& x) {
    Real d = x - Real(1);
    return d.is_zero() ? Real(1) / (Real(2) * const_pi()) : d * d * ev(x);
  };
  CoefficientTable tbl;
  tbl.kind = CoeffKind::A;
  tbl.center = a;
  tbl.values = to_derivatives(taylor_coefficients(f, a, m_max, ctx, opt), ctx.working_digits);
  return tbl;
}

CoefficientTable B_coeffs(const Real& a, int m_max, const CoefficientTable& A, const PrecisionContext& ctx) {
  require_kind(A, CoeffKind::A);
  if (A.center != a) throw Error(ErrorKind::domain, "A table centered elsewhere");
  if (A.count() < m_max + 1) throw Error(ErrorKind::domain, "A table too short");
  PrecisionGuard g(ctx.internal_digits());
  // 1/Gamma((a+1)/2 + e/2) as a Taylor jet in e.
  Jet rg = recip_gamma_jet((a + Real(1)) / 2, Real(0.5), m_max);
  CoefficientTable tbl;
  tbl.kind = CoeffKind::B;
  tbl.center = a;
  tbl.provenance = A.provenance;
  std::vector<Real> fact(static_cast<std::size_t>(m_max + 1));
  fact[0] = Real(1);
  for (int k = 1; k <= m_max; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * static_cast<long>(k);
  for (int n = 0; n <= m_max; ++n) {
    Real c(0), err(0);
    for (int k = 0; k <= n; ++k) {
      const RealValue& ak = A.values[static_cast<std::size_t>(k)];
      Real w = rg[static_cast<std::size_t>(n - k)] / fact[static_cast<std::size_t>(k)];
      c += ak.value * w;
      err += pow(Real(10), -ak.certified_digits) * abs(w);
    }
    Real v = c * fact[static_cast<std::size_t>(n)];
    err *= fact[static_cast<std::size_t>(n)];
    tbl.values.push_back({v, cert_of(err, ctx.working_digits)});
  }
  return tbl;
}

CoefficientTable B_coeffs_adr(const Real& a, int m_max, const AdrEvaluator& ev, const PrecisionContext& ctx) {
  const double ad = a.to_double();
  if (std::fabs(ad - 1.0) < 1e-300 || (ad < 0 && odd_pole_distance(ad) == 0))
    throw Error(ErrorKind::pole, "center must avoid the removable points 1, -1, -3, ...");
  DiffOptions opt;
  // B is entire; the radius only scales the stencil, kept clear of the
  // removable points the evaluator cannot sample.
  opt.radius = std::min(2.0, 0.9 * std::min(std::fabs(ad - 1.0), odd_pole_distance(ad)) / 0.1);
  RealFn f = [&ev](const Real& x) {
    Real d = x - Real(1);
    return d * d * ev(x) * recip_gamma((x + Real(1)) / 2);
  };
  CoefficientTable tbl;
  tbl.kind = CoeffKind::B;
  tbl.center = a;
  tbl.values = to_derivatives(taylor_coefficients(f, a, m_max, ctx, opt), ctx.working_digits);
  return tbl;
}

SeriesValue Z_from_A(const Real& s, const CoefficientTable& tbl, int terms) {
  require_kind(tbl, CoeffKind::A);
  if (s == Real(1)) throw Error(ErrorKind::pole, "double pole at s=1");
  Real h = s - tbl.center;
  SeriesValue v = sum_series(h, tbl, terms);
  if (!(abs(h) < abs(tbl.center + Real(1)))) v.diverging = true;
  Real d = s - Real(1);
  Real scale = Real(1) / (d * d);
  v.value.value *= scale;
  v.value.certified_digits = std::max(0L, v.value.certified_digits - static_cast<long>(std::ceil(std::max(0.0, scale.log10_abs()))));
  return v;
}

SeriesValue Z_from_B(const Real& s, const CoefficientTable& tbl, int terms) {
  require_kind(tbl, CoeffKind::B);
  if (s == Real(1)) throw Error(ErrorKind::pole, "double pole at s=1");
  Real half = (s + Real(1)) / 2;
  if (is_nonpositive_integer(half)) throw Error(ErrorKind::pole, "simple pole at negative odd integer");
  SeriesValue v = sum_series(s - tbl.center, tbl, terms);
  Real d = s - Real(1);
  Real scale = gamma(half) / (d * d);
  v.value.value *= scale;
  v.value.certified_digits = std::max(0L, v.value.certified_digits - static_cast<long>(std::ceil(std::max(0.0, scale.log10_abs()))));
  return v;
}

SeriesValue Z_from_C(const Real& s, const CoefficientTable& tbl, int terms) {
  require_kind(tbl, CoeffKind::C);
  if (s == Real(1)) throw Error(ErrorKind::pole, "double pole at s=1");
  Real d = s - Real(1);
  SeriesValue v = sum_series(d, tbl, terms);
  if (!(abs(d) < Real(2))) v.diverging = true;
  Real two_pi = Real(2) * const_pi();
  v.value.value += Real(1) / (two_pi * d * d) - log(two_pi) / (two_pi * d);
  return v;
}

CoefficientTable laurent_C(int n_max, const AdrEvaluator& ev, const PrecisionContext& ctx) {
  if (n_max < 0) throw Error(ErrorKind::domain, "negative order");
  PrecisionContext c = ctx;
  // The principal parts cancel against Z near 1; sample at 4x precision.
  c.diff_oversample_factor = std::max(c.diff_oversample_factor, 4.0);
  DiffOptions opt;
  opt.radius = 2.0;
  opt.exclude_center = true;
  const long guard = c.guard_digits;
  RealFn g = [&ev, guard](const Real& x) {
    Real d = x - Real(1);
    if (abs(d) < Real("1e-3")) throw Error(ErrorKind::precision, "Laurent stencil too close to s = 1");
    Real two_pi = Real(2) * const_pi();
    Real pp = Real(1) / (two_pi * d * d) - log(two_pi) / (two_pi * d);
    Real z = ev(x);
    Real r = z - pp;
    // Cancellation check: the regular part must survive the subtraction.
    if (!r.is_zero() && abs(z).log10_abs() - abs(r).log10_abs() > static_cast<double>(working_digits() - guard))
      throw Error(ErrorKind::precision, "principal parts cancel below guard digits");
    return r;
  };
  CoefficientTable tbl;
  tbl.kind = CoeffKind::C;
  tbl.center = Real(1);
  tbl.values = to_derivatives(taylor_coefficients(g, Real(1), n_max, c, opt), ctx.working_digits);
  return tbl;
}

RealValue harmonic_H_from_C0(const RealValue& c0) {
  Real l = log(Real(2) * const_pi());
  return {c0.value - l * l / (Real(4) * const_pi()), c0.certified_digits};
}

RealValue C0_from_H(const RealValue& h) {
  Real l = log(Real(2) * const_pi());
  return {h.value + l * l / (Real(4) * const_pi()), h.certified_digits};
}

RealValue harmonic_H(const AdrEvaluator& ev, const PrecisionContext& ctx) {
  CoefficientTable c = laurent_C(0, ev, ctx);
  PrecisionGuard g(ctx.internal_digits());
  return harmonic_H_from_C0(c.values[0]);
}

RealValue H_partial_from_zeros(int k, const ZerosDatabase& zeros, const PrecisionContext& ctx) {
  if (k < 1) throw Error(ErrorKind::domain, "harmonic partial sum needs k >= 1");
  if (static_cast<std::size_t>(k) > zeros.size()) throw Error(ErrorKind::data, "not enough zeros for the partial sum");
  PrecisionGuard g(ctx.internal_digits());
  Real sum(0);
  for (int n = 0; n < k; ++n) sum += Real(1) / zeros.t[static_cast<std::size_t>(n)].value;
  Real l = log(zeros.t[static_cast<std::size_t>(k - 1)].value / (Real(2) * const_pi()));
  RealValue v{sum - l * l / (Real(4) * const_pi()), 0};
  v.certified_digits = std::min(ctx.working_digits, zeros.min_certified_digits);
  return v;
}

}  // namespace secz
