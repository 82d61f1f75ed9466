#include "secz/diff.hpp"

#include <algorithm>
#include <cmath>

#include "secz/errors.hpp"

namespace secz {

namespace {

double log10_binomial(int n, int k) {
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(10.0);
}

// Monomial coefficients (degrees 0..m) of the Newton form over the first
// `count` nodes.
std::vector<Real> newton_to_monomial(const std::vector<Real>& d, const std::vector<Real>& u, int count, int m) {
  std::vector<Real> c(static_cast<std::size_t>(m + 1), Real(0));
  c[0] = d[static_cast<std::size_t>(count - 1)];
  Real t;
  for (int k = count - 2; k >= 0; --k) {
    const Real& uk = u[static_cast<std::size_t>(k)];
    for (int j = m; j >= 0; --j) {
      mpfr_mul(t.raw(), c[static_cast<std::size_t>(j)].raw(), uk.raw(), MPFR_RNDN);
      if (j > 0)
        mpfr_sub(c[static_cast<std::size_t>(j)].raw(), c[static_cast<std::size_t>(j - 1)].raw(), t.raw(), MPFR_RNDN);
      else
        mpfr_neg(c[0].raw(), t.raw(), MPFR_RNDN);
    }
    c[0] += d[static_cast<std::size_t>(k)];
  }
  return c;
}

}  // namespace

TaylorResult taylor_coefficients(const RealFn& f, const Real& x0, int m_max, const PrecisionContext& ctx,
                                 DiffOptions opt) {
  if (m_max < 0) throw Error(ErrorKind::domain, "derivative order must be non-negative");
  const long target = (opt.target_digits > 0 ? opt.target_digits : ctx.working_digits) + 5;
  const double rho = 0.1;
  const double span = rho * opt.radius;

  // Points needed for the interpolation error C(n, j) rho^(n-j) to fall
  // below the target for every order j <= m_max.
  int n = m_max + 2;
  for (;; ++n) {
    bool ok = true;
    for (int j = std::max(0, m_max - 3); j <= m_max; ++j)
      if (log10_binomial(n, j) + (n - j) * std::log10(rho) > -static_cast<double>(target) - 2.0) ok = false;
    if (ok) break;
  }
  int K = opt.exclude_center ? (n + 1) / 2 : n / 2;
  n = opt.exclude_center ? 2 * K : 2 * K + 1;
  const double h = span / K;
  const double amplification = m_max * std::log10(opt.radius / h) + n * std::log10(2.0);
  long internal = target + static_cast<long>(std::ceil(amplification)) + ctx.guard_digits;
  internal = std::max(internal, static_cast<long>(std::ceil(ctx.working_digits * ctx.diff_oversample_factor)));
  if (internal > 20 * ctx.working_digits)
    throw Error(ErrorKind::precision, "step underflow: differentiation needs more than 20x working precision");

  PrecisionGuard g(internal);
  Real x = x0;
  x.rebase();
  Real hh = Real(span) / K;

  // Nodes ordered outward (0, 1, -1, 2, -2, ...) so dropping the last two
  // gives the next smaller symmetric stencil.
  std::vector<Real> u;
  if (opt.exclude_center) {
    for (int k = 0; k < K; ++k) {
      u.emplace_back(k + 0.5);
      u.emplace_back(-(k + 0.5));
    }
  } else {
    u.emplace_back(0);
    for (int k = 1; k <= K; ++k) {
      u.emplace_back(static_cast<long>(k));
      u.emplace_back(static_cast<long>(-k));
    }
  }
  std::vector<Real> d(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Real xi = x + u[i] * hh;
    d[i] = f(xi);
    d[i].rebase();
    if (!d[i].is_finite()) throw Error(ErrorKind::domain, "function not finite on the differentiation stencil");
  }
  const int np = static_cast<int>(u.size());
  for (int k = 1; k < np; ++k)
    for (int i = np - 1; i >= k; --i) {
      d[static_cast<std::size_t>(i)] -= d[static_cast<std::size_t>(i - 1)];
      d[static_cast<std::size_t>(i)] /= u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i - k)];
    }

  const int m_eff = std::min(m_max, np - 1);
  auto full = newton_to_monomial(d, u, np, m_eff);
  auto sub = newton_to_monomial(d, u, np - 2, std::min(m_eff, np - 3));

  TaylorResult r;
  r.internal_digits = internal;
  r.points = np;
  Real scale(1);
  Real inv_h = Real(1) / hh;
  for (int j = 0; j <= m_max; ++j) {
    Real cj(0), diff(0);
    if (j <= m_eff) {
      cj = full[static_cast<std::size_t>(j)] * scale;
      Real sj = j < static_cast<int>(sub.size()) ? sub[static_cast<std::size_t>(j)] * scale : Real(0);
      diff = abs(cj - sj);
    }
    scale *= inv_h;
    long cert = diff.is_zero() ? target - 5 : static_cast<long>(std::floor(-diff.log10_abs()));
    r.certified.push_back(std::clamp(cert, 0L, ctx.working_digits));
    r.coeffs.push_back(std::move(cj));
  }
  return r;
}

RealValue derivative_num(const RealFn& f, const Real& x0, int m, const PrecisionContext& ctx, DiffOptions opt) {
  if (m == 0 && !opt.exclude_center) {
    PrecisionGuard g(ctx.internal_digits());
    RealValue v{f(x0), ctx.working_digits};
    return v;
  }
  auto t = taylor_coefficients(f, x0, m, ctx, opt);
  PrecisionGuard g(t.internal_digits);
  Real fm = factorial(static_cast<unsigned long>(m));
  RealValue v;
  v.value = t.coeffs[static_cast<std::size_t>(m)] * fm;
  double lost = fm.log10_abs();
  v.certified_digits = std::max(0L, t.certified[static_cast<std::size_t>(m)] - static_cast<long>(std::ceil(lost)));
  return v;
}

}  // namespace secz
