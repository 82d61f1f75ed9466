#include "secz/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "secz/bernoulli.hpp"
#include "secz/errors.hpp"

namespace secz {

namespace {

struct EmPlan {
  long N = 0;
  long K = 0;
  long guard = 0;
};

// Chooses N (direct terms) and K (Bernoulli pairs) for absolute error
// 10^tol on every jet coefficient up to `order`.
EmPlan plan_euler_maclaurin(double sigma, double a, int order, double tol) {
  const double l2pi = std::log10(2.0 * M_PI);
  EmPlan best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (double nd = 1.0; nd < 2.0e6; nd = std::max(nd + 1.0, std::floor(nd * 1.12))) {
    const double x = nd + a;
    const double lx = std::log10(x);
    const double L = std::log(x);
    double poch = 0.0, harm = 0.0;  // log10 |(s)_{2k-1}| bound, derivative growth
    long K = -1;
    double prev = std::numeric_limits<double>::infinity();
    for (long k = 1; k < 200000; ++k) {
      for (long i = 2 * k - 2 - (k == 1 ? 0 : 1); i <= 2 * k - 2; ++i) {
        double f = std::fabs(sigma + static_cast<double>(i)) + 1.0;
        poch += std::log10(f);
        harm += 1.0 / f;
      }
      const double growth = std::min(order * std::log10(L + harm + 1.0), (L + harm) / 2.302585);
      const double term = std::log10(2.0) - 2.0 * k * l2pi + poch - (sigma + 2.0 * k - 1.0) * lx + growth;
      if (term < tol) {
        K = k - 1;
        break;
      }
      if (term > prev && k > 3) break;  // asymptotic series turned; N too small
      prev = term;
    }
    if (K < 0) continue;
    const double cost = nd * (order + 25.0) + static_cast<double>(K) * (3.0 * order + 10.0);
    if (cost < best_cost) {
      best_cost = cost;
      best.N = static_cast<long>(nd);
      best.K = K;
      best.guard = static_cast<long>(std::ceil(std::max(0.0, (1.0 - sigma) * lx))) + 5;
    } else if (cost > 4.0 * best_cost) {
      break;
    }
  }
  if (best.N == 0) throw Error(ErrorKind::convergence, "no Euler-Maclaurin plan reaches the requested accuracy");
  return best;
}

}  // namespace

Jet hurwitz_zeta_jet(const Real& s0_in, const Real& a_in, int order, ZetaJetOptions opt) {
  if (!(a_in > Real(0))) throw Error(ErrorKind::domain, "Hurwitz zeta needs a > 0");
  if (!opt.times_s_minus_1 && s0_in == Real(1)) throw Error(ErrorKind::pole, "zeta has a pole at s = 1");
  const long D = working_digits();
  const mpfr_prec_t outer = working_bits();
  const double sigma = s0_in.to_double();
  const double ad = a_in.to_double();
  double tol = opt.abs_tol_log10;
  if (std::isnan(tol)) tol = -static_cast<double>(D + 2) - sigma * std::log10(ad);
  EmPlan plan = plan_euler_maclaurin(sigma, ad, order, tol);

  Jet out;
  {
    PrecisionGuard g(D + plan.guard);
    Real s0 = s0_in, a = a_in;
    s0.rebase();
    a.rebase();
    Jet direct(order);
    Real base, L, p, mL;
    for (long n = 0; n < plan.N; ++n) {
      base = a + Real(n);
      L = log(base);
      p = exp(-(s0 * L));
      mL = -L;
      for (int j = 0; j <= order; ++j) {
        direct[static_cast<std::size_t>(j)] += p;
        if (j < order) {
          p *= mL;
          p /= static_cast<long>(j + 1);
        }
      }
    }
    Real x = a + Real(plan.N);
    Real x2 = x * x;
    Jet xs = power_neg(order, x, s0);

    Jet q(order, s0, true);
    q /= x;
    Jet bern(order);
    for (long k = 1; k <= plan.K; ++k) {
      const Real& b = bernoulli_over_factorial(static_cast<unsigned>(k));
      for (int j = 0; j <= order; ++j) bern[static_cast<std::size_t>(j)] += b * q[static_cast<std::size_t>(j)];
      if (k < plan.K) {
        q.mul_linear(s0 + Real(2 * k - 1), Real(1));
        q.mul_linear(s0 + Real(2 * k), Real(1));
        q /= x2;
      }
    }
    Jet regular = direct;
    Jet half = xs;
    half /= Real(2);
    regular += half;
    regular += bern * xs;
    Jet tail = power_neg(order, x, s0 - Real(1));
    if (opt.times_s_minus_1) {
      regular.mul_linear(s0 - Real(1), Real(1));
      regular += tail;
    } else {
      regular += tail * inverse_linear(order, s0 - Real(1));
    }
    out = std::move(regular);
  }
  auto g = PrecisionGuard::bits(outer);
  for (auto& c : out.coeffs()) c.rebase();
  return out;
}

Real hurwitz_zeta(const Real& s, const Real& a) { return hurwitz_zeta_jet(s, a, 0)[0]; }

Real riemann_zeta(const Real& s) { return hurwitz_zeta(s, Real(1)); }

Real zeta_log_derivative(const Real& s) {
  ZetaJetOptions opt;
  const double sigma = s.to_double();
  const double D = static_cast<double>(working_digits());
  if (sigma > std::max(D, 20.0)) {
    // -sum Lambda(n) n^{-s}; terms past n are (2/n)^sigma below the first.
    const long n_max = static_cast<long>(2.0 * std::pow(10.0, (D + 5.0) / sigma)) + 1;
    Real acc(0);
    for (long n = 2; n <= n_max; ++n) {
      long p = 2;
      while (n % p != 0) ++p;
      long m = n;
      while (m % p == 0) m /= p;
      if (m == 1) acc += log(Real(p)) * exp(-(s * log(Real(n))));
    }
    return -acc;
  }
  // zeta'(s) ~ -log 2 * 2^{-s} for large s; ask for accuracy relative to it.
  opt.abs_tol_log10 = -(D + 3.0) + std::min(0.0, std::log10(0.69314718) - std::max(sigma, 0.0) * 0.30103);
  Jet j = hurwitz_zeta_jet(s, Real(1), 1, opt);
  return j[1] / j[0];
}

Real dirichlet_beta(const Real& s) {
  const Real q1 = Real(1) / 4, q3 = Real(3) / 4;
  if (s == Real(1)) {
    // Both Hurwitz values have a unit residue; use (s-1) zeta(s, a) jets.
    ZetaJetOptions opt;
    opt.times_s_minus_1 = true;
    Jet j1 = hurwitz_zeta_jet(s, q1, 1, opt);
    Jet j3 = hurwitz_zeta_jet(s, q3, 1, opt);
    return (j1[1] - j3[1]) / 4;
  }
  return pow(Real(4), -s) * (hurwitz_zeta(s, q1) - hurwitz_zeta(s, q3));
}

RealValue hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx.internal_digits());
  return {hurwitz_zeta(s, a), ctx.working_digits};
}

RealValue riemann_zeta(const Real& s, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx.internal_digits());
  return {riemann_zeta(s), ctx.working_digits};
}

RealValue dirichlet_beta(const Real& s, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx.internal_digits());
  return {dirichlet_beta(s), ctx.working_digits};
}

}  // namespace secz
