// Hurwitz and Riemann zeta by Euler-Maclaurin summation, as jets.
//
// zeta(s0 + e, a) = sum_{n<N} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//                 + sum_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1} + R
// with every piece expanded in e. N and K are chosen in double precision
// to minimise work subject to the remainder bound.
#pragma once

#include <cmath>

#include "secz/context.hpp"
#include "secz/jet.hpp"
#include "secz/real.hpp"

namespace secz {

struct ZetaJetOptions {
  // Return the jet of (s - 1) zeta(s, a), regular at s = 1.
  bool times_s_minus_1 = false;
  // log10 of the absolute error target; NaN: 10^{-digits} relative to the
  // first term a^{-s}.
  double abs_tol_log10 = NAN;
};

Jet hurwitz_zeta_jet(const Real& s0, const Real& a, int order, ZetaJetOptions opt = {});

// Kernels at the current thread precision.
Real hurwitz_zeta(const Real& s, const Real& a);
Real riemann_zeta(const Real& s);
// zeta'(s)/zeta(s) with relative accuracy, s regular and zeta(s) != 0.
Real zeta_log_derivative(const Real& s);
Real dirichlet_beta(const Real& s);

RealValue hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx);
RealValue riemann_zeta(const Real& s, const PrecisionContext& ctx);
RealValue dirichlet_beta(const Real& s, const PrecisionContext& ctx);

}  // namespace secz
