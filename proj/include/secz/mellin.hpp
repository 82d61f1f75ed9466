// Z(s) in the strip 0 < s < 1 from the Mellin-transform representation
//
//   Z(s) = -zeta(s,5/4) / (2^{s+1} cos(pi s/2)) + sin(pi s/2)/pi * I(s),
//   I(s) = int_0^inf t^{-s} [zeta'/zeta(1/2+t) + 1/(t-1/2)] dt,
//
// with I split at t = a. On (0, a) the bracket is -sum eta_n (t-1/2)^n,
// which removes both the t = 0 and t = 1/2 difficulties; the tail is a
// plain integral. Derivatives at s = 1/2 give B-coefficients about 1/2 and
// an H value that does not depend on ADR or on the zeros.
#pragma once

#include <vector>

#include "secz/context.hpp"
#include "secz/real.hpp"
#include "secz/series.hpp"
#include "secz/stieltjes.hpp"

namespace secz {

struct MellinConfig {
  Real split_point = Real(2);  // a, in (1, 4); the eta series needs a < 7/2
  int eta_terms = -1;          // highest eta index; -1: sized from the target digits
  double tail_upper_limit = 0; // 0: sized from the target digits, doubled until the tail clears
  std::vector<double> pv_epsilon_schedule = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};

  void validate() const;
};

// m-th s-derivative of int_0^a (t-1/2)^n t^{-s} dt, s < 1.
RealValue delta_term(int n, int m, const Real& s, const MellinConfig& cfg, const PrecisionContext& ctx);

// I_1^{(k)}(s) = -sum_n eta_n delta_n^{(k)}(s), k = 0..m_max.
std::vector<RealValue> I1_derivs(int m_max, const Real& s, const MellinConfig& cfg, const StieltjesStore& store,
                                 const PrecisionContext& ctx);
RealValue I1_deriv(int m, const Real& s, const MellinConfig& cfg, const StieltjesStore& store,
                   const PrecisionContext& ctx);

struct TailReport {
  double upper_limit = 0;
  Real tail_estimate;  // largest neglected tail over the orders
  bool tail_too_short = false;
};

// I_2^{(k)}(s) = (-1)^k int_a^inf t^{-s} log^k t [zeta'/zeta(1/2+t) + 1/(t-1/2)] dt.
std::vector<RealValue> I2_derivs(int m_max, const Real& s, const MellinConfig& cfg, const PrecisionContext& ctx,
                                 TailReport* report = nullptr);
RealValue I2_deriv(int m, const Real& s, const MellinConfig& cfg, const PrecisionContext& ctx);

// 0 < s < 1.
RealValue Z_strip(const Real& s, const MellinConfig& cfg, const StieltjesStore& store, const PrecisionContext& ctx);

// Principal-value form, any s < 1 off the poles; eps -> 0 by extrapolation.
RealValue Z_pv(const Real& s, const MellinConfig& cfg, const PrecisionContext& ctx);

// Weight of I^{(n)}(s) in the m-th derivative of sin(pi s/2) I(s)/pi:
// C(m,n) (pi/2)^{m-n} sin(pi s/2 + (m-n) pi/2) / pi, which is +-sin or
// +-cos by the parity of m+n.
Real strip_trig_weight(int m, int n, const Real& s);

// Z^{(m)}(s0), m = 0..m_max, for s0 in (0, 1).
CoefficientTable Z_strip_derivs(const Real& s0, int m_max, const MellinConfig& cfg, const StieltjesStore& store,
                                const PrecisionContext& ctx);
CoefficientTable Z_half_derivs(int m_max, const MellinConfig& cfg, const StieltjesStore& store,
                               const PrecisionContext& ctx);

// Leibniz combination of (s-1)^2, 1/Gamma((s+1)/2) and a Zderiv table.
CoefficientTable B_coeffs_from_derivs(const CoefficientTable& zd, const PrecisionContext& ctx);
CoefficientTable B_coeffs_at_half(int n_max, const MellinConfig& cfg, const StieltjesStore& store,
                                  const PrecisionContext& ctx);

// H from a B table centered in (0, 1): re-expand about 1, multiply by
// Gamma((s+1)/2), read C_0 off the (s-1)^2 coefficient.
RealValue H_from_B(const CoefficientTable& B, const PrecisionContext& ctx);
// orders <= 0: 40.
RealValue H_via_mellin(const MellinConfig& cfg, const StieltjesStore& store, const PrecisionContext& ctx,
                       int orders = 0);

}  // namespace secz
