// Closed forms for Z at even and nonpositive integers, built on the
// Taylor expansion of log zeta about s = 1/2 and s = 2.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "secz/context.hpp"
#include "secz/jet.hpp"
#include "secz/primes.hpp"
#include "secz/real.hpp"

namespace secz {

enum class LogZetaMethod {
  taylor_jet,    // jets of (s-1) zeta(s), then log; exact pole part
  numeric_diff,  // derivative_num on log|zeta|
  prime_sum,     // Dirichlet series over prime powers, center > 1
  shift_series,  // re-expansion of the jet about s = 2
};

struct LogZetaDerivs {
  Real center;
  LogZetaMethod method = LogZetaMethod::taylor_jet;
  std::vector<RealValue> values;  // values[m-1] = [log zeta]^{(m)}(center)
  Real tail_estimate;             // prime_sum only
};

// Taylor coefficients of log((s-1) zeta(s)) about `center`, at the
// current precision.
Jet log_xi_factor_jet(const Real& center, int order);

RealValue logzeta_deriv(int m, const Real& center, LogZetaMethod method, const PrecisionContext& ctx,
                        const PrimeTable* primes = nullptr);
LogZetaDerivs logzeta_derivs(int order_max, const Real& center, LogZetaMethod method, const PrecisionContext& ctx,
                             const PrimeTable* primes = nullptr);

struct ShiftBracket {
  RealValue value;
  int terms = 0;     // k-sum terms used
  Real last_term;    // magnitude of the last retained term
  bool converged = false;
};

// 2^{2m} - [log zeta(1/2)]^{(2m)}/(2m-1)! from log zeta derivatives at 2.
// K < 0: stop once a term is below 10^{-(target+5)}, at most 400 terms.
ShiftBracket logzeta_shift_bracket(int m, int K, const PrecisionContext& ctx);

enum class VorosForm { hurwitz, zeta_beta };

// Z(2m). Digits are significant digits of a tiny number; certified_digits
// counts decimal places.
RealValue Z_even(int m, const PrecisionContext& ctx, VorosForm form = VorosForm::hurwitz,
                 LogZetaMethod method = LogZetaMethod::taylor_jet);

struct PrimesEstimate {
  RealValue value;
  Real truncation_estimate;  // predicted |error| from the prime cutoff
  Real k_tail_estimate;      // size of the first omitted k term (exact data)
  int K = 0, J = 0;
  std::uint64_t cutoff = 0;
};

// Z(2m) with [log zeta(2)]^{(q)} replaced by truncated prime zeta sums.
PrimesEstimate Z_even_via_primes(int m, int K, int J, const PrimeTable& primes, const PrecisionContext& ctx);
PrimesEstimate Z_even_via_primes(int m, int K, int J, std::uint64_t cutoff, const PrecisionContext& ctx);

mpq_class Z_neg_even(int m);
mpq_class Z_at_zero();
RealValue Z_prime_at_zero(const PrecisionContext& ctx);

}  // namespace secz
