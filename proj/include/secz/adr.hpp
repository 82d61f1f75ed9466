// Analytic continuation of Z(s) = sum t_n^{-s} by splitting the Mellin
// integral of sum exp(-t_n^2 x) at x = a:
//
//   Z(s) = A(s) - P(s) + E(s) - S(s)
//
// A sums regularized incomplete gammas over zeros, P over prime powers,
// E is a rapidly convergent exponential series and S carries the double
// pole at 1 and the simple poles at negative odd integers.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "secz/context.hpp"
#include "secz/diff.hpp"
#include "secz/real.hpp"

namespace secz {

struct ZerosDatabase {
  std::vector<RealValue> t;  // t[0] = t_1
  long min_certified_digits = 0;
  std::string source_path;
  std::size_t size() const { return t.size(); }
};

// Validates ordering, the first zero and per-entry certified decimals.
ZerosDatabase load_zeros(const std::string& path, long min_digits = 0);

struct AdrParams {
  Real a = Real(0.015);
  int N = 100;                 // Bernoulli-polynomial terms in S
  int zero_count = 40;         // zeros in A
  std::uint64_t mangoldt_limit = 100;
  int e_terms = 300;
};

// Parameters reaching ~`digits` correct digits; zero_count is capped by
// the database.
AdrParams tuned_params(long digits, const ZerosDatabase& zeros);

struct AdrTerms {
  Real A, P, E, S;
  Real truncation_estimate;  // sum of first-omitted-term magnitudes
};

RealValue theta_direct(const Real& x, const ZerosDatabase& zeros, int count, const PrecisionContext& ctx);

// Stateless evaluator; thread-safe. All methods compute at the thread
// precision in force.
class AdrEvaluator {
 public:
  AdrEvaluator(AdrParams p, const ZerosDatabase& zeros);

  const AdrParams& params() const { return p_; }

  Real prime_term(const Real& s, Real* tail = nullptr) const;
  // Throws ErrorKind::pole at s = -2k unless `limit` is set.
  Real exp_term(const Real& s, bool limit = false, Real* tail = nullptr) const;
  Real singular_term(const Real& s, bool limit = false, Real* tail = nullptr) const;
  Real zeros_term(const Real& s, Real* tail = nullptr) const;

  // Removable values at s = -2k are taken as limits; poles throw.
  AdrTerms terms(const Real& s, bool limits = true) const;
  Real operator()(const Real& s) const;

 private:
  const std::vector<Real>& s_coeffs() const;

  AdrParams p_;
  const ZerosDatabase* zeros_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

RealValue adr_P(const Real& s, const AdrParams& p, const PrecisionContext& ctx);
RealValue adr_E(const Real& s, const AdrParams& p, const PrecisionContext& ctx);
RealValue adr_S(const Real& s, const AdrParams& p, const PrecisionContext& ctx);
RealValue adr_A(const Real& s, const AdrParams& p, const ZerosDatabase& zeros, const PrecisionContext& ctx);

// A - P + E - S. Nonpositive even integers are rejected; callers route
// them to closed forms or use AdrEvaluator's limits.
RealValue Z_adr(const Real& s, const AdrParams& p, const ZerosDatabase& zeros, const PrecisionContext& ctx);

// Distance from s to the nearest pole {1, -1, -3, ...}.
double adr_pole_distance(double s);

RealValue Z_adr_deriv(const Real& s, int m, const AdrParams& p, const ZerosDatabase& zeros,
                      const PrecisionContext& ctx);
// Taylor coefficients Z^{(k)}(s)/k!, k = 0..m_max, from one stencil.
TaylorResult Z_adr_taylor(const Real& s, int m_max, const AdrParams& p, const ZerosDatabase& zeros,
                          const PrecisionContext& ctx);

struct Anchor {
  Real s;
  Real value;
};

struct Calibration {
  AdrParams params;
  long matched_digits = 0;
  std::vector<long> scores;  // per candidate, worst anchor
};

// Anchors default to the closed forms Z(2), Z(4) and Z(0) when empty.
Calibration calibrate(const std::vector<AdrParams>& candidates, const ZerosDatabase& zeros,
                      const PrecisionContext& ctx, std::vector<Anchor> anchors = {}, long min_digits = 0);

// Digits of agreement: floor(-log10 |x - ref| / max(|ref|, 1)).
long matching_digits(const Real& x, const Real& ref);

}  // namespace secz
