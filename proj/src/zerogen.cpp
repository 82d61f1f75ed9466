#include "secz/zerogen.hpp"

#include <algorithm>
#include <cmath>

#include "secz/errors.hpp"
#include "secz/golden.hpp"
#include "secz/voros.hpp"

namespace secz {

namespace {

long cert_of(const Real& err, long cap, long floor_at = 0) {
  if (err.is_zero()) return cap;
  return std::clamp(static_cast<long>(std::floor(-err.log10_abs())), floor_at, cap);
}

// Relative error of a RealValue whose certificate counts decimal places.
Real rel_error(const RealValue& v) {
  if (v.value.is_zero()) return Real(1);
  return pow(Real(10), -v.certified_digits) / abs(v.value);
}

void fill_reference(ExtractionReport& r, const ZerosDatabase* ref) {
  if (!ref || static_cast<std::size_t>(r.n) > ref->size()) return;
  const RealValue& tn = ref->t[static_cast<std::size_t>(r.n - 1)];
  long D = std::min(tn.certified_digits, r.estimate.certified_digits + 10);
  {
    PrecisionGuard g(std::max(working_digits(), D + 20));
    r.matched_digits_vs_reference = agreeing_decimals(r.estimate.value, tn.value.to_fixed(D + 10), D);
  }
  // (sum_{k>=n} t_k^{-2m})^{-1/2m} = t_n (1 + sum_{k>n} (t_n/t_k)^{2m})^{-1/2m}.
  if (static_cast<std::size_t>(r.n) < ref->size()) {
    Real s(0);
    for (std::size_t k = static_cast<std::size_t>(r.n); k < ref->size(); ++k)
      s += pow(tn.value / ref->t[k].value, static_cast<long>(2 * r.m));
    r.limit_digits = cert_of(tn.value * s / static_cast<long>(2 * r.m), 100000);
  }
}

// Shared tail of both recurrences: subtract predecessors, take the root,
// certify. z_rel_err is the relative error of Z(2m).
ExtractionReport finish(int n, int m, const RealValue& z, const Real& z_abs_err, const std::vector<RealValue>& known,
                        const PrecisionContext& ctx, bool strict = true) {
  ExtractionReport r;
  r.n = n;
  r.m = m;
  Real sum(0), err(z_abs_err);
  for (int k = 0; k + 1 < n; ++k) {
    const RealValue& t = known[static_cast<std::size_t>(k)];
    Real p = pow(t.value, static_cast<long>(-2 * m));
    sum += p;
    // d(t^{-2m}) = -2m t^{-2m-1} dt
    err += p * static_cast<long>(2 * m) * pow(Real(10), -t.certified_digits) / t.value;
  }
  Real res = z.value - sum;
  if (!(res > Real(0)))
    throw Error(ErrorKind::precision, "insufficient predecessor precision: residual is not positive");
  r.cancellation_digits = sum.is_zero() ? 0.0 : z.value.log10_abs() - res.log10_abs();
  Real rel = err / res;
  if (strict && !(rel < Real(1)))
    throw Error(ErrorKind::precision, "insufficient predecessor precision: the subtraction consumed every certified digit");
  Real t = exp(-log(res) / static_cast<long>(2 * m));
  // |d t| <= t ((1 - rel)^{-1/2m} - 1), about t rel / 2m when rel is small.
  Real terr = rel < Real(1) ? t * (exp(-log(Real(1) - rel) / static_cast<long>(2 * m)) - Real(1)) : t;
  // Non-strict callers may end up with an error above one unit: negative decimals.
  long cert = cert_of(terr, ctx.working_digits, strict ? 0L : -1000L);
  for (int k = 0; k + 1 < n; ++k)
    if (known[static_cast<std::size_t>(k)].certified_digits <= cert)
      throw Error(ErrorKind::precision, "insufficient predecessor precision: predecessors must carry more digits than the result");
  if (strict && cert < 1) throw Error(ErrorKind::precision, "insufficient predecessor precision");
  t.rebase();
  r.estimate = {t, cert};
  return r;
}

}  // namespace

ExtractionReport extract_first_zero(int m, const PrecisionContext& ctx, const ZerosDatabase* reference) {
  if (m < 1) throw Error(ErrorKind::domain, "m must be >= 1");
  RealValue z = Z_even(m, ctx);
  PrecisionGuard g(ctx.internal_digits());
  ExtractionReport r = finish(1, m, z, abs(z.value) * rel_error(z), {}, ctx);
  r.inputs_provenance = "Z(" + std::to_string(2 * m) + ") closed form";
  fill_reference(r, reference);
  return r;
}

ExtractionReport extract_next_zero(const std::vector<RealValue>& known, int m, const PrecisionContext& ctx,
                                   const ZerosDatabase* reference) {
  if (m < 1) throw Error(ErrorKind::domain, "m must be >= 1");
  if (known.empty()) throw Error(ErrorKind::domain, "the recurrence needs at least one predecessor");
  return extract_next_zero(known, m, Z_even(m, ctx), ctx, reference);
}

ExtractionReport extract_next_zero(const std::vector<RealValue>& known, int m, const RealValue& z2m,
                                   const PrecisionContext& ctx, const ZerosDatabase* reference) {
  if (m < 1) throw Error(ErrorKind::domain, "m must be >= 1");
  if (known.empty()) throw Error(ErrorKind::domain, "the recurrence needs at least one predecessor");
  for (std::size_t k = 1; k < known.size(); ++k)
    if (!(known[k].value > known[k - 1].value)) throw Error(ErrorKind::data, "predecessors must be increasing");
  PrecisionGuard g(ctx.internal_digits());
  const int n = static_cast<int>(known.size()) + 1;
  ExtractionReport r = finish(n, m, z2m, abs(z2m.value) * rel_error(z2m), known, ctx);
  long pmin = known[0].certified_digits;
  for (const auto& k : known) pmin = std::min(pmin, k.certified_digits);
  r.inputs_provenance = "Z(" + std::to_string(2 * m) + ") closed form; " + std::to_string(known.size()) +
                        " predecessors certified to " + std::to_string(pmin) + " decimals";
  fill_reference(r, reference);
  return r;
}

ExtractionReport extract_zero_from_primes(int n, int m, const PrimeTruncation& tr, const std::vector<RealValue>& known,
                                          const PrecisionContext& ctx, const ZerosDatabase* reference) {
  if (n < 1 || m < 1) throw Error(ErrorKind::domain, "n and m must be >= 1");
  if (known.size() + 1 < static_cast<std::size_t>(n)) throw Error(ErrorKind::domain, "not enough predecessors");
  PrimesEstimate pe = Z_even_via_primes(m, tr.K, tr.J, tr.cutoff, ctx);
  PrecisionGuard g(ctx.internal_digits());
  Real trunc = pe.truncation_estimate + pe.k_tail_estimate;
  std::vector<RealValue> pred(known.begin(), known.begin() + (n - 1));
  // The truncation terms estimate rather than bound; a factor 2 covers them.
  // Errors are reported, not rejected: zero digits is a valid outcome here.
  ExtractionReport r = finish(n, m, pe.value, trunc * 2L + pow(Real(10), -ctx.working_digits), pred, ctx, false);
  r.truncation_estimate = trunc;
  Real pred_err(0);
  for (const auto& t : pred)
    pred_err += pow(t.value, static_cast<long>(-2 * m)) * static_cast<long>(2 * m) * pow(Real(10), -t.certified_digits) / t.value;
  r.truncation_dominated = trunc > pred_err;
  r.inputs_provenance = "Z(" + std::to_string(2 * m) + ") from primes <= " + std::to_string(tr.cutoff) +
                        ", K=" + std::to_string(tr.K) + ", J=" + std::to_string(tr.J);
  fill_reference(r, reference);
  return r;
}

}  // namespace secz
