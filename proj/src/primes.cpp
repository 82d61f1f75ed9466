#include "secz/primes.hpp"

#include <algorithm>
#include <cmath>

#include "secz/errors.hpp"
#include "secz/gamma.hpp"

namespace secz {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit > 1000000000ULL) throw Error(ErrorKind::domain, "prime sieve limit above 10^9");
  if (limit < 2) return;
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint32_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
  }
  const std::uint64_t seg = 1 << 18;
  std::vector<bool> mark(seg);
  for (std::uint64_t lo = 2; lo <= limit; lo += seg) {
    std::uint64_t hi = std::min(limit, lo + seg - 1);
    std::fill(mark.begin(), mark.end(), true);
    for (std::uint32_t p : base) {
      std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp > hi) break;
      std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) mark[j - lo] = false;
    }
    for (std::uint64_t n = lo; n <= hi; ++n)
      if (mark[n - lo]) primes_.push_back(static_cast<std::uint32_t>(n));
  }
}

Real von_mangoldt(std::uint64_t n) {
  if (n < 2) return Real(0);
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return log(Real(static_cast<unsigned long>(n)));
  while (n % p == 0) n /= p;
  return n == 1 ? log(Real(static_cast<unsigned long>(p))) : Real(0);
}

PrimeZetaDeriv prime_zeta_deriv(int m, const Real& s, const PrimeTable& table, const PrecisionContext& ctx) {
  if (!(s > Real(1))) throw Error(ErrorKind::domain, "prime zeta derivatives need s > 1");
  if (m < 0) throw Error(ErrorKind::domain, "derivative order must be non-negative");
  PrecisionGuard g(ctx.internal_digits());
  Real sum(0);
  for (std::uint32_t p : table.primes()) {
    Real lp = log(Real(static_cast<unsigned long>(p)));
    Real t = exp(-(s * lp));
    if (m > 0) t *= pow(lp, static_cast<long>(m));
    sum += t;
  }
  if (m % 2 == 1) sum = -sum;
  PrimeZetaDeriv r;
  // integral_X^inf log^m t t^{-s} dt = Gamma(m+1, (s-1) log X) / (s-1)^{m+1}
  Real sm1 = s - Real(1);
  Real X(static_cast<unsigned long>(std::max<std::uint64_t>(table.limit(), 2)));
  r.tail_bound = upper_incomplete_gamma(Real(m + 1), sm1 * log(X)) / pow(sm1, static_cast<long>(m + 1));
  r.value.value = sum;
  double tail = r.tail_bound.log10_abs();
  r.value.certified_digits = std::clamp(static_cast<long>(std::floor(-tail)) - 1, 0L, ctx.working_digits);
  return r;
}

PrimeZetaDeriv prime_zeta_deriv(int m, const Real& s, std::uint64_t cutoff, const PrecisionContext& ctx) {
  return prime_zeta_deriv(m, s, PrimeTable(cutoff), ctx);
}

}  // namespace secz
